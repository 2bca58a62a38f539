#include "genset/code.hpp"

#include <bit>

namespace genset {

namespace {

void check_code(const LinearCode& c) {
  if (c.n < 0 || c.n > kMaxDim) throw ParamError("LinearCode: bad length");
  if (c.k < 0 || c.k > c.n) throw ParamError("LinearCode: bad dimension");
  if (c.generator.rows() != c.k || c.generator.cols != c.n ||
      c.parity_check.rows() != c.n - c.k || c.parity_check.cols != c.n)
    throw ParamError("LinearCode: shape mismatch");
  for (int r = 0; r < c.generator.rows(); ++r)
    if (!mat_vec(c.parity_check, c.generator.row(r)).is_zero())
      throw ParamError("LinearCode: generator row not orthogonal to checks");
}

}  // namespace

LinearCode code_from_generator(const BinMatrix& g) {
  if (rank_of(g) != g.rows())
    throw ParamError("code_from_generator: dependent rows");
  LinearCode c;
  c.n = g.cols;
  c.k = g.rows();
  c.generator = g;
  c.parity_check = nullspace(g);
  check_code(c);
  return c;
}

LinearCode code_from_parity_check(const BinMatrix& h) {
  if (rank_of(h) != h.rows())
    throw ParamError("code_from_parity_check: dependent rows");
  LinearCode c;
  c.n = h.cols;
  c.k = h.cols - h.rows();
  c.generator = nullspace(h);
  c.parity_check = h;
  check_code(c);
  return c;
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  return a.n == b.n &&
         rank_rref(a.generator).rref == rank_rref(b.generator).rref;
}

namespace {

void walk_row_space(const BinMatrix& rows, int max_k,
                    const std::function<bool(const BitVector&)>& cb) {
  int k = rows.rows();
  if (k > max_k)
    throw BudgetError("codeword walk", u64{1} << k, u64{1} << max_k);
  u64 cw = 0;
  for (u64 msg = 1; msg < (u64{1} << k); ++msg) {
    // message ascends by 1; the codeword changes by the rows of the flipped
    // message bits, which are exactly the bits of (msg-1) ^ msg
    u64 flips = msg ^ (msg - 1);
    while (flips) {
      cw ^= rows.row_bits[static_cast<size_t>(std::countr_zero(flips))];
      flips &= flips - 1;
    }
    if (!cb(BitVector(cw, rows.cols))) return;
  }
}

}  // namespace

void enumerate_codewords(const LinearCode& c,
                         const std::function<bool(const BitVector&)>& cb,
                         int max_k) {
  walk_row_space(c.generator, max_k, cb);
}

void enumerate_dual_codewords(const LinearCode& c,
                              const std::function<bool(const BitVector&)>& cb,
                              int max_r) {
  walk_row_space(c.parity_check, max_r, cb);
}

LinearCode repetition_code(int n) {
  if (n < 1 || n > kMaxDim) throw ParamError("repetition_code: bad length");
  BinMatrix g(1, n);
  g.row_bits[0] = (n == kMaxDim) ? (~u64{0} >> 1) : ((u64{1} << n) - 1);
  return code_from_generator(g);
}

LinearCode single_parity_code(int n) {
  if (n < 2 || n > kMaxDim) throw ParamError("single_parity_code: bad length");
  BinMatrix h(1, n);
  h.row_bits[0] = (n == kMaxDim) ? (~u64{0} >> 1) : ((u64{1} << n) - 1);
  return code_from_parity_check(h);
}

namespace {

// m x (2^m - 1) matrix whose column j (0-based) is the binary expansion of
// j+1, coordinate 1 in row 0.
BinMatrix all_nonzero_columns(int m) {
  if (m < 1 || (1 << m) - 1 > kMaxDim)
    throw ParamError("column matrix: length exceeds packed word");
  int n = (1 << m) - 1;
  BinMatrix a(m, n);
  for (int c = 0; c < n; ++c) {
    u64 v = static_cast<u64>(c) + 1;
    for (int r = 0; r < m; ++r)
      if ((v >> r) & 1u) a.set(r, c, true);
  }
  return a;
}

}  // namespace

LinearCode hamming_code(int m) {
  if (m < 2) throw ParamError("hamming_code: need m >= 2");
  return code_from_parity_check(all_nonzero_columns(m));
}

LinearCode extended_hamming_code(int m) {
  if (m < 2 || (1 << m) > kMaxDim)
    throw ParamError("extended_hamming_code: bad m");
  BinMatrix base = all_nonzero_columns(m);
  int n = (1 << m);
  BinMatrix h(m + 1, n);
  for (int r = 0; r < m; ++r)
    h.row_bits[static_cast<size_t>(r)] = base.row_bits[static_cast<size_t>(r)];
  // overall parity row covers every position including the added one
  h.row_bits[static_cast<size_t>(m)] = (u64{1} << n) - 1;
  return code_from_parity_check(h);
}

LinearCode simplex_code(int k) {
  if (k < 1) throw ParamError("simplex_code: need k >= 1");
  return code_from_generator(all_nonzero_columns(k));
}

LinearCode punctured_simplex_code(int k) {
  if (k < 2) throw ParamError("punctured_simplex_code: need k >= 2");
  BinMatrix full = all_nonzero_columns(k);
  int n = full.cols - 1;  // drop the all-ones column, the lex-greatest
  BinMatrix g(k, n);
  for (int r = 0; r < k; ++r) {
    u64 w = full.row_bits[static_cast<size_t>(r)];
    int out = 0;
    for (int c = 0; c < full.cols; ++c) {
      if (c == full.cols - 1) continue;
      if ((w >> c) & 1u) g.set(r, out, true);
      ++out;
    }
  }
  return code_from_generator(g);
}

LinearCode random_code(int n, int k, u64 seed) {
  if (n < 1 || n > kMaxDim || k < 1 || k > n)
    throw ParamError("random_code: bad parameters");
  SplitMix rng(seed);
  return code_from_generator(random_full_rank(k, n, rng));
}

}  // namespace genset
