#include "genset/erasure.hpp"

#include <bit>

namespace genset {

bool is_stopping_set(const BinMatrix& rows, const ErasurePattern& e) {
  if (rows.cols != e.n) throw ParamError("is_stopping_set: length mismatch");
  if (e.empty()) throw ParamError("is_stopping_set: empty pattern");
  for (u64 row : rows.row_bits)
    if (std::popcount(row & e.mask) == 1) return false;
  return true;
}

PeelResult peel_decode(const BinMatrix& rows, const ErasurePattern& e) {
  if (rows.cols != e.n) throw ParamError("peel_decode: length mismatch");
  PeelResult res;
  u64 mask = e.mask;
  for (;;) {
    bool progressed = false;
    for (int r = 0; r < rows.rows(); ++r) {
      u64 hit = rows.row_bits[static_cast<size_t>(r)] & mask;
      if (std::popcount(hit) != 1) continue;
      int pos = std::countr_zero(hit);
      mask &= ~hit;
      res.resolved.push_back(pos + 1);
      res.used_rows.push_back(r);
      progressed = true;
      break;  // restart at the lowest-index row
    }
    if (!progressed) break;
  }
  res.residual = ErasurePattern(e.n, mask);
  return res;
}

namespace {

// next w-subset mask in ascending order (Gosper)
u64 next_subset_mask(u64 v) {
  u64 t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

std::optional<int> stopping_distance(const BinMatrix& rows,
                                     std::optional<int> cutoff) {
  if (rows.rows() == 0) throw ParamError("stopping_distance: no rows");
  int n = rows.cols;
  if (n < 1) throw ParamError("stopping_distance: zero length");
  int top = cutoff ? std::min(*cutoff, n) : n;
  if (!cutoff && n > 24)
    throw BudgetError("stopping_distance", u64{1} << n, u64{1} << 24);
  for (int w = 1; w <= top; ++w) {
    u64 mask = (u64{1} << w) - 1;
    u64 last = mask << (n - w);
    for (;;) {
      bool stopping = true;
      for (u64 row : rows.row_bits) {
        if (std::popcount(row & mask) == 1) {
          stopping = false;
          break;
        }
      }
      if (stopping) return w;
      if (mask == last) break;
      mask = next_subset_mask(mask);
    }
  }
  return std::nullopt;
}

namespace {

// columns of m selected by mask, order preserved
BinMatrix column_select(const BinMatrix& m, u64 mask) {
  BinMatrix out(m.rows(), std::popcount(mask));
  for (int r = 0; r < m.rows(); ++r) {
    u64 w = m.row_bits[static_cast<size_t>(r)];
    u64 packed = 0;
    int outc = 0;
    u64 rest = mask;
    while (rest) {
      int c = std::countr_zero(rest);
      rest &= rest - 1;
      packed |= static_cast<u64>((w >> c) & 1u) << outc;
      ++outc;
    }
    out.row_bits[static_cast<size_t>(r)] = packed;
  }
  return out;
}

}  // namespace

bool is_correctable(const BinMatrix& h, const ErasurePattern& e) {
  if (h.cols != e.n) throw ParamError("is_correctable: length mismatch");
  if (rank_of(h) != h.rows())
    throw ParamError("is_correctable: dependent check rows");
  if (e.empty()) return true;
  // columns independent <=> rank = column count
  return rank_of(column_select(h, e.mask)) == e.size();
}

bool correctable_by_codewords(const LinearCode& c, const ErasurePattern& e,
                              int max_k) {
  if (c.n != e.n) throw ParamError("correctable_by_codewords: length mismatch");
  bool ok = true;
  enumerate_codewords(c, [&](const BitVector& cw) {
    if ((cw.bits & ~e.mask) == 0) {
      ok = false;
      return false;
    }
    return true;
  }, max_k);
  return ok;
}

std::optional<BitVector> ml_erasure_decode(const BinMatrix& h,
                                           const BitVector& word,
                                           const ErasurePattern& e) {
  if (h.cols != e.n || word.dim != e.n)
    throw ParamError("ml_erasure_decode: length mismatch");
  if (e.empty()) {
    if (!mat_vec(h, word).is_zero())
      throw DataError("ml_erasure_decode: word fails the checks");
    return word;
  }
  BitVector known(word.bits & ~e.mask, e.n);
  BinMatrix sub = column_select(h, e.mask);
  // solve sub * z = h * known for the erased bits z
  auto z = solve(sub, mat_vec(h, known));
  if (!z) throw DataError("ml_erasure_decode: unerased part inconsistent");
  if (nullspace(sub).rows() > 0) return std::nullopt;  // several completions
  u64 bits = known.bits;
  u64 rest = e.mask;
  int zi = 0;
  while (rest) {
    int c = std::countr_zero(rest);
    rest &= rest - 1;
    if (z->get(zi)) bits |= u64{1} << c;
    ++zi;
  }
  return BitVector(bits, e.n);
}

std::pair<int, int> min_max_distance(const LinearCode& c, int max_k) {
  if (c.k < 1) throw ParamError("min_max_distance: dimension zero");
  int lo = c.n + 1, hi = 0;
  enumerate_codewords(c, [&](const BitVector& cw) {
    int w = cw.weight();
    if (w < lo) lo = w;
    if (w > hi) hi = w;
    return true;
  }, max_k);
  return {lo, hi};
}

namespace {

LinearCode restriction_code(const BinMatrix& g, u64 mask) {
  BinMatrix sel = column_select(g, mask);
  return code_from_generator(rank_rref(sel).rref);
}

}  // namespace

SupportDecomposition support_decompose(const LinearCode& c, const BitVector& v) {
  if (v.dim != c.n) throw ParamError("support_decompose: length mismatch");
  if (v.is_zero()) throw ParamError("support_decompose: zero codeword");
  if (!c.contains(v)) throw ParamError("support_decompose: not a codeword");
  u64 supp = v.bits;
  u64 comp = ((c.n == kMaxDim) ? ~u64{0} >> 1 : (u64{1} << c.n) - 1) & ~supp;

  SupportDecomposition out;
  out.restricted = restriction_code(c.generator, supp);
  out.complement = restriction_code(c.generator, comp);

  // complete the all-ones word (v seen inside its support) to a basis of the
  // restriction, taking RREF rows first-come
  int w = v.weight();
  u64 ones = (w == kMaxDim) ? ~u64{0} >> 1 : (u64{1} << w) - 1;
  BinMatrix span(0, w);
  span.push_row_bits(ones);
  BinMatrix completion(0, w);
  for (int r = 0; r < out.restricted.generator.rows(); ++r) {
    u64 row = out.restricted.generator.row_bits[static_cast<size_t>(r)];
    span.push_row_bits(row);
    if (rank_of(span) < span.rows()) {
      span.row_bits.pop_back();
    } else {
      completion.push_row_bits(row);
    }
  }
  out.subcode = code_from_generator(completion);
  return out;
}

BinMatrix apply_generic_set(const VectorSet& a, const BinMatrix& h) {
  if (a.ambient != h.rows())
    throw ParamError("apply_generic_set: dimension mismatch");
  if (rank_of(h) != h.rows())
    throw ParamError("apply_generic_set: check matrix not full rank");
  BinMatrix out(0, h.cols);
  for (const auto& v : a.members) out.push_row(vec_mat(v, h));
  return out;
}

BecReport bec_simulate(const std::vector<BecStrategy>& strategies,
                       const LinearCode& code, double p, u64 trials, u64 seed) {
  if (p < 0.0 || p > 1.0) throw ParamError("bec_simulate: p outside [0,1]");
  for (const auto& st : strategies) {
    if (st.rows.cols != code.n)
      throw DataError("bec_simulate: strategy length mismatch");
    for (int r = 0; r < st.rows.rows(); ++r)
      if (!mat_vec(code.generator, st.rows.row(r)).is_zero())
        throw DataError("bec_simulate: strategy row outside the dual code");
  }
  BecReport rep;
  rep.n = code.n;
  rep.k = code.k;
  rep.p = p;
  rep.trials = trials;
  rep.seed = seed;
  rep.peel_failures.reserve(strategies.size());
  for (const auto& st : strategies) rep.peel_failures.emplace_back(st.name, 0);

  for (u64 t = 0; t < trials; ++t) {
    SplitMix rng = derived_stream(seed, t);
    u64 mask = 0;
    for (int i = 0; i < code.n; ++i)
      if (rng.next_unit() < p) mask |= u64{1} << i;
    ErasurePattern e(code.n, mask);
    if (!is_correctable(code.parity_check, e)) ++rep.ml_failures;
    for (size_t s = 0; s < strategies.size(); ++s)
      if (!peel_decode(strategies[s].rows, e).success())
        ++rep.peel_failures[s].second;
  }
  return rep;
}

}  // namespace genset
