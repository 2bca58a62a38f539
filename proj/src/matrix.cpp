#include "genset/matrix.hpp"

#include <bit>

namespace genset {

BinMatrix identity_matrix(int n) {
  BinMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinMatrix transpose(const BinMatrix& m) {
  BinMatrix t(m.cols, m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    u64 w = m.row_bits[static_cast<size_t>(r)];
    while (w) {
      int c = std::countr_zero(w);
      w &= w - 1;
      t.set(c, r, true);
    }
  }
  return t;
}

BitVector vec_mat(const BitVector& x, const BinMatrix& m) {
  if (x.dim != m.rows()) throw ParamError("vec_mat: dimension mismatch");
  u64 acc = 0;
  u64 w = x.bits;
  while (w) {
    int r = std::countr_zero(w);
    w &= w - 1;
    acc ^= m.row_bits[static_cast<size_t>(r)];
  }
  return BitVector(acc, m.cols);
}

BitVector mat_vec(const BinMatrix& m, const BitVector& x) {
  if (x.dim != m.cols) throw ParamError("mat_vec: dimension mismatch");
  BitVector out(0, m.rows());
  for (int r = 0; r < m.rows(); ++r)
    if (parity(m.row_bits[static_cast<size_t>(r)] & x.bits)) out.set(r, true);
  return out;
}

BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols != b.rows()) throw ParamError("mat_mul: shape mismatch");
  BinMatrix out(a.rows(), b.cols);
  for (int r = 0; r < a.rows(); ++r) {
    u64 w = a.row_bits[static_cast<size_t>(r)];
    u64 acc = 0;
    while (w) {
      int i = std::countr_zero(w);
      w &= w - 1;
      acc ^= b.row_bits[static_cast<size_t>(i)];
    }
    out.row_bits[static_cast<size_t>(r)] = acc;
  }
  return out;
}

RrefResult rank_rref(const BinMatrix& m) {
  std::vector<u64> rows = m.row_bits;
  RrefResult res;
  res.rref.cols = m.cols;
  size_t next = 0;
  for (int c = 0; c < m.cols && next < rows.size(); ++c) {
    size_t pr = next;
    while (pr < rows.size() && !((rows[pr] >> c) & 1u)) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[next], rows[pr]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != next && ((rows[r] >> c) & 1u)) rows[r] ^= rows[next];
    res.pivot_cols.push_back(c);
    ++next;
  }
  res.rank = static_cast<int>(next);
  res.rref.row_bits.assign(rows.begin(), rows.begin() + next);
  return res;
}

BinMatrix nullspace(const BinMatrix& m) {
  RrefResult rr = rank_rref(m);
  u64 pivot_mask = 0;
  for (int c : rr.pivot_cols) pivot_mask |= u64{1} << c;
  BinMatrix basis(0, m.cols);
  // One basis vector per free column: set the free column, read pivot
  // entries off the RREF rows.
  for (int c = 0; c < m.cols; ++c) {
    if ((pivot_mask >> c) & 1u) continue;
    u64 v = u64{1} << c;
    for (int r = 0; r < rr.rank; ++r)
      if ((rr.rref.row_bits[static_cast<size_t>(r)] >> c) & 1u)
        v |= u64{1} << rr.pivot_cols[static_cast<size_t>(r)];
    basis.push_row_bits(v);
  }
  return rank_rref(basis).rref;  // canonicalize
}

BitVector canonical_coset_rep(const BitVector& x, const RrefResult& basis) {
  if (x.dim != basis.rref.cols) throw ParamError("coset rep: dimension mismatch");
  u64 v = x.bits;
  for (int r = 0; r < basis.rank; ++r)
    if ((v >> basis.pivot_cols[static_cast<size_t>(r)]) & 1u)
      v ^= basis.rref.row_bits[static_cast<size_t>(r)];
  return BitVector(v, x.dim);
}

bool in_rowspace(const BitVector& x, const RrefResult& basis) {
  return canonical_coset_rep(x, basis).is_zero();
}

std::optional<BitVector> solve(const BinMatrix& m, const BitVector& b) {
  if (b.dim != m.rows()) throw ParamError("solve: rhs dimension mismatch");
  if (m.cols >= kMaxDim) throw ParamError("solve: too many columns");
  // Eliminate on [m | b] with b in the top spare bit column.
  const int bc = m.cols;
  BinMatrix aug(m.rows(), bc + 1);
  for (int r = 0; r < m.rows(); ++r)
    aug.row_bits[static_cast<size_t>(r)] =
        m.row_bits[static_cast<size_t>(r)] | (static_cast<u64>(b.get(r)) << bc);
  RrefResult rr = rank_rref(aug);
  for (int r = 0; r < rr.rank; ++r) {
    u64 w = rr.rref.row_bits[static_cast<size_t>(r)];
    if ((w >> bc) & 1u && (w & ((u64{1} << bc) - 1)) == 0) return std::nullopt;
  }
  u64 x = 0;
  for (int r = 0; r < rr.rank; ++r) {
    if (rr.pivot_cols[static_cast<size_t>(r)] == bc) continue;
    if ((rr.rref.row_bits[static_cast<size_t>(r)] >> bc) & 1u)
      x |= u64{1} << rr.pivot_cols[static_cast<size_t>(r)];
  }
  // x solves the system with free coordinates zero; reduce to the coset
  // canonical form so ties break to the lexicographically least solution.
  RrefResult null_rr = rank_rref(nullspace(m));
  return canonical_coset_rep(BitVector(x, m.cols), null_rr);
}

}  // namespace genset
