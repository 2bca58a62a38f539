// Dense GF(2) matrices, one 64-bit word per row. Everything at desk scale
// (<= 63 columns), so a row is a single word and elimination is word XOR.

#pragma once

#include <optional>
#include <vector>

#include "genset/bits.hpp"

namespace genset {

struct BinMatrix {
  std::vector<u64> row_bits;
  int cols = 0;

  BinMatrix() = default;
  BinMatrix(int rows, int cols) : row_bits(static_cast<size_t>(rows), 0), cols(cols) {
    if (rows < 0 || cols < 0 || cols > kMaxDim)
      throw ParamError("BinMatrix: bad shape");
  }

  int rows() const { return static_cast<int>(row_bits.size()); }

  bool get(int r, int c) const { return (row_bits[static_cast<size_t>(r)] >> c) & 1u; }
  void set(int r, int c, bool v) {
    u64& w = row_bits[static_cast<size_t>(r)];
    w = v ? (w | (u64{1} << c)) : (w & ~(u64{1} << c));
  }

  BitVector row(int r) const { return BitVector(row_bits[static_cast<size_t>(r)], cols); }
  void push_row(const BitVector& v) {
    if (v.dim != cols) throw ParamError("push_row: dimension mismatch");
    row_bits.push_back(v.bits);
  }
  void push_row_bits(u64 bits) { row_bits.push_back(bits); }

  u64 column_mask(int c) const {
    u64 m = 0;
    for (int r = 0; r < rows(); ++r)
      if (get(r, c)) m |= u64{1} << r;
    return m;
  }

  friend bool operator==(const BinMatrix& a, const BinMatrix& b) {
    return a.cols == b.cols && a.row_bits == b.row_bits;
  }
  friend bool operator!=(const BinMatrix& a, const BinMatrix& b) { return !(a == b); }
};

BinMatrix identity_matrix(int n);
BinMatrix transpose(const BinMatrix& m);

// Row vector times matrix: x (1 x rows) * m (rows x cols).
BitVector vec_mat(const BitVector& x, const BinMatrix& m);
// Matrix times column vector: m (rows x cols) * x (cols x 1).
BitVector mat_vec(const BinMatrix& m, const BitVector& x);
BinMatrix mat_mul(const BinMatrix& a, const BinMatrix& b);

struct RrefResult {
  BinMatrix rref;              // zero rows dropped
  std::vector<int> pivot_cols; // ascending, 0-based
  int rank = 0;
};

// Reduced row echelon form, scanning columns left to right (coordinate 1
// first). Unique for a given row space, so it doubles as a canonical form.
RrefResult rank_rref(const BinMatrix& m);

inline int rank_of(const BinMatrix& m) { return rank_rref(m).rank; }

// Canonical basis of {x : m x^T = 0}, returned in RREF. Full column rank
// gives a valid empty basis (0 x cols).
BinMatrix nullspace(const BinMatrix& m);

// One solution of m x^T = b^T, or nullopt when inconsistent. Among all
// solutions returns the lexicographically least (text order), which is the
// unique solution vanishing on the pivot columns of the nullspace basis.
std::optional<BitVector> solve(const BinMatrix& m, const BitVector& b);

// Reduce x to the canonical representative of x + rowspace(rref_basis):
// XOR away pivots so the result vanishes on all pivot columns. That
// representative is the lexicographically least coset member.
BitVector canonical_coset_rep(const BitVector& x, const RrefResult& basis);

bool in_rowspace(const BitVector& x, const RrefResult& basis);

}  // namespace genset
