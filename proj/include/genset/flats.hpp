// Subspaces and cosets of F_2^m, Gaussian binomials, canonical enumeration.
//
// A Flat is a coset rep + RREF(basis) pair. The representative is canonical:
// the lexicographically least coset member, equivalently the unique member
// vanishing on all pivot columns of the basis. rep == 0 iff the flat is a
// subspace.
//
// Enumeration order (fixed, documented, relied on by certificates):
//   subspaces of dimension t: pivot column sets in lexicographic order
//     ({1,2,..} first), then free entries as a binary counter, position
//     (row i, col j) in row-major order with the first free position least
//     significant.
//   flats: per subspace in the order above, representatives in increasing
//     packed value (coordinate 1 least significant) over the non-pivot
//     columns, rep 0 (the subspace itself) first.

#pragma once

#include <functional>
#include <vector>

#include "genset/matrix.hpp"
#include "genset/rng.hpp"

namespace genset {

using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

// Gaussian binomial [m choose k]_q, exact. Throws std::overflow_error when
// the value leaves 128 bits, ParamError for bad arguments ((m,0) = 1).
u128 gaussian_coefficient(int m, int k, u64 q = 2);

// Same, narrowed; std::overflow_error if it does not fit u64.
u64 gaussian_coefficient_u64(int m, int k, u64 q = 2);

struct Flat {
  int m = 0;        // ambient dimension
  BinMatrix basis;  // t x m, RREF
  BitVector rep;    // canonical: zero on pivot columns

  int dim() const { return basis.rows(); }
  bool is_subspace() const { return rep.is_zero(); }
  bool contains(const BitVector& x) const;
  // All 2^t points, Gray-code order starting at rep.
  std::vector<BitVector> points() const;

  friend bool operator==(const Flat& a, const Flat& b) {
    return a.m == b.m && a.basis == b.basis && a.rep == b.rep;
  }
};

// Canonical flat through x with direction rowspace(basis).
Flat make_flat(int m, const BinMatrix& basis_any, const BitVector& x);

// Streaming enumerators; the callback returning false stops early.
// enumerate_subspaces visits gaussian(m,t) subspaces, enumerate_flats visits
// every coset (2^(m-t) per subspace, subspace itself first).
void enumerate_subspaces(int m, int t, const std::function<bool(const Flat&)>& cb);
void enumerate_flats(int m, int t, const std::function<bool(const Flat&)>& cb);

std::vector<Flat> all_subspaces(int m, int t, u64 budget);
std::vector<Flat> all_flats(int m, int t, u64 budget);

// All r x s matrices over GF(2) of rank s (s <= r), enumerated by their
// column tuples (c_1,..,c_s) in increasing packed order, skipping dependent
// choices. Count is prod_{i<s} (2^r - 2^i).
void enumerate_full_rank(int r, int s, const std::function<bool(const BinMatrix&)>& cb);
u128 full_rank_count(int r, int s);
std::vector<BinMatrix> all_full_rank(int r, int s, u64 budget);

// Seeded random invertible m x m matrix: draw candidate rows from a SplitMix
// stream (low m bits of each output), keep those that extend the rank.
BinMatrix random_invertible(int m, u64 seed);

// Random full-rank k x n matrix, same row-rejection scheme (k <= n).
BinMatrix random_full_rank(int k, int n, SplitMix& rng);

}  // namespace genset
