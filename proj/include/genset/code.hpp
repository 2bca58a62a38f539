// Binary linear [n,k] codes with consistent generator / parity-check pairs,
// plus the classic families used as fixtures. Lengths stay within one packed
// word (n <= 63).

#pragma once

#include <functional>

#include "genset/flats.hpp"
#include "genset/matrix.hpp"

namespace genset {

struct LinearCode {
  int n = 0;
  int k = 0;
  BinMatrix generator;     // k x n, rank k
  BinMatrix parity_check;  // (n-k) x n, rank n-k

  bool contains(const BitVector& word) const {
    if (word.dim != n) throw ParamError("LinearCode::contains: bad length");
    return mat_vec(parity_check, word).is_zero();
  }
};

// Rows must be independent (they become the generator verbatim); the parity
// check is the canonical nullspace basis. k = 0 (zero code) is allowed with
// an empty generator.
LinearCode code_from_generator(const BinMatrix& g);

// Dual construction: rows must be independent, generator = nullspace.
LinearCode code_from_parity_check(const BinMatrix& h);

// Two codes are equal as codes when the generator row spaces agree.
bool same_code(const LinearCode& a, const LinearCode& b);

// All 2^k - 1 nonzero codewords, message words in ascending packed order.
// The callback returning false stops the walk. k <= 24 unless a larger
// budget is passed (each step costs O(1) row XORs amortized).
void enumerate_codewords(const LinearCode& c,
                         const std::function<bool(const BitVector&)>& cb,
                         int max_k = 24);

// Dual codewords in the same order (messages against parity_check rows).
void enumerate_dual_codewords(const LinearCode& c,
                              const std::function<bool(const BitVector&)>& cb,
                              int max_r = 24);

// Fixture families.
LinearCode repetition_code(int n);                  // [n, 1, n]
LinearCode single_parity_code(int n);               // [n, n-1, 2]
LinearCode hamming_code(int m);                     // [2^m-1, 2^m-1-m, 3]
LinearCode extended_hamming_code(int m);            // [2^m, 2^m-1-m, 4]
LinearCode simplex_code(int k);                     // [2^k-1, k, 2^{k-1}]
LinearCode punctured_simplex_code(int k);           // [2^k-2, k]
LinearCode random_code(int n, int k, u64 seed);     // generator rank k

}  // namespace genset
