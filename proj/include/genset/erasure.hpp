// Erasure-channel machinery: peeling decoder, stopping sets and stopping
// distance, maximum-likelihood correctability, code restriction along a
// codeword support, and a seeded BEC Monte Carlo harness.
//
// Coordinates are 1-based in every user-facing list (matching the text
// format); bit (i-1) of a pattern mask is coordinate i. Row indices into a
// check-row matrix are 0-based (they index a data structure, not a word).

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genset/code.hpp"
#include "genset/vecset.hpp"

namespace genset {

struct ErasurePattern {
  int n = 0;
  u64 mask = 0;

  ErasurePattern() = default;
  ErasurePattern(int n, u64 mask) : n(n), mask(mask) {
    if (n < 0 || n > kMaxDim) throw ParamError("ErasurePattern: bad length");
    if (n < kMaxDim && (mask >> n) != 0)
      throw ParamError("ErasurePattern: position outside [n]");
  }

  int size() const { return std::popcount(mask); }
  bool empty() const { return mask == 0; }

  // 1-based, ascending
  std::vector<int> positions() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) out.push_back(i + 1);
    return out;
  }

  static ErasurePattern from_positions(int n, const std::vector<int>& pos) {
    ErasurePattern e(n, 0);
    for (size_t i = 0; i < pos.size(); ++i) {
      if (pos[i] < 1 || pos[i] > n)
        throw ParamError("ErasurePattern: position outside [n]");
      if (i > 0 && pos[i] <= pos[i - 1])
        throw ParamError("ErasurePattern: positions must strictly increase");
      e.mask |= u64{1} << (pos[i] - 1);
    }
    return e;
  }

  friend bool operator==(const ErasurePattern& a, const ErasurePattern& b) {
    return a.n == b.n && a.mask == b.mask;
  }
};

struct PeelResult {
  std::vector<int> resolved;   // coordinates in resolution order, 1-based
  std::vector<int> used_rows;  // row index used per resolved coordinate
  ErasurePattern residual;

  bool success() const { return residual.empty(); }
};

// True iff no row restricted to the pattern has weight exactly 1. The empty
// pattern is rejected (stopping sets are nonempty by definition).
bool is_stopping_set(const BinMatrix& rows, const ErasurePattern& e);

// Repeatedly resolve via the lowest-index row covering exactly one erased
// coordinate. The residual is empty (success) or a stopping set.
PeelResult peel_decode(const BinMatrix& rows, const ErasurePattern& e);

// Smallest nonempty stopping-set size, scanning sizes ascending, subsets of
// each size in ascending packed-mask order. nullopt when no nonempty
// stopping set exists (within the cutoff, when one is given). Without a
// cutoff the exhaustive scan is refused past n = 24.
std::optional<int> stopping_distance(const BinMatrix& rows,
                                     std::optional<int> cutoff = std::nullopt);

// True iff the pattern's columns of h are linearly independent, i.e. the
// erased coordinates determine a unique completion. h rows must be
// independent (a parity-check matrix proper, not a redundant row list).
bool is_correctable(const BinMatrix& h, const ErasurePattern& e);

// Definitional cross-check: no nonzero codeword support inside the pattern.
// Exponential in k; keep to small codes.
bool correctable_by_codewords(const LinearCode& c, const ErasurePattern& e,
                              int max_k = 24);

// Fill in the erased coordinates of a word (bits at erased positions are
// ignored). nullopt = ambiguous (several completions). Unerased part
// inconsistent with every codeword raises DataError.
std::optional<BitVector> ml_erasure_decode(const BinMatrix& h,
                                           const BitVector& word,
                                           const ErasurePattern& e);

// (min, max) nonzero-codeword weight by full enumeration; k >= 1.
std::pair<int, int> min_max_distance(const LinearCode& c, int max_k = 24);

// Split a code along a nonzero codeword v with support I:
//   restricted  = code restricted to I (v restricts to all-ones),
//   subcode     = span of the restricted basis completed around all-ones
//                 (first independent RREF rows), one dimension lower,
//   complement  = code restricted to the complement of I.
struct SupportDecomposition {
  LinearCode restricted;
  LinearCode subcode;
  LinearCode complement;
};
SupportDecomposition support_decompose(const LinearCode& c, const BitVector& v);

// Image rows {a h : a in A} in A's order; h must have full row rank.
BinMatrix apply_generic_set(const VectorSet& a, const BinMatrix& h);

struct BecStrategy {
  std::string name;
  BinMatrix rows;  // each row must lie in the dual code
};

struct BecReport {
  int n = 0;
  int k = 0;
  double p = 0;
  u64 trials = 0;
  u64 seed = 0;
  u64 ml_failures = 0;
  std::vector<std::pair<std::string, u64>> peel_failures;  // per strategy
};

// Erase each coordinate independently with probability p, per-trial streams
// derived as seed ^ trial. Every strategy sees the same patterns; ML
// correctability is the baseline. Peel failures can never undercut ML.
BecReport bec_simulate(const std::vector<BecStrategy>& strategies,
                       const LinearCode& code, double p, u64 trials, u64 seed);

}  // namespace genset
