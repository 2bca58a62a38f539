// Closed-form and threshold bounds on the minimum sizes of good sets,
// generic sets, stopping redundancy, blocking sets, and intersecting-code
// rates, plus a consistency engine that cross-checks them.
//
// Conventions:
//  - Every bound is a named BoundValue. Names are stable mechanism-based
//    citation ids; when a formula evaluates a logarithm the name carries the
//    base as a suffix, "[log2]" or "[ln]".
//  - Integral bounds carry ivalue and never a float; analytic bounds carry
//    fvalue. numeric() unifies the two for comparisons.
//  - status=printed reproduces a source display verbatim. corrected_variant
//    marks a deliberate alteration (an index shifted to start at zero, or a
//    recursion read conservatively); the note says what changed. Values that
//    were re-verified by an independent exact computation are
//    verified_consistent. flagged marks a value contradicted by an exact
//    value or by another bound; flagged values are excluded from
//    best_lower/best_upper and from the report invariant that every
//    non-flagged lower is at most every non-flagged upper.
//  - Where a sum-style display conflicts with its neighbors only at the
//    first index, both the printed form and the shifted form are emitted and
//    the consistency pass decides which one to flag. Nothing is silently
//    rewritten.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genset/bits.hpp"
#include "genset/budget.hpp"

namespace genset {

// the two set families the constructors and verifiers work with
enum class SetKind { good, generic };

enum class BoundKind { lower, upper, exact, constant };

enum class BoundStatus { printed, corrected_variant, verified_consistent, flagged };

const char* to_string(SetKind k);
const char* to_string(BoundKind k);
const char* to_string(BoundStatus s);

struct BoundValue {
  std::string name;
  BoundKind kind = BoundKind::lower;
  bool integral = true;
  u64 ivalue = 0;
  double fvalue = 0.0;
  std::string applicability;
  BoundStatus status = BoundStatus::printed;
  std::string note;

  double numeric() const { return integral ? static_cast<double>(ivalue) : fvalue; }
};

struct BoundReport {
  std::string target;
  std::vector<std::pair<std::string, long long>> parameters;
  std::vector<BoundValue> values;
  std::vector<std::string> consistency_notes;

  const BoundValue* find(std::string_view name) const;
  // max over non-flagged lower and exact values; 0 when none apply
  double best_lower() const;
  // min over non-flagged upper and exact values; +infinity when none apply
  double best_upper() const;
};

// All applicable bounds on the minimum size of a good (k,s)-set. Exact values
// are emitted for s in {1, k-1, k}. The random-subset threshold is charged
// against the budget; when refused it is replaced by a consistency note.
// pre: 1 <= s <= k <= 62
BoundReport good_set_bounds(int k, int s, u64 budget = default_budget());

// All applicable bounds on the minimum size of a generic (r,s)-set. The
// first-index binomial sum is emitted as printed and with the index shifted
// to zero; the consistency pass flags whichever form other bounds contradict.
// pre: 1 <= s <= r <= 62
BoundReport generic_set_bounds(int r, int s, u64 budget = default_budget());

// Minimal N for which K * prod_{j=1}^{N} (1 - c/(2^k - j)) drops below 1,
// where for good sets c = 2^(k-s) and K = (2^s - 1) * gauss(k, s), and for
// generic sets c = s * 2^(k-s) and K counts unordered bases of a
// s-dimensional space times gauss(k, s). The scan runs in log-space doubles
// with a relative safety margin of 2^-30; the decision is then re-verified
// in exact integer arithmetic at N and at N-1, walking the candidate until
// both checks agree. A factor reaching zero or below makes the product
// vanish, so the inequality is satisfied there at the latest.
// pre: 1 <= s <= k <= 62
// errors: BudgetError when the scan or the exact products exceed the budget;
//         DataError when no N within the universe size 2^k - 1 satisfies the
//         inequality (threshold undefined at these parameters)
struct ThresholdCheck {
  u64 n = 0;
  bool holds_at_n = false;
  bool fails_at_prev = false;
  bool exact_verified = false;
};
ThresholdCheck threshold_check(SetKind kind, int k, int s, u64 budget = default_budget());
u64 threshold_N(SetKind kind, int k, int s, u64 budget = default_budget());

// Upper bounds on the number of parity check rows needed to push the
// stopping distance of an [n,k,d] code to d, plus the trivial rank floor.
// The exponential-decay search and its closed form need d >= 3; at d <= 2
// they are omitted and a note marks the degenerate regime.
// pre: 1 <= k <= n <= 63 and 1 <= d <= n - k + 1
BoundReport stopping_redundancy_bounds(int n, int k, int d);

// Achievable-rate lower bounds for s-wise intersecting codes. The
// restriction bound needs a dimension, so it is emitted only when the caller
// supplies k. Constants are echoed at the printed precision for 2 <= s <= 6.
// pre: s >= 2
BoundReport rate_bounds(int s, std::optional<int> k = std::nullopt);

// Sufficient condition for an [n,k] code with minimum distance d and maximum
// nonzero weight D to be s-wise intersecting: d > D * (1 - 2^(1-s)).
// Sufficiency only; the verifier can accept codes this test rejects.
// pre: s >= 2, 1 <= d <= D
bool intersecting_distance_sufficient(int s, u64 d, u64 D);

// Sufficient condition for an eps-biased set to be s-wise intersecting:
// eps < 1 / (2^(s+1) - 2).
// pre: s >= 2, eps >= 0
bool bias_intersecting_sufficient(int s, double eps);

// Minimum size of a point set in PG(k-1, q) meeting every (k-s)-dimensional
// subspace: (q^(s+1) - 1)/(q - 1). The exponent follows the set parameter s;
// equality is attained by the nonzero points of an (s+1)-dimensional
// subspace. blocking_report wraps the value with that note.
// pre: q a prime power, 1 <= s < k
u64 blocking_lower(u64 q, int k, int s);
BoundReport blocking_report(u64 q, int k, int s);

// One table cell: the best non-flagged bounds for a (k, s, kind) triple.
// lower also folds in the doubling recurrence propagated from the (k-1, s-1)
// good-set cell; a note records when it moves or reproduces a value.
struct TableCell {
  int k = 0;
  int s = 0;
  SetKind kind = SetKind::good;
  u64 lower = 0;
  double upper = 0.0;
  std::optional<u64> exact;
  std::vector<std::string> flags;
};

struct ConsistencyTable {
  int k_max = 0;
  int s_max = 0;
  // k ascending, then s ascending, good before generic
  std::vector<TableCell> cells;
  std::vector<std::string> notes;
  // true when every cell satisfies lower <= exact <= upper on its non-flagged
  // values and no cross-formula invariant (threshold at most its closed-form
  // relaxation, uppers nondecreasing in k, recurrence propagation inside the
  // sandwich) is violated; flags on printed forms are expected and recorded
  // in notes without breaking consistency
  bool all_consistent = false;

  const TableCell* cell(int k, int s, SetKind kind) const;
};

// Tabulates both families over 1 <= s <= min(k, s_max), 1 <= k <= k_max and
// runs every cross-check described above.
// pre: 1 <= k_max <= 62, s_max >= 1
ConsistencyTable consistency_table(int k_max, int s_max, u64 budget = default_budget());

}  // namespace genset
