#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "genset/bigint.hpp"
#include "genset/bounds.hpp"
#include "genset/flats.hpp"

using namespace genset;

namespace {

const BoundValue& get(const BoundReport& rep, std::string_view name) {
  const BoundValue* v = rep.find(name);
  REQUIRE(v != nullptr);
  return *v;
}

bool has_note(const std::vector<std::string>& notes, std::string_view piece) {
  for (const auto& n : notes)
    if (n.find(piece) != std::string::npos) return true;
  return false;
}

doctest::Approx near(double x) { return doctest::Approx(x).epsilon(1e-12); }

}  // namespace

TEST_CASE("BigUint small arithmetic roundtrips") {
  BigUint a(0);
  CHECK(a.is_zero());
  CHECK(a.to_hex() == "0");
  CHECK(a.bit_length() == 0);

  BigUint b(0xdeadbeefu);
  CHECK(b.to_hex() == "deadbeef");
  CHECK(b.bit_length() == 32);

  // (2^64 - 1) + 1 carries into a second limb
  BigUint c(~u64{0});
  c += BigUint(1);
  CHECK(c.w.size() == 2);
  CHECK(c.to_hex() == "10000000000000000");

  // multiply then divide by the same word returns the start, remainder 0
  BigUint d(123456789);
  for (int i = 0; i < 25; ++i) d.mul_u64(1000000007);
  BigUint d2 = d;
  for (int i = 0; i < 25; ++i) CHECK(d2.div_u64(1000000007) == 0);
  CHECK(d2 == BigUint(123456789));

  // shifting left by 130 bits multiplies by 2^130
  BigUint e(5);
  e.shl_bits(130);
  BigUint f(5);
  for (int i = 0; i < 130; ++i) f.mul_u64(2);
  CHECK(e == f);
  CHECK(e.bit_length() == 133);

  CHECK(BigUint::cmp(BigUint(7), BigUint(9)) < 0);
  CHECK(BigUint::cmp(BigUint(9), BigUint(7)) > 0);
  CHECK(BigUint::cmp(e, f) == 0);
  CHECK(BigUint(3) < BigUint(4));
  CHECK_THROWS_AS(BigUint(1).div_u64(0), ParamError);
}

TEST_CASE("BigUint division digit extraction") {
  // decimal digits of 2^100 read off via div_u64(10)
  BigUint x(1);
  x.shl_bits(100);
  std::string digits;
  while (!x.is_zero()) digits += static_cast<char>('0' + x.div_u64(10));
  std::string expect = "1267650600228229401496703205376";
  std::reverse(digits.begin(), digits.end());
  CHECK(digits == expect);
}

TEST_CASE("gauss_big matches the word-sized Gaussian coefficients") {
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n; ++m) {
      BigUint g = gauss_big(n, m);
      u64 expect = gaussian_coefficient_u64(n, m);
      REQUIRE(g.w.size() <= 1);
      CHECK((g.is_zero() ? u64{0} : g.w[0]) == expect);
    }
  CHECK(gauss_big(10, 4).w[0] == 53743987);
  CHECK(gauss_big(12, 5).w[0] == 114429029715ull);
  CHECK(gauss_big(20, 10).to_hex() == "374bbe84d1b43b96de37042593");
  CHECK_THROWS_AS(gauss_big(64, 2), ParamError);
  CHECK_THROWS_AS(gauss_big(5, 6), ParamError);
}

TEST_CASE("threshold_N good-set table") {
  struct Row {
    int k, s;
    u64 n;
  };
  const Row rows[] = {
      {2, 2, 3},   {3, 2, 6},   {3, 3, 7},   {4, 2, 10},  {4, 3, 14},
      {4, 4, 15},  {5, 2, 15},  {5, 3, 25},  {5, 4, 30},  {5, 5, 31},
      {6, 2, 21},  {6, 3, 41},  {6, 4, 56},  {6, 6, 63},  {7, 2, 28},
      {7, 3, 61},  {7, 4, 97},  {8, 2, 34},  {8, 3, 82},  {8, 4, 150},
      {8, 5, 213}, {8, 6, 245}, {8, 7, 254}, {8, 8, 255},
  };
  for (const Row& r : rows) {
    CAPTURE(r.k);
    CAPTURE(r.s);
    CHECK(threshold_N(SetKind::good, r.k, r.s) == r.n);
  }
}

TEST_CASE("threshold_N generic-set table") {
  struct Row {
    int k, s;
    u64 n;
  };
  const Row rows[] = {
      {2, 2, 2},   {3, 2, 3},   {3, 3, 4},   {4, 2, 5},   {4, 3, 8},
      {4, 4, 11},  {5, 2, 8},   {5, 3, 13},  {5, 4, 20},  {5, 5, 26},
      {6, 2, 10},  {6, 3, 18},  {6, 4, 31},  {7, 2, 12},  {7, 3, 24},
      {7, 4, 44},  {8, 2, 15},  {8, 3, 30},  {8, 4, 57},  {8, 5, 103},
      {8, 6, 163}, {8, 7, 219}, {8, 8, 247},
  };
  for (const Row& r : rows) {
    CAPTURE(r.k);
    CAPTURE(r.s);
    CHECK(threshold_N(SetKind::generic, r.k, r.s) == r.n);
  }
}

TEST_CASE("threshold_check certifies both endpoints exactly") {
  for (SetKind kind : {SetKind::good, SetKind::generic}) {
    for (int k = 2; k <= 8; ++k) {
      for (int s = 2; s <= k; ++s) {
        CAPTURE(static_cast<int>(kind));
        CAPTURE(k);
        CAPTURE(s);
        ThresholdCheck tc = threshold_check(kind, k, s);
        CHECK(tc.holds_at_n);
        CHECK(tc.fails_at_prev);
        CHECK(tc.exact_verified);
        CHECK(tc.n >= 1);
        CHECK(tc.n <= (u64{1} << k) - 1);
      }
    }
  }
  // the k = s good case telescopes to the whole universe
  CHECK(threshold_N(SetKind::good, 6, 6) == 63);
  CHECK(threshold_N(SetKind::good, 10, 10) == 1023);
}

TEST_CASE("threshold_N parameter and budget errors") {
  CHECK_THROWS_AS(threshold_N(SetKind::good, 3, 4), ParamError);
  CHECK_THROWS_AS(threshold_N(SetKind::good, 0, 0), ParamError);
  CHECK_THROWS_AS(threshold_N(SetKind::good, 63, 2), ParamError);
  CHECK_THROWS_AS(threshold_N(SetKind::good, 40, 2, 10), BudgetError);
}

TEST_CASE("good_set_bounds at (4,2)") {
  BoundReport rep = good_set_bounds(4, 2);
  CHECK(rep.target == "good-set-size");
  REQUIRE(rep.parameters.size() == 2);
  CHECK(rep.parameters[0].second == 4);
  CHECK(rep.parameters[1].second == 2);
  CHECK(rep.find("exact-small") == nullptr);
  CHECK(get(rep, "doubling-lower").ivalue == 7);
  CHECK(get(rep, "three-halves-lower").ivalue == 9);
  CHECK(get(rep, "random-subset-threshold").ivalue == 10);
  CHECK(get(rep, "random-subset-threshold").status ==
        BoundStatus::verified_consistent);
  CHECK(get(rep, "random-subset-closed-form[log2]").fvalue ==
        near(19.275366717225673));
  CHECK(get(rep, "ratio-upper[log2]").fvalue == near(16.865945877572464));
  CHECK(get(rep, "flat-cover-greedy[ln]").fvalue == near(20.635532333438686));
  CHECK(get(rep, "table-constant-slope-lower").fvalue == near(3.53));
  CHECK(get(rep, "table-constant-slope-upper[log2]").fvalue ==
        near(4.818841679306416));
  CHECK(get(rep, "table-constant-slope-lower").kind == BoundKind::constant);
  CHECK(rep.best_lower() == near(9.0));
  CHECK(rep.best_upper() == near(10.0));
  for (const auto& v : rep.values) CHECK(v.status != BoundStatus::flagged);
  CHECK(rep.find("no-such-bound") == nullptr);
}

TEST_CASE("good_set_bounds exact families") {
  // s = 1: a basis
  for (int k = 1; k <= 8; ++k) {
    BoundReport rep = good_set_bounds(k, 1);
    CHECK(get(rep, "exact-small").ivalue == static_cast<u64>(k));
    CHECK(get(rep, "exact-small").kind == BoundKind::exact);
  }
  // s = k: everything nonzero; the doubling bound is tight there
  BoundReport kk = good_set_bounds(5, 5);
  CHECK(get(kk, "exact-small").ivalue == 31);
  CHECK(get(kk, "doubling-lower").ivalue == 31);
  CHECK(kk.best_lower() == near(31.0));
  CHECK(kk.best_upper() == near(31.0));
  CHECK(kk.find("three-halves-lower") == nullptr);
  CHECK(kk.find("random-subset-threshold") == nullptr);
  // s = k-1: one short of everything; the three-halves bound is tight
  BoundReport km = good_set_bounds(3, 2);
  CHECK(get(km, "exact-small").ivalue == 6);
  CHECK(get(km, "three-halves-lower").ivalue == 6);
  CHECK(get(km, "doubling-lower").ivalue == 5);
  CHECK(get(km, "random-subset-threshold").ivalue == 6);
  for (const auto& v : km.values) CHECK(v.status != BoundStatus::flagged);
  // at (8,7) the exact value, the recursion seed, and the threshold coincide
  BoundReport big = good_set_bounds(8, 7);
  CHECK(get(big, "exact-small").ivalue == 254);
  CHECK(get(big, "three-halves-lower").ivalue == 254);
  CHECK(get(big, "random-subset-threshold").ivalue == 254);
  CHECK(get(big, "doubling-lower").ivalue == 191);
}

TEST_CASE("good_set_bounds lower-family values") {
  CHECK(get(good_set_bounds(10, 4), "three-halves-lower").ivalue == 90);
  CHECK(get(good_set_bounds(10, 4), "doubling-lower").ivalue == 63);
  CHECK(get(good_set_bounds(7, 4), "three-halves-lower").ivalue == 54);
  CHECK(get(good_set_bounds(7, 4), "doubling-lower").ivalue == 39);
  CHECK(get(good_set_bounds(6, 5), "three-halves-lower").ivalue == 62);
  CHECK(get(good_set_bounds(6, 5), "doubling-lower").ivalue == 47);
}

TEST_CASE("good_set_bounds float uppers at (10,4)") {
  BoundReport rep = good_set_bounds(10, 4);
  CHECK(get(rep, "ratio-upper[log2]").fvalue == near(380.35940333562));
  CHECK(get(rep, "random-subset-closed-form[log2]").fvalue ==
        near(322.20160998843943));
  CHECK(get(rep, "flat-cover-greedy[ln]").fvalue == near(304.3492271129372));
  CHECK(rep.find("table-constant-slope-lower") == nullptr);
  for (const auto& v : rep.values) CHECK(v.status != BoundStatus::flagged);
}

TEST_CASE("good_set_bounds budget refusal leaves a note") {
  BoundReport rep = good_set_bounds(40, 2, 10);
  CHECK(rep.find("random-subset-threshold") == nullptr);
  CHECK(has_note(rep.consistency_notes, "random-subset-threshold omitted"));
  CHECK(get(rep, "three-halves-lower").ivalue == 3 * 38 + 5 - 2);
  CHECK_THROWS_AS(good_set_bounds(5, 6), ParamError);
  CHECK_THROWS_AS(good_set_bounds(63, 1), ParamError);
}

TEST_CASE("generic_set_bounds flags the printed first-index sum at s = 2") {
  for (int r = 2; r <= 8; ++r) {
    CAPTURE(r);
    BoundReport rep = generic_set_bounds(r, 2);
    CHECK(get(rep, "binomial-sum-printed").ivalue == static_cast<u64>(r - 1));
    CHECK(get(rep, "binomial-sum-printed").status == BoundStatus::flagged);
    CHECK(get(rep, "binomial-sum-shifted").ivalue == static_cast<u64>(r));
    CHECK(get(rep, "binomial-sum-shifted").status != BoundStatus::flagged);
    CHECK(get(rep, "span-lower").ivalue == static_cast<u64>(r));
    CHECK(has_note(rep.consistency_notes, "binomial-sum-printed flagged"));
  }
}

TEST_CASE("generic_set_bounds at (5,3)") {
  BoundReport rep = generic_set_bounds(5, 3);
  CHECK(rep.target == "generic-set-size");
  CHECK(get(rep, "binomial-sum-printed").ivalue == 10);
  CHECK(get(rep, "binomial-sum-printed").status == BoundStatus::printed);
  CHECK(get(rep, "binomial-sum-shifted").ivalue == 11);
  CHECK(get(rep, "span-lower").ivalue == 5);
  CHECK(get(rep, "unit-extension-lower").ivalue == 6);
  CHECK(get(rep, "random-subset-threshold").ivalue == 13);
  CHECK(get(rep, "intersecting-ratio-upper[log2]").fvalue ==
        near(22.12154771035423));
  CHECK(rep.find("halved-split-lower") == nullptr);
  CHECK(rep.find("two-step-recursive-lower") == nullptr);
}

TEST_CASE("generic_set_bounds at (7,4) and (10,4)") {
  BoundReport rep = generic_set_bounds(7, 4);
  CHECK(get(rep, "two-step-recursive-lower").ivalue == 12);
  CHECK(get(rep, "halved-split-lower").ivalue == 9);
  CHECK(get(rep, "halved-split-lower").status == BoundStatus::corrected_variant);
  CHECK(get(rep, "unit-extension-lower").ivalue == 11);
  CHECK(get(rep, "binomial-sum-printed").ivalue == 41);
  CHECK(get(rep, "random-subset-threshold").ivalue == 44);
  CHECK(rep.best_lower() == near(12.0));

  BoundReport big = generic_set_bounds(10, 4);
  CHECK(get(big, "two-step-recursive-lower").ivalue == 21);
  CHECK(get(big, "halved-split-lower").ivalue == 15);
  CHECK(get(big, "unit-extension-lower").ivalue == 14);
  CHECK(get(big, "coset-cover-greedy[ln]").fvalue == near(88.722839111673));
  CHECK(get(big, "intersecting-ratio-upper[log2]").fvalue ==
        near(96.37683358612836));
  CHECK(get(big, "random-subset-closed-form[log2]").fvalue ==
        near(85.32972938786232));
}

TEST_CASE("generic_set_bounds sandwich closes at (2,2) and (4,4)") {
  BoundReport r22 = generic_set_bounds(2, 2);
  CHECK(get(r22, "binomial-sum-printed").status == BoundStatus::flagged);
  CHECK(get(r22, "unit-extension-lower").ivalue == 2);
  CHECK(r22.best_lower() == near(2.0));
  CHECK(r22.best_upper() == near(2.0));
  CHECK(has_note(r22.consistency_notes, "exhaustive minimum"));

  BoundReport r44 = generic_set_bounds(4, 4);
  CHECK(get(r44, "binomial-sum-printed").ivalue == 7);
  CHECK(get(r44, "binomial-sum-printed").status == BoundStatus::flagged);
  CHECK(get(r44, "binomial-sum-shifted").ivalue == 8);
  CHECK(get(r44, "unit-extension-lower").ivalue == 8);
  CHECK(r44.best_lower() == near(8.0));
  CHECK(r44.best_upper() == near(8.0));
  CHECK(r44.find("random-subset-threshold") == nullptr);
}

TEST_CASE("generic_set_bounds small coset-cover values") {
  CHECK(get(generic_set_bounds(2, 1), "coset-cover-greedy[ln]").fvalue ==
        near(2.772588722239781));
  CHECK(get(generic_set_bounds(4, 2), "coset-cover-greedy[ln]").fvalue ==
        near(8.317766166719343));
  CHECK_THROWS_AS(generic_set_bounds(2, 3), ParamError);
}

TEST_CASE("stopping_redundancy_bounds on the [7,4,3] parameters") {
  BoundReport rep = stopping_redundancy_bounds(7, 4, 3);
  CHECK(rep.target == "stopping-redundancy");
  CHECK(get(rep, "rank-floor").ivalue == 3);
  CHECK(get(rep, "rank-floor").status == BoundStatus::verified_consistent);
  CHECK(get(rep, "check-sum-printed").ivalue == 2);
  CHECK(get(rep, "check-sum-printed").status == BoundStatus::flagged);
  CHECK(get(rep, "check-sum-shifted").ivalue == 3);
  CHECK(get(rep, "check-sum-shifted").status != BoundStatus::flagged);
  CHECK(get(rep, "random-check-upper").ivalue == 6);
  CHECK(get(rep, "random-check-ratio[log2]").fvalue ==
        near(5.807354922057604));
  CHECK(get(rep, "weighted-cover-greedy[ln]").fvalue ==
        near(9.664409020350408));
  CHECK(rep.best_upper() == near(3.0));
  CHECK(has_note(rep.consistency_notes,
                 "least non-flagged upper bound: check-sum-shifted = 3"));
}

TEST_CASE("stopping_redundancy_bounds on the [8,4,4] parameters") {
  BoundReport rep = stopping_redundancy_bounds(8, 4, 4);
  CHECK(get(rep, "check-sum-printed").ivalue == 6);
  CHECK(get(rep, "check-sum-printed").status == BoundStatus::printed);
  CHECK(get(rep, "check-sum-shifted").ivalue == 7);
  CHECK(get(rep, "random-check-upper").ivalue == 10);
  CHECK(get(rep, "random-check-ratio[log2]").fvalue ==
        near(10.620752470157797));
  CHECK(get(rep, "weighted-cover-greedy[ln]").fvalue ==
        near(15.724769538797439));
  CHECK(rep.best_upper() == near(6.0));
  CHECK(has_note(rep.consistency_notes,
                 "least non-flagged upper bound: check-sum-printed = 6"));
}

TEST_CASE("stopping_redundancy_bounds decay exponents") {
  CHECK(get(stopping_redundancy_bounds(15, 11, 3), "random-check-upper")
            .ivalue == 9);
  CHECK(get(stopping_redundancy_bounds(10, 6, 4), "random-check-upper")
            .ivalue == 12);
  CHECK(get(stopping_redundancy_bounds(23, 12, 7), "random-check-upper")
            .ivalue == 123);
  // at [15,11] the printed sum 3 dips below the rank floor 4 and is flagged
  BoundReport rep = stopping_redundancy_bounds(15, 11, 3);
  CHECK(get(rep, "check-sum-printed").ivalue == 3);
  CHECK(get(rep, "check-sum-printed").status == BoundStatus::flagged);
  CHECK(get(rep, "check-sum-shifted").ivalue == 4);
  CHECK(get(rep, "check-sum-shifted").status != BoundStatus::flagged);
}

TEST_CASE("stopping_redundancy_bounds degenerate distances") {
  BoundReport d2 = stopping_redundancy_bounds(8, 5, 2);
  CHECK(get(d2, "check-sum-printed").ivalue == 0);
  CHECK(get(d2, "check-sum-printed").status == BoundStatus::flagged);
  CHECK(get(d2, "check-sum-shifted").ivalue == 1);
  CHECK(get(d2, "check-sum-shifted").status == BoundStatus::flagged);
  CHECK(get(d2, "rank-floor").ivalue == 3);
  CHECK(d2.find("random-check-upper") == nullptr);
  CHECK(d2.find("random-check-ratio[log2]") == nullptr);
  CHECK(has_note(d2.consistency_notes, "degenerate regime"));
  CHECK(get(d2, "weighted-cover-greedy[ln]").status != BoundStatus::flagged);

  BoundReport d1 = stopping_redundancy_bounds(8, 5, 1);
  CHECK(d1.values.size() == 1);
  CHECK(get(d1, "rank-floor").ivalue == 3);
  CHECK(has_note(d1.consistency_notes, "single-row"));

  CHECK_THROWS_AS(stopping_redundancy_bounds(8, 5, 5), ParamError);
  CHECK_THROWS_AS(stopping_redundancy_bounds(4, 5, 1), ParamError);
  CHECK_THROWS_AS(stopping_redundancy_bounds(64, 5, 2), ParamError);
}

TEST_CASE("rate_bounds values and the optional restriction bound") {
  BoundReport r2 = rate_bounds(2);
  CHECK(r2.target == "rate");
  CHECK(get(r2, "product-display-rate").fvalue == near(0.15591397849462366));
  CHECK(get(r2, "balanced-rate[log2]").fvalue == near(0.20751874963942196));
  CHECK(get(r2, "table-constant").fvalue == near(0.28));
  CHECK(get(r2, "table-constant").kind == BoundKind::constant);
  CHECK(r2.find("restriction-rate[log2]") == nullptr);

  BoundReport r2k = rate_bounds(2, 4);
  // k/(k-s+2) is exactly 1 at k = 4, s = 2
  CHECK(get(r2k, "restriction-rate[log2]").fvalue ==
        near(0.20751874963942196));
  REQUIRE(r2k.parameters.size() == 2);
  CHECK(r2k.parameters[1].first == "k");

  BoundReport r3 = rate_bounds(3);
  CHECK(get(r3, "product-display-rate").fvalue == near(0.026902887139107615));
  CHECK(get(r3, "balanced-rate[log2]").fvalue == near(0.06421502598079865));
  CHECK(get(r3, "table-constant").fvalue == near(0.108));

  CHECK(rate_bounds(7).find("table-constant") == nullptr);
  for (const auto& v : rate_bounds(4).values)
    CHECK(v.kind != BoundKind::upper);
  CHECK_THROWS_AS(rate_bounds(1), ParamError);
  CHECK_THROWS_AS(rate_bounds(3, 2), ParamError);
}

TEST_CASE("intersecting distance predicate") {
  // simplex parameters: every nonzero word has weight 4
  CHECK(intersecting_distance_sufficient(2, 4, 4));
  // constant-weight codes pass for every s
  for (int s = 2; s <= 20; ++s) CHECK(intersecting_distance_sufficient(s, 9, 9));
  // the comparison is strict
  CHECK_FALSE(intersecting_distance_sufficient(2, 2, 4));
  CHECK_FALSE(intersecting_distance_sufficient(3, 5, 8));
  CHECK(intersecting_distance_sufficient(3, 7, 8));
  CHECK_THROWS_AS(intersecting_distance_sufficient(1, 1, 2), ParamError);
  CHECK_THROWS_AS(intersecting_distance_sufficient(2, 5, 4), ParamError);
}

TEST_CASE("bias predicate") {
  CHECK_FALSE(bias_intersecting_sufficient(3, 0.1));
  CHECK(bias_intersecting_sufficient(3, 0.07));
  CHECK(bias_intersecting_sufficient(2, 0.16));
  CHECK_FALSE(bias_intersecting_sufficient(2, 1.0 / 6.0));
  CHECK(bias_intersecting_sufficient(10, 0.0));
  CHECK_THROWS_AS(bias_intersecting_sufficient(1, 0.0), ParamError);
  CHECK_THROWS_AS(bias_intersecting_sufficient(3, -0.5), ParamError);
}

TEST_CASE("blocking_lower values and validation") {
  CHECK(blocking_lower(2, 4, 2) == 7);
  CHECK(blocking_lower(2, 3, 1) == 3);
  CHECK(blocking_lower(3, 3, 1) == 4);
  CHECK(blocking_lower(2, 5, 3) == 15);
  CHECK(blocking_lower(4, 3, 1) == 5);
  CHECK(blocking_lower(9, 3, 1) == 10);
  CHECK(blocking_lower(2, 40, 35) == (u64{1} << 36) - 1);
  CHECK_THROWS_AS(blocking_lower(6, 3, 1), ParamError);
  CHECK_THROWS_AS(blocking_lower(12, 3, 1), ParamError);
  CHECK_THROWS_AS(blocking_lower(1, 3, 1), ParamError);
  CHECK_THROWS_AS(blocking_lower(2, 3, 0), ParamError);
  CHECK_THROWS_AS(blocking_lower(2, 3, 3), ParamError);
  CHECK_THROWS_AS(blocking_lower(2, 70, 64), std::overflow_error);

  BoundReport rep = blocking_report(2, 4, 2);
  CHECK(rep.target == "blocking-set-size");
  CHECK(get(rep, "bose-burton").ivalue == 7);
  CHECK(get(rep, "bose-burton").kind == BoundKind::lower);
  CHECK(rep.best_lower() == near(7.0));
}

TEST_CASE("reports are deterministic") {
  BoundReport a = good_set_bounds(6, 3);
  BoundReport b = good_set_bounds(6, 3);
  REQUIRE(a.values.size() == b.values.size());
  for (size_t i = 0; i < a.values.size(); ++i) {
    CHECK(a.values[i].name == b.values[i].name);
    CHECK(a.values[i].numeric() == b.values[i].numeric());
    CHECK(a.values[i].status == b.values[i].status);
  }
  CHECK(a.consistency_notes == b.consistency_notes);
}

TEST_CASE("consistency_table cross-checks a small grid") {
  ConsistencyTable tab = consistency_table(6, 4);
  CHECK(tab.all_consistent);
  CHECK(tab.cells.size() == 36);
  CHECK(tab.cells[0].k == 1);
  CHECK(tab.cells[0].kind == SetKind::good);
  CHECK(tab.cells[1].kind == SetKind::generic);

  const TableCell* g43 = tab.cell(4, 3, SetKind::good);
  REQUIRE(g43 != nullptr);
  REQUIRE(g43->exact.has_value());
  CHECK(*g43->exact == 14);
  CHECK(g43->lower == 14);
  CHECK(g43->upper == near(14.0));
  CHECK(has_note(tab.notes,
                 "recursive-split reproduces the exact value 14 at k=4, s=3"));

  // the propagated recurrence 2*9+2 lands exactly on the closed form at (5,3)
  const TableCell* g53 = tab.cell(5, 3, SetKind::good);
  REQUIRE(g53 != nullptr);
  CHECK(g53->lower == 20);
  CHECK(has_note(tab.notes,
                 "recursive-split reproduces the exact value 6 at k=3, s=2"));
  CHECK(has_note(tab.notes,
                 "recursive-split reproduces the exact value 30 at k=5, s=4"));

  for (int r = 2; r <= 6; ++r) {
    const TableCell* c = tab.cell(r, 2, SetKind::generic);
    REQUIRE(c != nullptr);
    bool printed_flagged = false;
    for (const auto& f : c->flags)
      if (f == "binomial-sum-printed") printed_flagged = true;
    CHECK(printed_flagged);
  }

  for (const auto& c : tab.cells) {
    CAPTURE(c.k);
    CAPTURE(c.s);
    CHECK(static_cast<double>(c.lower) <= c.upper * (1 + 1e-9) + 1e-9);
    if (c.exact) {
      CHECK(c.lower <= *c.exact);
      CHECK(static_cast<double>(*c.exact) <= c.upper * (1 + 1e-9));
    }
  }
  CHECK(tab.cell(7, 1, SetKind::good) == nullptr);
  CHECK_THROWS_AS(consistency_table(0, 1), ParamError);
  CHECK_THROWS_AS(consistency_table(63, 1), ParamError);
}

TEST_CASE("enum names") {
  CHECK(std::string(to_string(SetKind::good)) == "good");
  CHECK(std::string(to_string(SetKind::generic)) == "generic");
  CHECK(std::string(to_string(BoundKind::lower)) == "lower");
  CHECK(std::string(to_string(BoundKind::upper)) == "upper");
  CHECK(std::string(to_string(BoundKind::exact)) == "exact");
  CHECK(std::string(to_string(BoundKind::constant)) == "constant");
  CHECK(std::string(to_string(BoundStatus::printed)) == "printed");
  CHECK(std::string(to_string(BoundStatus::corrected_variant)) ==
        "corrected-variant");
  CHECK(std::string(to_string(BoundStatus::verified_consistent)) ==
        "verified-consistent");
  CHECK(std::string(to_string(BoundStatus::flagged)) == "flagged");
}
