#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "genset/construct.hpp"
#include "genset/erasure.hpp"
#include "genset/flats.hpp"
#include "genset/verify.hpp"

using namespace genset;

namespace {

std::vector<u64> member_bits(const SearchOutcome& o) {
  REQUIRE(o.set.has_value());
  std::vector<u64> v;
  v.reserve(o.set->members.size());
  for (const auto& m : o.set->members) v.push_back(m.bits);
  return v;
}

u64 good_cap(int r, int s) {
  return static_cast<u64>(
      std::ceil(std::ldexp(1.0, s) * (s * (r - s) * std::log(2.0) +
                                      2 * std::log(2.0) + 1.0)));
}

u64 generic_cap(int r, int s) {
  return static_cast<u64>(std::ceil(
      std::ldexp(1.0, s) * (r * std::log(2.0) - std::log(double(s)))));
}

}  // namespace

TEST_CASE("good cover instance has the documented uniform degrees") {
  CoverInstance inst = good_cover_instance(3, 2);
  CHECK(inst.kind == "good");
  CHECK(inst.vertices.size() == 7);
  CHECK(inst.edge_count == 21);  // 7 planes dual to Gaussian(3,2), 3 classes
  CHECK(inst.edge_degree_min == 2);
  CHECK(inst.vertex_degree_max == 6);

  std::vector<u64> edges;
  inst.for_each_edge([&](u64 e) { edges.push_back(e); });
  REQUIRE(edges.size() == inst.edge_count);
  std::vector<u64> vdeg(inst.vertices.size(), 0);
  for (u64 e : edges) {
    u64 deg = 0;
    for (size_t i = 0; i < inst.vertices.size(); ++i)
      if (inst.incident(inst.vertices[i], e)) {
        ++deg;
        ++vdeg[i];
      }
    CHECK(deg == inst.edge_degree_min);
  }
  for (u64 d : vdeg) CHECK(d == inst.vertex_degree_max);
}

TEST_CASE("generic cover instance has the documented uniform degrees") {
  CoverInstance inst = generic_cover_instance(4, 2);
  CHECK(inst.vertices.size() == 15);
  CHECK(inst.edge_count == 35 * 3);  // directions times unordered bases
  CHECK(inst.edge_degree_min == 8);
  CHECK(inst.vertex_degree_max == 56);

  std::vector<u64> edges;
  inst.for_each_edge([&](u64 e) { edges.push_back(e); });
  REQUIRE(edges.size() == inst.edge_count);
  std::vector<u64> vdeg(inst.vertices.size(), 0);
  for (u64 e : edges) {
    u64 deg = 0;
    for (size_t i = 0; i < inst.vertices.size(); ++i)
      if (inst.incident(inst.vertices[i], e)) {
        ++deg;
        ++vdeg[i];
      }
    CHECK(deg == inst.edge_degree_min);
  }
  for (u64 d : vdeg) CHECK(d == inst.vertex_degree_max);
}

TEST_CASE("greedy good set at s = r collects every nonzero vector") {
  for (int r = 2; r <= 4; ++r) {
    SearchOutcome o = greedy_good_set(r, r);
    CHECK(o.size == (1 << r) - 1);
    CHECK(o.nodes_explored == static_cast<u64>(o.size));
    CHECK_FALSE(o.optimal);
    std::vector<u64> got = member_bits(o);
    std::sort(got.begin(), got.end());
    for (u64 v = 1; v < (u64{1} << r); ++v) CHECK(got[v - 1] == v);
  }
}

TEST_CASE("greedy good set reaches the known optimum at (3,2)") {
  SearchOutcome o = greedy_good_set(3, 2);
  CHECK(o.size == 6);
  SearchOutcome exact = exact_minimum(3, 2, SetKind::good);
  CHECK(exact.size == 6);
  CHECK(exact.optimal);
}

TEST_CASE("greedy good set stays within its size guarantee at (8,2)") {
  SearchOutcome o = greedy_good_set(8, 2);
  CHECK(o.size <= 44);
  CHECK(static_cast<u64>(o.size) <= good_cap(8, 2));
  VectorSet a = *o.set;
  CHECK(is_good_set(a, 2, GoodMethod::definition).pass);
}

TEST_CASE("greedy generic set at s = 1 returns a basis, last coordinate first") {
  SearchOutcome o4 = greedy_generic_set(4, 1);
  CHECK(member_bits(o4) == std::vector<u64>{8, 4, 2, 1});
  SearchOutcome o3 = greedy_generic_set(3, 1);
  CHECK(member_bits(o3) == std::vector<u64>{4, 2, 1});
}

TEST_CASE("greedy generic set meets its caps on the worked cells") {
  SearchOutcome o33 = greedy_generic_set(3, 3);
  CHECK(o33.size <= 7);
  SearchOutcome o62 = greedy_generic_set(6, 2);
  CHECK(o62.size <= 14);
  CHECK(static_cast<u64>(o62.size) <= generic_cap(6, 2));
  CHECK(is_generic_set(*o62.set, 2, GenericMethod::matrices).pass);
}

TEST_CASE("greedy good and generic respect caps over a small sweep") {
  for (int r = 2; r <= 6; ++r)
    for (int s = 1; s <= std::min(r, 3); ++s) {
      SearchOutcome g = greedy_good_set(r, s);
      CHECK(static_cast<u64>(g.size) <= good_cap(r, s));
      SearchOutcome e = greedy_generic_set(r, s);
      CHECK(static_cast<u64>(e.size) <= generic_cap(r, s));
      CHECK(e.size <= g.size);  // every good set is generic, minima nest
    }
}

TEST_CASE("fast greedy and reference greedy produce identical pick sequences") {
  struct Cell {
    int r, s;
  };
  const Cell good_cells[] = {{3, 2}, {3, 3}, {4, 2}, {5, 3}};
  for (const Cell& c : good_cells) {
    std::vector<u64> ref =
        reference_cover_greedy(good_cover_instance(c.r, c.s));
    CHECK(member_bits(greedy_good_set(c.r, c.s)) == ref);
  }
  const Cell gen_cells[] = {{4, 1}, {4, 2}, {5, 2}};
  for (const Cell& c : gen_cells) {
    std::vector<u64> ref =
        reference_cover_greedy(generic_cover_instance(c.r, c.s));
    CHECK(member_bits(greedy_generic_set(c.r, c.s)) == ref);
  }
}

TEST_CASE("reference path covers s beyond the lane-fold limit") {
  SearchOutcome good55 = greedy_good_set(5, 5);
  CHECK(good55.size == 31);
  SearchOutcome gen55 = greedy_generic_set(5, 5);
  CHECK(static_cast<u64>(gen55.size) <= generic_cap(5, 5));
}

TEST_CASE("greedy good output is also a generic set") {
  for (int r = 3; r <= 5; ++r) {
    SearchOutcome o = greedy_good_set(r, 2);
    CHECK(is_generic_set(*o.set, 2, GenericMethod::cosets).pass);
    CHECK(is_generic_set(*o.set, 2, GenericMethod::matrices).pass);
  }
}

TEST_CASE("greedy constructions are deterministic") {
  CHECK(member_bits(greedy_good_set(5, 2)) == member_bits(greedy_good_set(5, 2)));
  CHECK(member_bits(greedy_generic_set(5, 3)) ==
        member_bits(greedy_generic_set(5, 3)));
}

TEST_CASE("subspace union in the plane picks two lines") {
  SearchOutcome o = greedy_subspace_union(2, 1);
  CHECK(o.size == 2);
  CHECK(o.nodes_explored == 2);
  CHECK(member_bits(o) == std::vector<u64>{1, 3});
}

TEST_CASE("each 2-subspace of F_2^4 has exactly 16 trivially-meeting partners") {
  std::vector<std::array<u64, 2>> subs;
  enumerate_subspaces(4, 2, [&](const Flat& f) {
    subs.push_back({f.basis.row_bits[0], f.basis.row_bits[1]});
    return true;
  });
  REQUIRE(subs.size() == 35);
  for (const auto& v : subs) {
    int partners = 0;
    for (const auto& u : subs) {
      BinMatrix m(0, 4);
      m.push_row_bits(u[0]);
      m.push_row_bits(u[1]);
      m.push_row_bits(v[0]);
      m.push_row_bits(v[1]);
      if (rank_of(m) == 4) ++partners;
    }
    CHECK(partners == 16);
  }
  SearchOutcome o = greedy_subspace_union(4, 2);
  CHECK(o.nodes_explored < 16);  // 4(2*2*ln2 + 1) is about 15.1
  CHECK(is_good_set(*o.set, 2, GoodMethod::definition).pass);
}

TEST_CASE("subspace union at (6,2) stays below the count guarantee") {
  SearchOutcome o = greedy_subspace_union(6, 2);
  CHECK(o.nodes_explored <= 26);  // 4(8 ln2 + 1) is about 26.2
}

TEST_CASE("subspace union rejects parameters past the budget") {
  CHECK_THROWS_AS(greedy_subspace_union(8, 3), BudgetError);
  CHECK_THROWS_AS(greedy_subspace_union(3, 3), ParamError);  // needs s < r
  CHECK_THROWS_AS(greedy_subspace_union(1, 1), ParamError);
}

TEST_CASE("randomized search verifies a sampled set and echoes its seed") {
  SearchOutcome o = randomized_search(4, 2, SetKind::good, 1);
  CHECK(o.size == static_cast<int>(threshold_N(SetKind::good, 4, 2)));
  REQUIRE(o.seed.has_value());
  CHECK(*o.seed == 1);
  CHECK(is_good_set(*o.set, 2, GoodMethod::definition).pass);
  SearchOutcome again = randomized_search(4, 2, SetKind::good, 1);
  CHECK(member_bits(o) == member_bits(again));
  CHECK(o.nodes_explored == again.nodes_explored);
}

TEST_CASE("randomized search returns the full set when the threshold forces it") {
  SearchOutcome o = randomized_search(4, 4, SetKind::good, 3);
  CHECK(o.size == 15);
  CHECK(o.nodes_explored == 1);
  std::vector<u64> got = member_bits(o);
  for (u64 v = 1; v <= 15; ++v) CHECK(got[v - 1] == v);
}

TEST_CASE("exact minimum reproduces the frozen small values") {
  for (int k = 1; k <= 6; ++k) {
    SearchOutcome o = exact_minimum(k, 1, SetKind::good);
    CHECK(o.size == k);
    CHECK(o.optimal);
  }
  struct Cell {
    int r, s, want;
  };
  const Cell good_cells[] = {{2, 2, 3}, {3, 2, 6}, {3, 3, 7}, {4, 3, 14},
                             {4, 4, 15}, {5, 5, 31}};
  for (const Cell& c : good_cells) {
    SearchOutcome o = exact_minimum(c.r, c.s, SetKind::good);
    CHECK(o.size == c.want);
    CHECK(o.optimal);
    CHECK(o.nodes_explored >= 1);
  }
  const Cell gen_cells[] = {{2, 2, 2}, {3, 2, 3}, {1, 1, 1}, {2, 1, 2},
                            {3, 1, 3}, {4, 1, 4}};
  for (const Cell& c : gen_cells) {
    SearchOutcome o = exact_minimum(c.r, c.s, SetKind::generic);
    CHECK(o.size == c.want);
    CHECK(o.optimal);
  }
}

TEST_CASE("exact minimum enforces its parameter envelope") {
  CHECK_THROWS_AS(exact_minimum(6, 2, SetKind::good), ParamError);
  CHECK_THROWS_AS(exact_minimum(6, 1, SetKind::generic), ParamError);
  CHECK_THROWS_AS(exact_minimum(7, 1, SetKind::good), ParamError);
}

TEST_CASE("exact minimum under a tiny node budget degrades to best-found") {
  SearchOutcome o = exact_minimum(4, 2, SetKind::good, 1);
  CHECK_FALSE(o.optimal);
  CHECK(o.size > 0);
  CHECK(is_good_set(*o.set, 2, GoodMethod::flats).pass);
}

TEST_CASE("parity-check greedy on the length-3 repetition code") {
  SearchOutcome o = greedy_parity_check(repetition_code(3));
  REQUIRE(o.matrix.has_value());
  CHECK(o.size <= 5);  // 2(1 + ln 6) is about 5.58
  CHECK(o.size == static_cast<int>(o.matrix->rows()));
  CHECK(rank_of(*o.matrix) == 2);
  std::optional<int> sd = stopping_distance(*o.matrix);
  REQUIRE(sd.has_value());
  CHECK(*sd == 3);
}

TEST_CASE("parity-check greedy on the [7,4] Hamming code") {
  SearchOutcome o = greedy_parity_check(hamming_code(3));
  CHECK(o.size <= 9);  // 2(1 + ln 28) + 1 is about 9.66
  CHECK(rank_of(*o.matrix) == 3);
  std::optional<int> sd = stopping_distance(*o.matrix);
  REQUIRE(sd.has_value());
  CHECK(*sd == 3);
  CHECK(o.nodes_explored <= static_cast<u64>(o.size));
}

TEST_CASE("parity-check greedy on the extended [8,4] Hamming code") {
  SearchOutcome o = greedy_parity_check(extended_hamming_code(3));
  CHECK(rank_of(*o.matrix) == 4);
  std::optional<int> sd = stopping_distance(*o.matrix);
  REQUIRE(sd.has_value());
  CHECK(*sd == 4);
}

TEST_CASE("parity-check greedy on a single-parity code needs one row") {
  SearchOutcome o = greedy_parity_check(single_parity_code(4));
  CHECK(o.size == 1);
  CHECK(o.matrix->row_bits[0] == 15);
  std::optional<int> sd = stopping_distance(*o.matrix);
  REQUIRE(sd.has_value());
  CHECK(*sd == 2);
}

TEST_CASE("parity-check greedy handles distance-1 codes by completion alone") {
  BinMatrix g(0, 3);
  g.push_row_bits(1);
  SearchOutcome o = greedy_parity_check(code_from_generator(g));
  CHECK(o.size == 2);
  CHECK(o.nodes_explored == 0);
  CHECK(rank_of(*o.matrix) == 2);
  std::optional<int> sd = stopping_distance(*o.matrix, 1);
  REQUIRE(sd.has_value());
  CHECK(*sd == 1);
}

TEST_CASE("constructors reject bad parameters and tiny budgets") {
  CHECK_THROWS_AS(greedy_good_set(0, 1), ParamError);
  CHECK_THROWS_AS(greedy_good_set(3, 4), ParamError);
  CHECK_THROWS_AS(greedy_good_set(10, 4, 1000), BudgetError);
  CHECK_THROWS_AS(greedy_generic_set(10, 4, 1000), BudgetError);
  CHECK_THROWS_AS(randomized_search(4, 2, SetKind::good, 1, 0), ParamError);
}
