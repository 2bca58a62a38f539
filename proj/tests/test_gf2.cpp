#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "genset/flats.hpp"
#include "genset/matrix.hpp"
#include "genset/rng.hpp"

using namespace genset;

namespace {

BinMatrix mat_from_text(const std::vector<std::string>& rows) {
  if (rows.empty()) throw ParamError("mat_from_text: no rows");
  BinMatrix m(0, static_cast<int>(rows[0].size()));
  for (const auto& r : rows) m.push_row(bitvector_from_text(r));
  return m;
}

std::string flat_key(const Flat& f) {
  std::string k = to_text(f.rep) + "|";
  for (int r = 0; r < f.basis.rows(); ++r) k += to_text(f.basis.row(r)) + ",";
  return k;
}

}  // namespace

TEST_CASE("packed text convention") {
  BitVector v = bitvector_from_text("0110");
  CHECK(v.bits == 6);  // coordinate 1 is the LSB
  CHECK(v.dim == 4);
  CHECK(to_text(v) == "0110");
  CHECK(v.weight() == 2);
  CHECK_THROWS_AS(bitvector_from_text("01x0"), DataError);
  CHECK_THROWS_AS(bitvector_from_text(""), DataError);
  CHECK_THROWS_AS(BitVector(4, 2), ParamError);  // bit outside dim
}

TEST_CASE("lex order is text order, not integer order") {
  CHECK(lex_less(bitvector_from_text("01"), bitvector_from_text("10")));
  CHECK_FALSE(lex_less(bitvector_from_text("10"), bitvector_from_text("01")));
  // "01" packs to 2, "10" packs to 1: integer order would say the opposite.
  CHECK(lex_less(u64{2}, u64{1}));
  CHECK_FALSE(lex_less(u64{5}, u64{5}));
  // least nonzero vector of dim m is 00..01
  for (int m = 1; m <= 6; ++m) {
    u64 least = u64{1} << (m - 1);
    for (u64 x = 1; x < (u64{1} << m); ++x)
      if (x != least) CHECK(lex_less(least, x));
  }
}

TEST_CASE("rank_rref basics") {
  SUBCASE("identity") {
    RrefResult rr = rank_rref(identity_matrix(3));
    CHECK(rr.rank == 3);
    CHECK(rr.rref == identity_matrix(3));
    CHECK(rr.pivot_cols == std::vector<int>{0, 1, 2});
  }
  SUBCASE("zero matrix") {
    RrefResult rr = rank_rref(BinMatrix(2, 4));
    CHECK(rr.rank == 0);
    CHECK(rr.rref.rows() == 0);
  }
  SUBCASE("dependent rows") {
    // 110 xor 011 = 101
    BinMatrix m = mat_from_text({"110", "011", "101"});
    CHECK(rank_rref(m).rank == 2);
  }
}

TEST_CASE("rank_rref is idempotent and row-order invariant") {
  SplitMix rng(0xABCDEF);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 1 + static_cast<int>(rng.next_below(5));
    int cols = 1 + static_cast<int>(rng.next_below(8));
    BinMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      m.row_bits[static_cast<size_t>(r)] = rng.next() & ((u64{1} << cols) - 1);
    RrefResult rr = rank_rref(m);
    CHECK(rank_rref(rr.rref).rref == rr.rref);
    BinMatrix shuffled = m;
    std::reverse(shuffled.row_bits.begin(), shuffled.row_bits.end());
    CHECK(rank_rref(shuffled).rref == rr.rref);
    // right-multiplying by an invertible matrix preserves rank
    BinMatrix n = random_invertible(cols, rng.next());
    CHECK(rank_of(mat_mul(m, n)) == rr.rank);
  }
}

TEST_CASE("nullspace") {
  SUBCASE("single parity row") {
    BinMatrix m = mat_from_text({"111"});
    BinMatrix ns = nullspace(m);
    REQUIRE(ns.rows() == 2);
    for (int r = 0; r < ns.rows(); ++r)
      CHECK(mat_vec(m, ns.row(r)).is_zero());
    // canonical form is fixed: {101, 011}
    CHECK(ns == mat_from_text({"101", "011"}));
  }
  SUBCASE("full column rank gives the empty basis") {
    CHECK(nullspace(identity_matrix(3)).rows() == 0);
  }
  SUBCASE("hamming 3x7 check matrix") {
    BinMatrix h = mat_from_text({"1010101", "0110011", "0001111"});
    BinMatrix ns = nullspace(h);
    REQUIRE(ns.rows() == 4);
    CHECK(rank_of(ns) == 4);
    for (int r = 0; r < ns.rows(); ++r)
      CHECK(mat_vec(h, ns.row(r)).is_zero());
  }
  SUBCASE("dimension law") {
    SplitMix rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      int rows = 1 + static_cast<int>(rng.next_below(5));
      int cols = 1 + static_cast<int>(rng.next_below(9));
      BinMatrix m(rows, cols);
      for (int r = 0; r < rows; ++r)
        m.row_bits[static_cast<size_t>(r)] = rng.next() & ((u64{1} << cols) - 1);
      CHECK(rank_of(m) + nullspace(m).rows() == cols);
    }
  }
}

TEST_CASE("solve") {
  SUBCASE("identity system") {
    BitVector b = bitvector_from_text("101");
    auto x = solve(identity_matrix(3), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
  }
  SUBCASE("tie broken to lexicographically least") {
    BinMatrix m = mat_from_text({"11"});
    auto x = solve(m, bitvector_from_text("1"));
    REQUIRE(x.has_value());
    CHECK(to_text(*x) == "01");
  }
  SUBCASE("inconsistent") {
    BinMatrix m = mat_from_text({"11", "00"});
    CHECK_FALSE(solve(m, bitvector_from_text("01")).has_value());
  }
  SUBCASE("random systems: solution valid and lex-least") {
    SplitMix rng(99);
    for (int trial = 0; trial < 80; ++trial) {
      int rows = 1 + static_cast<int>(rng.next_below(4));
      int cols = 1 + static_cast<int>(rng.next_below(6));
      BinMatrix m(rows, cols);
      for (int r = 0; r < rows; ++r)
        m.row_bits[static_cast<size_t>(r)] = rng.next() & ((u64{1} << cols) - 1);
      BitVector b(rng.next() & ((u64{1} << rows) - 1), rows);
      auto got = solve(m, b);
      bool any = false;
      u64 best = 0;
      for (u64 x = 0; x < (u64{1} << cols); ++x) {
        if (mat_vec(m, BitVector(x, cols)) != b) continue;
        if (!any || lex_less(x, best)) best = x;
        any = true;
      }
      CHECK(got.has_value() == any);
      if (any) {
        REQUIRE(got.has_value());
        CHECK(got->bits == best);
        CHECK(mat_vec(m, *got) == b);
      }
    }
  }
}

TEST_CASE("gaussian coefficients") {
  for (int m = 0; m <= 8; ++m) CHECK(gaussian_coefficient(m, 0) == 1);
  CHECK(gaussian_coefficient(3, 1) == 7);
  CHECK(gaussian_coefficient(4, 2) == 35);
  CHECK(gaussian_coefficient(3, 1, 3) == 13);
  CHECK(gaussian_coefficient(4, 2, 3) == 130);
  SUBCASE("symmetry") {
    for (int m = 0; m <= 10; ++m)
      for (int k = 0; k <= m; ++k)
        CHECK(gaussian_coefficient(m, k) == gaussian_coefficient(m, m - k));
  }
  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(gaussian_coefficient(3, 4), ParamError);
    CHECK_THROWS_AS(gaussian_coefficient(3, -1), ParamError);
    CHECK_THROWS_AS(gaussian_coefficient(-1, 0), ParamError);
    CHECK_THROWS_AS(gaussian_coefficient(4, 2, 1), ParamError);
  }
  SUBCASE("overflow is detected, never wrapped") {
    CHECK_THROWS_AS(gaussian_coefficient(60, 30), std::overflow_error);
    // fits 128 bits but not 64
    CHECK(gaussian_coefficient(34, 2) ==
          ((u128{1} << 34) - 1) * ((u128{1} << 33) - 1) / 3);
    CHECK_THROWS_AS(gaussian_coefficient_u64(34, 2), std::overflow_error);
    CHECK(gaussian_coefficient_u64(10, 4) == 53743987);
  }
}

TEST_CASE("subspace and flat enumeration counts") {
  for (int m = 0; m <= 6; ++m) {
    for (int t = 0; t <= m; ++t) {
      u64 subs = 0, flats = 0;
      std::set<std::string> seen;
      enumerate_subspaces(m, t, [&](const Flat& f) {
        ++subs;
        CHECK(f.is_subspace());
        seen.insert(flat_key(f));
        return true;
      });
      enumerate_flats(m, t, [&](const Flat&) {
        ++flats;
        return true;
      });
      CHECK(subs == gaussian_coefficient_u64(m, t));
      CHECK(flats == (u64{1} << (m - t)) * gaussian_coefficient_u64(m, t));
      CHECK(seen.size() == subs);  // no duplicates
    }
  }
}

TEST_CASE("flat enumeration spot values") {
  CHECK(all_subspaces(3, 1, 1u << 20).size() == 7);
  CHECK(all_subspaces(4, 2, 1u << 20).size() == 35);
  CHECK(all_subspaces(5, 0, 1u << 20).size() == 1);
  CHECK(all_flats(3, 2, 1u << 20).size() == 14);
  CHECK(all_flats(2, 1, 1u << 20).size() == 6);
  CHECK(all_flats(4, 4, 1u << 20).size() == 1);
  CHECK_THROWS_AS(all_flats(20, 10, 1000), BudgetError);
  SUBCASE("rep zero comes first within each subspace") {
    int idx = 0;
    enumerate_flats(3, 1, [&](const Flat& f) {
      if (idx % 4 == 0) CHECK(f.is_subspace());
      ++idx;
      return true;
    });
    CHECK(idx == 28);
  }
  SUBCASE("early stop") {
    int visited = 0;
    enumerate_flats(5, 2, [&](const Flat&) { return ++visited < 10; });
    CHECK(visited == 10);
  }
}

TEST_CASE("flat canonical form") {
  for (int t = 0; t <= 4; ++t) {
    enumerate_flats(4, t, [&](const Flat& f) {
      // basis already in reduced echelon form
      CHECK(rank_rref(f.basis).rref == f.basis);
      auto pts = f.points();
      CHECK(pts.size() == (size_t{1} << t));
      CHECK(pts[0] == f.rep);
      for (const auto& p : pts) {
        CHECK(f.contains(p));
        // rep is the lexicographically least member
        if (p != f.rep) CHECK(lex_less(f.rep, p));
        // recanonicalizing any member reproduces the identical flat
        CHECK(make_flat(4, f.basis, p) == f);
      }
      int members = 0;
      for (u64 x = 0; x < 16; ++x)
        if (f.contains(BitVector(x, 4))) ++members;
      CHECK(members == 1 << t);
      return true;
    });
  }
}

TEST_CASE("full rank enumeration") {
  SUBCASE("smallest shapes") {
    auto one = all_full_rank(1, 1, 100);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == identity_matrix(1));
    CHECK(all_full_rank(2, 1, 100).size() == 3);
    CHECK(all_full_rank(2, 2, 100).size() == 6);
  }
  SUBCASE("counts and ranks up to r=4") {
    for (int r = 1; r <= 4; ++r) {
      for (int s = 1; s <= r; ++s) {
        u64 n = 0;
        std::set<std::vector<u64>> seen;
        enumerate_full_rank(r, s, [&](const BinMatrix& m) {
          ++n;
          CHECK(m.rows() == r);
          CHECK(m.cols == s);
          CHECK(rank_of(m) == s);
          seen.insert(m.row_bits);
          return true;
        });
        CHECK(static_cast<u128>(n) == full_rank_count(r, s));
        CHECK(seen.size() == n);
      }
    }
  }
  SUBCASE("budget error") {
    CHECK_THROWS_AS(all_full_rank(10, 4, 1000), BudgetError);
  }
}

TEST_CASE("random invertible matrices") {
  CHECK(random_invertible(1, 7) == identity_matrix(1));
  CHECK(random_invertible(5, 42) == random_invertible(5, 42));
  for (u64 seed = 0; seed < 1000; ++seed)
    CHECK(rank_of(random_invertible(4, seed)) == 4);
}

TEST_CASE("matrix product identities") {
  SplitMix rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng.next_below(5));
    int cols = 1 + static_cast<int>(rng.next_below(5));
    BinMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      m.row_bits[static_cast<size_t>(r)] = rng.next() & ((u64{1} << cols) - 1);
    CHECK(transpose(transpose(m)) == m);
    BitVector x(rng.next() & ((u64{1} << rows) - 1), rows);
    CHECK(vec_mat(x, m) == mat_vec(transpose(m), x));
    CHECK(mat_mul(identity_matrix(rows), m) == m);
    CHECK(mat_mul(m, identity_matrix(cols)) == m);
  }
}
