#include "genset/construct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>

#include "genset/erasure.hpp"
#include "genset/flats.hpp"
#include "genset/rng.hpp"
#include "genset/verify.hpp"

namespace genset {

namespace {

using i16 = std::int16_t;
using i32 = std::int32_t;
using i64 = std::int64_t;
using u16 = std::uint16_t;

constexpr double kLn2 = 0.6931471805599453;

constexpr u128 kSaturated = ~u128{0};

u128 saturating_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

u128 saturating_gaussian(int m, int k) {
  try {
    return gaussian_coefficient(m, k);
  } catch (const std::overflow_error&) {
    return kSaturated;
  }
}

u64 binom64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  u64 c = 1;
  for (int j = 1; j <= k; ++j) c = c * static_cast<u64>(n - k + j) / static_cast<u64>(j);
  return c;
}

// Incremental GF(2) elimination; insert() returns the filled slot (for
// backtracking) or -1 when the word is already in the span.
struct XorBasis {
  u64 rows[64] = {};
  int rank = 0;

  int insert(u64 v) {
    while (v != 0) {
      int b = 63 - std::countl_zero(v);
      if (rows[b] == 0) {
        rows[b] = v;
        ++rank;
        return b;
      }
      v ^= rows[b];
    }
    return -1;
  }

  void erase_slot(int b) {
    rows[b] = 0;
    --rank;
  }
};

// Open-addressing map from packed RREF row words to enumeration indices.
// Key 0 never occurs (row 0 of a canonical basis is nonzero), so it marks
// free slots. Linear probing with a mixed hash keeps lookups branch-light
// on the hot partner-enumeration loops.
struct FlatMap {
  std::vector<u64> keys;
  std::vector<u64> vals;
  u64 mask = 0;

  static u64 mix(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  void init(u64 n) {
    u64 cap = 4;
    while (cap < 2 * n + 2) cap <<= 1;
    keys.assign(cap, 0);
    vals.assign(cap, 0);
    mask = cap - 1;
  }

  void insert(u64 k, u64 v) {
    for (u64 i = mix(k) & mask;; i = (i + 1) & mask)
      if (keys[i] == 0 || keys[i] == k) {
        keys[i] = k;
        vals[i] = v;
        return;
      }
  }

  u64 find(u64 k) const {
    for (u64 i = mix(k) & mask;; i = (i + 1) & mask) {
      if (keys[i] == k) return vals[i];
      if (keys[i] == 0) return ~u64{0};
    }
  }
};

// In-place GF(2) row reduction matching the library elimination order:
// pivots by ascending column, rows ordered by pivot, fully reduced.
int small_rref(u64* rows, int nrows, int cols) {
  int next = 0;
  for (int c = 0; c < cols && next < nrows; ++c) {
    int pr = next;
    while (pr < nrows && !((rows[pr] >> c) & 1u)) ++pr;
    if (pr == nrows) continue;
    std::swap(rows[next], rows[pr]);
    for (int i = 0; i < nrows; ++i)
      if (i != next && ((rows[i] >> c) & 1u)) rows[i] ^= rows[next];
    ++next;
  }
  return next;
}

// Up to four r-bit rows packed at 16-bit lane offsets; sig_at(v) returns
// the word whose bit i is <row_i, v>. The xor folds only consume bits below
// the position they write, so lanes never contaminate each other. Requires
// r <= 16 and at most 4 rows.
struct LaneSig {
  u64 lanes = 0;
  static constexpr u64 kSpread = 0x0001000100010001ULL;
  static constexpr u64 kGather =
      (u64{1} << 48) | (u64{1} << 33) | (u64{1} << 18) | (u64{1} << 3);

  void set_row(int i, u64 h) { lanes |= h << (16 * i); }

  u64 sig_at(u64 v) const {
    u64 t = lanes & (v * kSpread);
    t ^= t >> 8;
    t ^= t >> 4;
    t ^= t >> 2;
    t ^= t >> 1;
    return ((t & kSpread) * kGather) >> 48;
  }
};

void require_rs(int r, int s, const char* who) {
  if (r < 1 || r > kMaxDim) throw ParamError(std::string(who) + ": bad ambient dimension");
  if (s < 1 || s > r) throw ParamError(std::string(who) + ": need 1 <= s <= r");
}

// Greedy size guarantees; every greedy run is checked against these.
u64 good_greedy_cap(int r, int s) {
  double b = std::ldexp(1.0, s) *
             (static_cast<double>(s) * (r - s) * kLn2 + 2.0 * kLn2 + 1.0);
  return static_cast<u64>(std::ceil(b));
}

u64 generic_greedy_cap(int r, int s) {
  double b = std::ldexp(1.0, s) *
             (static_cast<double>(r) * kLn2 - std::log(static_cast<double>(s)));
  return static_cast<u64>(std::ceil(b));
}

// GF(2) rank of the class values marked in mask (bit c-1 stands for the
// nonzero class c of F_2^s).
int class_mask_rank(u64 mask, int s) {
  XorBasis xb;
  for (u64 rest = mask; rest != 0; rest &= rest - 1)
    xb.insert(static_cast<u64>(std::countr_zero(rest)) + 1);
  (void)s;
  return xb.rank;
}

// Bit masks (bit c-1 per class c) of all unordered bases of F_2^s, in
// ascending-tuple enumeration order. Needs s <= 6 so a mask fits one word.
std::vector<u64> class_basis_masks(int s) {
  if (s < 1 || s > 6) throw ParamError("class_basis_masks: need 1 <= s <= 6");
  const u64 top = (u64{1} << s) - 1;
  std::vector<u64> out;
  std::function<void(int, u64, u64)> rec = [&](int depth, u64 first, u64 mask) {
    if (depth == s) {
      out.push_back(mask);
      return;
    }
    for (u64 c = first; c <= top; ++c) {
      u64 m2 = mask | (u64{1} << (c - 1));
      if (class_mask_rank(m2, s) != depth + 1) continue;
      rec(depth + 1, c + 1, m2);
    }
  };
  rec(0, 1, 0);
  return out;
}

// Per-mask tables driving the fast greedy: B[M] is the uncovered-edge
// weight of a direction whose missed-class set is M, and W stores the 2^s
// transform coefficients of the per-class gain profile f (f[c] = number of
// edges a vector with signature c would newly cover).
struct EngineTables {
  int s;
  u64 L;      // 2^s - 1 class bits
  u64 nmask;  // 2^L masks
  std::vector<i32> B;
  std::vector<i16> W;
};

EngineTables build_engine_tables(int s, bool generic) {
  EngineTables t;
  t.s = s;
  t.L = (u64{1} << s) - 1;
  t.nmask = u64{1} << t.L;
  const int P = 1 << s;
  t.B.assign(t.nmask, 0);
  if (!generic) {
    for (u64 M = 0; M < t.nmask; ++M)
      t.B[static_cast<size_t>(M)] = static_cast<i32>(std::popcount(M));
  } else {
    // indicator of exact basis sets, then a subset-sum pass turns B[M]
    // into the count of bases inside M
    for (u64 bm : class_basis_masks(s)) ++t.B[static_cast<size_t>(bm)];
    for (u64 j = 0; j < t.L; ++j)
      for (u64 M = 0; M < t.nmask; ++M)
        if ((M >> j) & 1u)
          t.B[static_cast<size_t>(M)] += t.B[static_cast<size_t>(M ^ (u64{1} << j))];
  }
  t.W.assign(t.nmask * static_cast<size_t>(P), 0);
  std::vector<i64> f(static_cast<size_t>(P));
  for (u64 M = 0; M < t.nmask; ++M) {
    for (int c = 0; c < P; ++c) f[static_cast<size_t>(c)] = 0;
    for (int c = 1; c < P; ++c) {
      if (!((M >> (c - 1)) & 1u)) continue;
      f[static_cast<size_t>(c)] =
          generic ? t.B[static_cast<size_t>(M)] -
                        t.B[static_cast<size_t>(M & ~(u64{1} << (c - 1)))]
                  : 1;
    }
    for (int len = 1; len < P; len <<= 1)
      for (int i = 0; i < P; i += len << 1)
        for (int j = i; j < i + len; ++j) {
          i64 x = f[static_cast<size_t>(j)], y = f[static_cast<size_t>(j + len)];
          f[static_cast<size_t>(j)] = x + y;
          f[static_cast<size_t>(j + len)] = x - y;
        }
    for (int w = 0; w < P; ++w)
      t.W[M * static_cast<size_t>(P) + static_cast<size_t>(w)] =
          static_cast<i16>(f[static_cast<size_t>(w)]);
  }
  return t;
}

void fwht(std::vector<i64>& a) {
  size_t n = a.size();
  for (size_t len = 1; len < n; len <<= 1)
    for (size_t i = 0; i < n; i += len << 1)
      for (size_t j = i; j < i + len; ++j) {
        i64 x = a[j], y = a[j + len];
        a[j] = x + y;
        a[j + len] = x - y;
      }
}

// Fast greedy over the (direction, class) respectively (direction, basis)
// demands. Per round the marginal coverage of every vector is read off a
// transform accumulator g: count[v] = (WHT g)[v] >> s, because each
// direction contributes its gain profile evaluated at the direction
// signature of v. A pick updates only the directions whose missed-class
// mask changes, scattering the coefficient-row delta over the direction
// rowspace by a Gray walk. Requires 1 <= s <= 4 and r <= 16.
std::vector<u64> engine_greedy(int r, int s, bool generic, u64 pickcap,
                               u64 budget) {
  const u128 ndir128 = saturating_gaussian(r, s);
  const u64 table_units = (u64{1} << ((u64{1} << s) - 1)) << (s + 1);
  charge_budget(generic ? "greedy_generic_set" : "greedy_good_set",
                saturating_mul(ndir128, 3) + table_units +
                    saturating_mul(u128{pickcap},
                                   u128{static_cast<u64>(r)} << r),
                budget);
  const u64 ndir = gaussian_coefficient_u64(r, s);
  EngineTables tab = build_engine_tables(s, generic);
  const int P = 1 << s;

  std::vector<u64> pack;
  pack.reserve(ndir);
  enumerate_subspaces(r, s, [&](const Flat& f) {
    u64 p = 0;
    for (int i = 0; i < s; ++i)
      p |= f.basis.row_bits[static_cast<size_t>(i)] << (i * 16);
    pack.push_back(p);
    return true;
  });

  // one covered class removes a fixed sign row from the accumulator
  std::vector<i16> srow((tab.L + 1) * static_cast<size_t>(P), 0);
  for (u64 c = 1; c <= tab.L; ++c)
    for (int w = 0; w < P; ++w)
      srow[c * static_cast<size_t>(P) + static_cast<size_t>(w)] =
          static_cast<i16>((std::popcount(static_cast<u64>(w) & c) & 1) ? 1 : -1);
  std::vector<u16> miss(ndir, static_cast<u16>(tab.nmask - 1));

  const size_t NV = size_t{1} << r;
  std::vector<i64> g(NV, 0);
  const i16* full_row = &tab.W[(tab.nmask - 1) * static_cast<size_t>(P)];
  for (int w = 2; w < P; ++w)
    if (full_row[w] != full_row[1])
      throw DataError("engine_greedy: base coefficient row not uniform");
  g[0] = static_cast<i64>(ndir) * full_row[0];
  const u64 gm1 = gaussian_coefficient_u64(r - 1, s - 1);
  for (size_t u = 1; u < NV; ++u)
    g[u] = static_cast<i64>(full_row[1]) * static_cast<i64>(gm1);

  i64 uncovered = static_cast<i64>(ndir) * tab.B[static_cast<size_t>(tab.nmask - 1)];
  size_t active = ndir;
  std::vector<u64> picks;
  std::vector<i64> h;
  while (uncovered > 0) {
    if (picks.size() >= pickcap)
      throw DataError("engine_greedy: pick count exceeded the covering guarantee");
    h = g;
    fwht(h);
    u64 best = 0;
    i64 bestc = -1;
    for (u64 v = 1; v < NV; ++v) {
      i64 c = h[v] >> s;
      if (c > bestc || (c == bestc && lex_less(v, best))) {
        bestc = c;
        best = v;
      }
    }
    if (bestc <= 0) throw DataError("engine_greedy: cover stalled");
    picks.push_back(best);
    const u64 vrep = best * LaneSig::kSpread;
    size_t d = 0;
    while (d < active) {
      u64 p = pack[d];
      u64 t = p & vrep;
      t ^= t >> 8;
      t ^= t >> 4;
      t ^= t >> 2;
      t ^= t >> 1;
      u64 sig = (((t & LaneSig::kSpread) * LaneSig::kGather) >> 48) & tab.L;
      if (sig == 0) {
        ++d;
        continue;
      }
      u64 bit = sig - 1;
      u16 M = miss[d];
      if (!((M >> bit) & 1u)) {
        ++d;
        continue;
      }
      u16 M2 = static_cast<u16>(M & ~(u64{1} << bit));
      u64 rows[4] = {p & 0xFFFF, (p >> 16) & 0xFFFF, (p >> 32) & 0xFFFF,
                     (p >> 48) & 0xFFFF};
      if (!generic) {
        const i16* sr = &srow[sig * static_cast<size_t>(P)];
        g[0] += sr[0];
        u64 u = 0;
        u64 wg = 0;
        for (int j = 1; j < P; ++j) {
          int b = std::countr_zero(static_cast<unsigned>(j));
          u ^= rows[b];
          wg ^= u64{1} << b;
          g[u] += sr[wg];
        }
        uncovered -= 1;
      } else {
        const i16* ra = &tab.W[static_cast<size_t>(M) * static_cast<size_t>(P)];
        const i16* rb = &tab.W[static_cast<size_t>(M2) * static_cast<size_t>(P)];
        g[0] += rb[0] - ra[0];
        u64 u = 0;
        u64 wg = 0;
        for (int j = 1; j < P; ++j) {
          int b = std::countr_zero(static_cast<unsigned>(j));
          u ^= rows[b];
          wg ^= u64{1} << b;
          g[u] += rb[wg] - ra[wg];
        }
        uncovered -= tab.B[M] - tab.B[M2];
      }
      if (tab.B[M2] == 0) {
        --active;
        pack[d] = pack[active];
        miss[d] = miss[active];
      } else {
        miss[d] = M2;
        ++d;
      }
    }
  }
  return picks;
}

// Signature of v against the s stored rows of direction d.
u64 dir_sig(const std::vector<u64>& dirs, int s, u64 d, u64 v) {
  u64 sig = 0;
  for (int i = 0; i < s; ++i)
    sig |= static_cast<u64>(parity(dirs[static_cast<size_t>(d) * s + i] & v)) << i;
  return sig;
}

SearchOutcome verified_set_outcome(VectorSet set, int s, SetKind kind,
                                   u64 rounds, u64 budget, const char* who) {
  VerifyResult v = kind == SetKind::good
                       ? is_good_set(set, s, GoodMethod::flats, budget)
                       : is_generic_set(set, s, GenericMethod::cosets, budget);
  if (!v.pass) throw DataError(std::string(who) + ": output failed verification");
  SearchOutcome out;
  out.size = set.size();
  out.set = std::move(set);
  out.optimal = false;
  out.nodes_explored = rounds;
  return out;
}

}  // namespace

CoverInstance good_cover_instance(int r, int s, u64 budget) {
  require_rs(r, s, "good_cover_instance");
  const u128 ndir128 = saturating_gaussian(r, s);
  charge_budget("good_cover_instance",
                saturating_mul(ndir128, static_cast<u64>(s) + 2) + (u128{1} << r),
                budget);
  const u64 ndir = gaussian_coefficient_u64(r, s);
  auto dirs = std::make_shared<std::vector<u64>>();
  dirs->reserve(ndir * static_cast<u64>(s));
  enumerate_subspaces(r, s, [&](const Flat& f) {
    for (int i = 0; i < s; ++i)
      dirs->push_back(f.basis.row_bits[static_cast<size_t>(i)]);
    return true;
  });

  CoverInstance inst;
  inst.kind = "good";
  inst.vertices.reserve((size_t{1} << r) - 1);
  for (u64 v = 1; v < (u64{1} << r); ++v) inst.vertices.push_back(v);
  inst.edge_count = ndir * ((u64{1} << s) - 1);
  inst.for_each_edge = [ndir, s](const std::function<void(u64)>& emit) {
    for (u64 d = 0; d < ndir; ++d)
      for (u64 c = 1; c < (u64{1} << s); ++c) emit((d << s) | c);
  };
  inst.incident = [dirs, s](u64 v, u64 e) {
    return dir_sig(*dirs, s, e >> s, v) == (e & ((u64{1} << s) - 1));
  };
  inst.edge_degree_min = u64{1} << (r - s);
  inst.vertex_degree_max =
      gaussian_coefficient_u64(r, s) -
      (s <= r - 1 ? gaussian_coefficient_u64(r - 1, s) : 0);
  return inst;
}

CoverInstance generic_cover_instance(int r, int s, u64 budget) {
  require_rs(r, s, "generic_cover_instance");
  if (s > 6) throw ParamError("generic_cover_instance: s too large for class masks");
  std::vector<u64> bases = class_basis_masks(s);
  const u64 nbases = bases.size();
  const u128 ndir128 = saturating_gaussian(r, s);
  charge_budget("generic_cover_instance",
                saturating_mul(ndir128, static_cast<u64>(s) + 2) +
                    saturating_mul(nbases, u64{1} << s) + (u128{1} << r),
                budget);
  const u64 ndir = gaussian_coefficient_u64(r, s);
  auto dirs = std::make_shared<std::vector<u64>>();
  dirs->reserve(ndir * static_cast<u64>(s));
  enumerate_subspaces(r, s, [&](const Flat& f) {
    for (int i = 0; i < s; ++i)
      dirs->push_back(f.basis.row_bits[static_cast<size_t>(i)]);
    return true;
  });
  auto bmask = std::make_shared<std::vector<u64>>(std::move(bases));

  CoverInstance inst;
  inst.kind = "generic";
  inst.vertices.reserve((size_t{1} << r) - 1);
  for (u64 v = 1; v < (u64{1} << r); ++v) inst.vertices.push_back(v);
  inst.edge_count = ndir * nbases;
  inst.for_each_edge = [ndir, nbases](const std::function<void(u64)>& emit) {
    for (u64 d = 0; d < ndir; ++d)
      for (u64 b = 0; b < nbases; ++b) emit(d * nbases + b);
  };
  inst.incident = [dirs, bmask, s, nbases](u64 v, u64 e) {
    u64 sig = dir_sig(*dirs, s, e / nbases, v);
    return sig != 0 && (((*bmask)[static_cast<size_t>(e % nbases)] >> (sig - 1)) & 1u) != 0;
  };
  inst.edge_degree_min = static_cast<u64>(s) << (r - s);
  u64 per_class = nbases * static_cast<u64>(s) / ((u64{1} << s) - 1);
  if (per_class * ((u64{1} << s) - 1) != nbases * static_cast<u64>(s))
    throw DataError("generic_cover_instance: class symmetry broken");
  inst.vertex_degree_max =
      (gaussian_coefficient_u64(r, s) -
       (s <= r - 1 ? gaussian_coefficient_u64(r - 1, s) : 0)) *
      per_class;
  return inst;
}

std::vector<u64> reference_cover_greedy(const CoverInstance& inst, u64 budget) {
  const u64 nv = inst.vertices.size();
  const u64 ne = inst.edge_count;
  if (nv == 0 || ne == 0) throw ParamError("reference_cover_greedy: empty instance");
  charge_budget("reference_cover_greedy",
                saturating_mul(2, saturating_mul(ne, nv)) +
                    saturating_mul(std::min(nv, ne), u128{ne} + nv),
                budget);

  std::vector<u64> etok;
  etok.reserve(ne);
  inst.for_each_edge([&](u64 e) { etok.push_back(e); });
  if (etok.size() != ne)
    throw DataError("reference_cover_greedy: edge count mismatch");

  std::vector<i64> counters(nv, 0);
  for (u64 e : etok) {
    u64 deg = 0;
    for (u64 i = 0; i < nv; ++i)
      if (inst.incident(inst.vertices[i], e)) {
        ++counters[i];
        ++deg;
      }
    if (deg != inst.edge_degree_min)
      throw DataError("reference_cover_greedy: edge degree mismatch");
  }
  for (u64 i = 0; i < nv; ++i)
    if (static_cast<u64>(counters[i]) != inst.vertex_degree_max)
      throw DataError("reference_cover_greedy: vertex degree mismatch");

  std::vector<char> covered(ne, 0);
  u64 uncovered = ne;
  std::vector<u64> picks;
  while (uncovered > 0) {
    u64 best = 0;
    i64 bestc = -1;
    for (u64 i = 0; i < nv; ++i)
      if (counters[i] > bestc ||
          (counters[i] == bestc &&
           lex_less(inst.vertices[i], inst.vertices[best]))) {
        bestc = counters[i];
        best = i;
      }
    if (bestc <= 0) throw DataError("reference_cover_greedy: cover stalled");
    u64 pick = inst.vertices[best];
    picks.push_back(pick);
    for (u64 e = 0; e < ne; ++e) {
      if (covered[e] || !inst.incident(pick, etok[e])) continue;
      covered[e] = 1;
      --uncovered;
      for (u64 i = 0; i < nv; ++i)
        if (inst.incident(inst.vertices[i], etok[e])) --counters[i];
    }
  }
  return picks;
}

SearchOutcome greedy_good_set(int r, int s, u64 budget) {
  require_rs(r, s, "greedy_good_set");
  const u64 cap = good_greedy_cap(r, s);
  std::vector<u64> picks =
      (s <= 4 && r <= 16)
          ? engine_greedy(r, s, false, cap, budget)
          : reference_cover_greedy(good_cover_instance(r, s, budget), budget);
  if (picks.size() > cap)
    throw DataError("greedy_good_set: size exceeds the covering guarantee");
  return verified_set_outcome(vectorset_from_masks(r, picks), s, SetKind::good,
                              picks.size(), budget, "greedy_good_set");
}

SearchOutcome greedy_generic_set(int r, int s, u64 budget) {
  require_rs(r, s, "greedy_generic_set");
  const u64 cap = generic_greedy_cap(r, s);
  std::vector<u64> picks =
      (s <= 4 && r <= 16)
          ? engine_greedy(r, s, true, cap, budget)
          : reference_cover_greedy(generic_cover_instance(r, s, budget), budget);
  if (picks.size() > cap)
    throw DataError("greedy_generic_set: size exceeds the covering guarantee");
  return verified_set_outcome(vectorset_from_masks(r, picks), s,
                              SetKind::generic, picks.size(), budget,
                              "greedy_generic_set");
}

SearchOutcome greedy_subspace_union(int r, int s, u64 budget) {
  if (r < 2 || r > kMaxDim)
    throw ParamError("greedy_subspace_union: bad ambient dimension");
  if (s < 1 || s >= r) throw ParamError("greedy_subspace_union: need 1 <= s < r");
  const int m = r - s;
  const u64 lift_bits = static_cast<u64>(s) * static_cast<u64>(m);
  if (lift_bits > 40) throw ParamError("greedy_subspace_union: lifting space too large");
  const u64 nlift = u64{1} << lift_bits;
  const u128 nsub128 = saturating_gaussian(r, s);
  const double capd = 4.0 * (static_cast<double>(s) * m * kLn2 + 1.0);
  const u64 rounds_cap = static_cast<u64>(std::ceil(capd));
  charge_budget("greedy_subspace_union",
                saturating_mul(nsub128, 2 * nlift) +
                    saturating_mul(nsub128, rounds_cap) + (u128{1} << r),
                budget);
  const u64 nsub = gaussian_coefficient_u64(r, s);

  // candidate subspaces in enumeration order, each as s packed rows
  std::vector<u64> urows;
  urows.reserve(nsub * static_cast<u64>(s));
  enumerate_subspaces(r, s, [&](const Flat& f) {
    for (int i = 0; i < s; ++i)
      urows.push_back(f.basis.row_bits[static_cast<size_t>(i)]);
    return true;
  });
  // canonical-row key -> enumeration index
  const bool packed_keys = (s <= 4 && r <= 16);
  FlatMap fast_index;
  std::map<std::vector<u64>, u64> slow_index;
  if (packed_keys) {
    fast_index.init(nsub);
    for (u64 i = 0; i < nsub; ++i) {
      u64 key = 0;
      for (int j = 0; j < s; ++j) key |= urows[i * s + j] << (16 * j);
      fast_index.insert(key, i);
    }
  } else {
    for (u64 i = 0; i < nsub; ++i) {
      std::vector<u64> key(urows.begin() + static_cast<std::ptrdiff_t>(i * s),
                           urows.begin() + static_cast<std::ptrdiff_t>((i + 1) * s));
      slow_index.emplace(std::move(key), i);
    }
  }

  // targets of dimension r-s with their pivot masks
  std::vector<u64> vrows, vpiv;
  vrows.reserve(nsub * static_cast<u64>(m));
  vpiv.reserve(nsub);
  enumerate_subspaces(r, m, [&](const Flat& f) {
    u64 pm = 0;
    for (int i = 0; i < m; ++i) {
      u64 w = f.basis.row_bits[static_cast<size_t>(i)];
      vrows.push_back(w);
      pm |= w & (~w + 1);
    }
    vpiv.push_back(pm);
    return true;
  });

  // emits the enumeration index of every subspace meeting target vi
  // trivially: complements are graphs of the linear maps from the canonical
  // free-column complement into the target, one per assignment word
  const bool check_all_ranks = saturating_mul(nsub128, nlift) <= (u128{1} << 22);
  auto target_rank_check = [&](const u64* rows, const u64* bv) {
    XorBasis xb;
    for (int i = 0; i < s; ++i) xb.insert(rows[i]);
    for (int j = 0; j < m; ++j) xb.insert(bv[j]);
    if (xb.rank != r)
      throw DataError("greedy_subspace_union: lifting misses the target");
  };
  auto for_each_partner = [&](u64 vi, auto&& emit) {
    const u64* bv = &vrows[vi * static_cast<u64>(m)];
    int freecol[64];
    int idx = 0;
    for (int q = 0; q < r; ++q)
      if (!((vpiv[vi] >> q) & 1u)) freecol[idx++] = q;
    if (s == 2 && packed_keys) {
      // the assignment words walk a Gray sequence so each step is one row
      // update, and the two-row reduction is inlined
      u64 a = u64{1} << freecol[0];
      u64 b = u64{1} << freecol[1];
      for (u64 j = 0;;) {
        u64 r0 = a, r1 = b;
        int c0 = std::countr_zero(r0 | r1);
        if (!((r0 >> c0) & 1u)) std::swap(r0, r1);
        if ((r1 >> c0) & 1u) r1 ^= r0;
        if (r1 == 0)
          throw DataError("greedy_subspace_union: degenerate lifting");
        int c1 = std::countr_zero(r1);
        if ((r0 >> c1) & 1u) r0 ^= r1;
        if (j == 0 || check_all_ranks) {
          u64 rows[2] = {r0, r1};
          target_rank_check(rows, bv);
        }
        u64 uidx = fast_index.find(r0 | (r1 << 16));
        if (uidx == ~u64{0})
          throw DataError("greedy_subspace_union: partner outside enumeration");
        emit(uidx);
        if (++j == nlift) break;
        int fb = std::countr_zero(j);
        if (fb < m)
          a ^= bv[fb];
        else
          b ^= bv[fb - m];
      }
      return;
    }
    std::vector<u64> cand(static_cast<size_t>(s));
    for (u64 tword = 0; tword < nlift; ++tword) {
      for (int i = 0; i < s; ++i) {
        u64 row = u64{1} << freecol[i];
        for (int j = 0; j < m; ++j)
          if ((tword >> (static_cast<u64>(i) * m + j)) & 1u) row ^= bv[j];
        cand[static_cast<size_t>(i)] = row;
      }
      if (small_rref(cand.data(), s, r) != s)
        throw DataError("greedy_subspace_union: degenerate lifting");
      if (check_all_ranks || tword == 0) target_rank_check(cand.data(), bv);
      u64 uidx;
      if (packed_keys) {
        u64 key = 0;
        for (int j = 0; j < s; ++j) key |= cand[static_cast<size_t>(j)] << (16 * j);
        uidx = fast_index.find(key);
        if (uidx == ~u64{0})
          throw DataError("greedy_subspace_union: partner outside enumeration");
      } else {
        auto it = slow_index.find(cand);
        if (it == slow_index.end())
          throw DataError("greedy_subspace_union: partner outside enumeration");
        uidx = it->second;
      }
      emit(uidx);
    }
  };

  // initial bipartite degrees, with distinctness of each target's partners
  std::vector<i64> counters(nsub, 0);
  std::vector<u64> stamp(nsub, ~u64{0});
  for (u64 vi = 0; vi < nsub; ++vi) {
    for_each_partner(vi, [&](u64 ui) {
      if (stamp[ui] == vi)
        throw DataError("greedy_subspace_union: duplicate partner");
      stamp[ui] = vi;
      ++counters[ui];
    });
  }
  for (u64 ui = 0; ui < nsub; ++ui)
    if (static_cast<u64>(counters[ui]) != nlift)
      throw DataError("greedy_subspace_union: bipartite degree mismatch");

  std::vector<char> covered(nsub, 0);
  u64 uncovered = nsub;
  std::vector<u64> chosen;
  while (uncovered > 0) {
    if (chosen.size() >= rounds_cap)
      throw DataError("greedy_subspace_union: count exceeds the covering guarantee");
    u64 best = 0;
    i64 bestc = -1;
    for (u64 ui = 0; ui < nsub; ++ui)
      if (counters[ui] > bestc) {
        bestc = counters[ui];
        best = ui;
      }
    if (bestc <= 0) throw DataError("greedy_subspace_union: cover stalled");
    chosen.push_back(best);
    const u64* crows = &urows[best * static_cast<u64>(s)];
    for (u64 vi = 0; vi < nsub; ++vi) {
      if (covered[vi]) continue;
      XorBasis xb;
      for (int i = 0; i < s; ++i) xb.insert(crows[i]);
      for (int j = 0; j < m; ++j) xb.insert(vrows[vi * static_cast<u64>(m) + j]);
      if (xb.rank != r) continue;
      covered[vi] = 1;
      --uncovered;
      for_each_partner(vi, [&](u64 ui) { --counters[ui]; });
    }
  }
  double strict = 4.0 * (static_cast<double>(s) * m * kLn2 + 1.0);
  if (static_cast<double>(chosen.size()) >= strict)
    throw DataError("greedy_subspace_union: count exceeds the covering guarantee");

  std::vector<char> in_union(size_t{1} << r, 0);
  for (u64 ui : chosen) {
    const u64* rows = &urows[ui * static_cast<u64>(s)];
    u64 x = 0;
    for (u64 i = 1; i < (u64{1} << s); ++i) {
      x ^= rows[std::countr_zero(i)];
      in_union[x] = 1;
    }
  }
  std::vector<u64> members;
  for (u64 v = 1; v < (u64{1} << r); ++v)
    if (in_union[v]) members.push_back(v);

  SearchOutcome out = verified_set_outcome(vectorset_from_masks(r, members), s,
                                           SetKind::good, chosen.size(), budget,
                                           "greedy_subspace_union");
  return out;
}

SearchOutcome randomized_search(int r, int s, SetKind kind, u64 seed,
                                u64 max_trials, u64 budget) {
  require_rs(r, s, "randomized_search");
  if (max_trials < 1) throw ParamError("randomized_search: need max_trials >= 1");
  const u64 nz = (u64{1} << r) - 1;
  u64 n = threshold_N(kind, r, s, budget);
  charge_budget("randomized_search",
                saturating_mul(max_trials, u128{1} << r), budget);

  auto finish = [&](std::vector<u64> masks, u64 trials) {
    std::sort(masks.begin(), masks.end());
    VectorSet set = vectorset_from_masks(r, masks);
    VerifyResult v = kind == SetKind::good
                         ? is_good_set(set, s, GoodMethod::flats, budget)
                         : is_generic_set(set, s, GenericMethod::cosets, budget);
    if (!v.pass) return std::optional<SearchOutcome>{};
    SearchOutcome out;
    out.size = set.size();
    out.set = std::move(set);
    out.optimal = false;
    out.nodes_explored = trials;
    out.seed = seed;
    return std::optional<SearchOutcome>{std::move(out)};
  };

  if (n >= nz) {
    std::vector<u64> all;
    all.reserve(nz);
    for (u64 v = 1; v <= nz; ++v) all.push_back(v);
    auto out = finish(std::move(all), 1);
    if (!out) throw DataError("randomized_search: full nonzero set rejected");
    return *out;
  }

  std::vector<u64> pool(nz);
  for (u64 t = 0; t < max_trials; ++t) {
    for (u64 i = 0; i < nz; ++i) pool[i] = i + 1;
    SplitMix rng = derived_stream(seed, t);
    std::vector<u64> sample;
    sample.reserve(n);
    for (u64 i = 0; i < n; ++i) {
      u64 j = i + rng.next_below(nz - i);
      std::swap(pool[i], pool[j]);
      sample.push_back(pool[i]);
    }
    auto out = finish(std::move(sample), t + 1);
    if (out) return *out;
  }
  throw BudgetError("randomized_search verified trials", max_trials + 1,
                    max_trials);
}

SearchOutcome exact_minimum(int r, int s, SetKind kind, u64 node_budget) {
  require_rs(r, s, "exact_minimum");
  const bool ok = kind == SetKind::generic
                      ? r <= 5
                      : (r <= 5 || (r == 6 && (s == 1 || s == 5 || s == 6)));
  if (!ok) throw ParamError("exact_minimum: parameters outside the exact-search envelope");

  const u64 nz = (u64{1} << r) - 1;
  // per-edge masks of covering vectors (bit v-1 for vector v)
  std::vector<u64> edges;
  std::vector<u64> class_mask(u64{1} << s, 0);
  std::vector<u64> bases =
      kind == SetKind::generic ? class_basis_masks(s) : std::vector<u64>{};
  enumerate_subspaces(r, s, [&](const Flat& f) {
    std::fill(class_mask.begin(), class_mask.end(), 0);
    for (u64 v = 1; v <= nz; ++v) {
      u64 sig = 0;
      for (int i = 0; i < s; ++i)
        sig |= static_cast<u64>(parity(f.basis.row_bits[static_cast<size_t>(i)] & v))
               << i;
      class_mask[sig] |= u64{1} << (v - 1);
    }
    if (kind == SetKind::good) {
      for (u64 c = 1; c < (u64{1} << s); ++c) edges.push_back(class_mask[c]);
    } else {
      for (u64 bm : bases) {
        u64 cover = 0;
        for (u64 rest = bm; rest != 0; rest &= rest - 1)
          cover |= class_mask[static_cast<u64>(std::countr_zero(rest)) + 1];
        edges.push_back(cover);
      }
    }
    return true;
  });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const u64 ne = edges.size();

  // greedy seed with the library tie rule
  u64 seed_mask = 0;
  {
    std::vector<char> cov(ne, 0);
    u64 unc = ne;
    while (unc > 0) {
      u64 best = 0;
      i64 bestc = -1;
      for (u64 v = 1; v <= nz; ++v) {
        i64 c = 0;
        for (u64 e = 0; e < ne; ++e)
          if (!cov[e] && ((edges[e] >> (v - 1)) & 1u)) ++c;
        if (c > bestc || (c == bestc && lex_less(v, best))) {
          bestc = c;
          best = v;
        }
      }
      if (bestc <= 0) throw DataError("exact_minimum: greedy seed stalled");
      seed_mask |= u64{1} << (best - 1);
      for (u64 e = 0; e < ne; ++e)
        if (!cov[e] && ((edges[e] >> (best - 1)) & 1u)) {
          cov[e] = 1;
          --unc;
        }
    }
  }

  int best_size = std::popcount(seed_mask);
  u64 best_mask = seed_mask;
  u64 nodes = 0;
  bool aborted = false;
  XorBasis basis;
  i32 marg[64];

  std::function<void(u64, u64, int)> rec = [&](u64 chosen, u64 banned, int depth) {
    if (aborted) return;
    ++nodes;
    if (nodes > node_budget) {
      aborted = true;
      return;
    }
    u64 unc = 0;
    u64 branch_allowed = 0;
    int branch_width = 65;
    for (int i = 0; i < 64; ++i) marg[i] = 0;
    for (u64 e = 0; e < ne; ++e) {
      u64 em = edges[e];
      if (em & chosen) continue;
      ++unc;
      u64 allowed = em & ~banned;
      int w = std::popcount(allowed);
      if (w < branch_width) {
        branch_width = w;
        branch_allowed = allowed;
      }
      for (u64 rest = em; rest != 0; rest &= rest - 1)
        ++marg[std::countr_zero(rest)];
    }
    if (unc == 0) {
      best_size = depth;
      best_mask = chosen;
      return;
    }
    if (branch_width == 0) return;
    i32 maxmarg = 1;
    for (int i = 0; i < 64; ++i)
      if (!((banned >> i) & 1u) && marg[i] > maxmarg) maxmarg = marg[i];
    u64 cover_lb = (unc + static_cast<u64>(maxmarg) - 1) / static_cast<u64>(maxmarg);
    u64 rank_lb = static_cast<u64>(r - basis.rank);
    u64 lb = std::max(cover_lb, rank_lb);
    if (static_cast<u64>(depth) + lb >= static_cast<u64>(best_size)) return;

    // branch vertices by descending marginal, then lexicographically
    std::vector<int> order;
    for (u64 rest = branch_allowed; rest != 0; rest &= rest - 1)
      order.push_back(std::countr_zero(rest));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (marg[a] != marg[b]) return marg[a] > marg[b];
      return lex_less(static_cast<u64>(a) + 1, static_cast<u64>(b) + 1);
    });
    u64 local_banned = banned;
    for (int bit : order) {
      u64 v = static_cast<u64>(bit) + 1;
      int slot = basis.insert(v);
      rec(chosen | (u64{1} << bit), local_banned, depth + 1);
      if (slot >= 0) basis.erase_slot(slot);
      local_banned |= u64{1} << bit;
      if (aborted) return;
    }
  };
  rec(0, 0, 0);

  std::vector<u64> members;
  for (u64 v = 1; v <= nz; ++v)
    if ((best_mask >> (v - 1)) & 1u) members.push_back(v);
  VectorSet set = vectorset_from_masks(r, members);
  VerifyResult vr = kind == SetKind::good
                        ? is_good_set(set, s, GoodMethod::flats)
                        : is_generic_set(set, s, GenericMethod::cosets);
  if (!vr.pass) throw DataError("exact_minimum: witness failed verification");
  SearchOutcome out;
  out.size = best_size;
  out.set = std::move(set);
  out.optimal = !aborted;
  out.nodes_explored = nodes;
  return out;
}

SearchOutcome greedy_parity_check(const LinearCode& code, u64 budget) {
  const int n = code.n;
  const int k = code.k;
  const int r = n - k;
  if (r < 1) throw ParamError("greedy_parity_check: code has no redundancy");
  if (r > 20) throw ParamError("greedy_parity_check: dual dimension beyond 20");
  const int d = min_max_distance(code).first;

  u128 ne128 = 0;
  for (int t = 1; t <= d - 1; ++t) ne128 += binom64(n, t);
  const u64 nv = (u64{1} << r) - 1;
  charge_budget("greedy_parity_check",
                saturating_mul(2, saturating_mul(ne128, nv)) +
                    saturating_mul(std::min<u128>(nv, ne128), ne128 + nv) +
                    (u128{1} << k) + (u128{1} << r),
                budget);

  std::vector<u64> duals;
  duals.reserve(nv);
  enumerate_dual_codewords(code, [&](const BitVector& w) {
    duals.push_back(w.bits);
    return true;
  });

  // coordinate sets by ascending size, ascending packed mask within a size
  std::vector<u64> edges;
  edges.reserve(static_cast<size_t>(ne128));
  for (int t = 1; t <= d - 1; ++t) {
    u64 mask = (u64{1} << t) - 1;
    const u64 last = mask << (n - t);
    for (;;) {
      edges.push_back(mask);
      if (mask == last) break;
      u64 lo = mask & (~mask + 1);
      u64 carry = mask + lo;
      mask = carry | (((mask ^ carry) / lo) >> 2);
    }
  }
  const u64 ne = edges.size();

  std::vector<i64> counters(duals.size(), 0);
  for (u64 e = 0; e < ne; ++e) {
    u64 kmask = edges[e];
    int ksize = std::popcount(kmask);
    u64 deg = 0;
    for (size_t i = 0; i < duals.size(); ++i)
      if (std::popcount(duals[i] & kmask) == 1) {
        ++counters[i];
        ++deg;
      }
    if (deg != static_cast<u64>(ksize) << (r - ksize))
      throw DataError("greedy_parity_check: edge degree mismatch");
  }
  for (size_t i = 0; i < duals.size(); ++i) {
    int wt = std::popcount(duals[i]);
    u64 alpha = 0;
    for (int j = 0; j <= d - 2; ++j) alpha += binom64(n - wt, j);
    alpha *= static_cast<u64>(wt);
    if (static_cast<u64>(counters[i]) != alpha)
      throw DataError("greedy_parity_check: vertex degree mismatch");
  }

  std::vector<char> covered(ne, 0);
  u64 uncovered = ne;
  std::vector<u64> rows;
  while (uncovered > 0) {
    size_t best = 0;
    i64 bestc = -1;
    for (size_t i = 0; i < duals.size(); ++i)
      if (counters[i] > bestc ||
          (counters[i] == bestc && lex_less(duals[i], duals[best]))) {
        bestc = counters[i];
        best = i;
      }
    if (bestc <= 0) throw DataError("greedy_parity_check: cover stalled");
    u64 pick = duals[best];
    rows.push_back(pick);
    for (u64 e = 0; e < ne; ++e) {
      if (covered[e] || std::popcount(pick & edges[e]) != 1) continue;
      covered[e] = 1;
      --uncovered;
      for (size_t i = 0; i < duals.size(); ++i)
        if (std::popcount(duals[i] & edges[e]) == 1) --counters[i];
    }
  }
  const u64 greedy_rounds = rows.size();

  XorBasis xb;
  for (u64 w : rows) xb.insert(w);
  for (size_t i = 0; i < duals.size() && xb.rank < r; ++i)
    if (xb.insert(duals[i]) >= 0) rows.push_back(duals[i]);

  BinMatrix h(0, n);
  for (u64 w : rows) h.push_row_bits(w);
  if (rank_of(h) != r)
    throw DataError("greedy_parity_check: completion failed to reach full rank");
  std::optional<int> sd = stopping_distance(h, d);
  if (!sd || *sd != d)
    throw DataError("greedy_parity_check: stopping distance mismatch");
  if (d >= 2) {
    double lnsum = 0;
    for (int t = 1; t <= d - 1; ++t) lnsum += static_cast<double>(binom64(n, t));
    double bound = std::ldexp(1.0, d - 1) / (d - 1) * (1.0 + std::log(lnsum)) +
                   static_cast<double>(r - d + 1);
    if (static_cast<double>(rows.size()) > bound)
      throw DataError("greedy_parity_check: row count exceeds the covering guarantee");
  }

  SearchOutcome out;
  out.matrix = std::move(h);
  out.size = static_cast<int>(rows.size());
  out.optimal = false;
  out.nodes_explored = greedy_rounds;
  return out;
}

}  // namespace genset
