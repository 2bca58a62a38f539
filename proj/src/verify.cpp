#include "genset/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "genset/matrix.hpp"

namespace genset {

namespace {

constexpr u128 kSaturated = ~u128{0};

u128 saturating_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

// prod_{i<s} (2^dim - 2^i), the number of ordered independent s-tuples.
u128 ordered_tuple_count(int dim, int s) {
  u128 n = 1;
  for (int i = 0; i < s; ++i)
    n = saturating_mul(n, (u128{1} << dim) - (u128{1} << i));
  return n;
}

// Unordered count: the ordered count divided by s!. Saturation survives the
// division conservatively (a saturated value stays over any u64 budget).
u128 unordered_tuple_count(int dim, int s) {
  u128 n = ordered_tuple_count(dim, s);
  if (n == kSaturated) return n;
  for (int i = 2; i <= s; ++i) n /= static_cast<u128>(i);
  return n;
}

u128 saturating_gaussian(int m, int k) {
  try {
    return gaussian_coefficient(m, k);
  } catch (const std::overflow_error&) {
    return kSaturated;
  }
}

// Incremental GF(2) elimination over packed words, one stored row per
// leading-bit slot. insert() returns the filled slot (for backtracking) or
// -1 when the word is already in the span.
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

  bool contains(u64 v) const {
    while (v != 0) {
      int b = 63 - std::countl_zero(v);
      if (rows[b] == 0) return false;
      v ^= rows[b];
    }
    return true;
  }

  void erase_slot(int b) {
    rows[b] = 0;
    --rank;
  }
};

u64 rank_of_words(const std::vector<BitVector>& vs) {
  XorBasis xb;
  for (const BitVector& v : vs) xb.insert(v.bits);
  return static_cast<u64>(xb.rank);
}

// Up to four r-bit functionals packed at 16-bit lane offsets; sig_at(v)
// returns the s-bit word whose bit i is <h_i, v>. One multiply spreads v
// across the lanes, xor-folds reduce each lane to its parity, and a second
// multiply gathers the lane parities into adjacent bits. Requires r <= 16
// and at most 4 rows; the folds only consume bits below the position they
// write, so lanes never contaminate each other.
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

// Visits every unordered independent s-tuple over F_2^dim as an ascending
// packed sequence; the callback returning false stops the walk.
bool walk_independent_tuples(int dim, int s,
                             const std::function<bool(const std::vector<u64>&)>& cb) {
  std::vector<u64> tup(static_cast<size_t>(s), 0);
  XorBasis xb;
  const u64 top = u64{1} << dim;
  std::function<bool(int, u64)> rec = [&](int depth, u64 start) {
    for (u64 v = start; v < top; ++v) {
      if (xb.contains(v)) continue;
      tup[static_cast<size_t>(depth)] = v;
      if (depth + 1 == s) {
        if (!cb(tup)) return false;
      } else {
        int slot = xb.insert(v);
        bool go = rec(depth + 1, v + 1);
        xb.erase_slot(slot);
        if (!go) return false;
      }
    }
    return true;
  };
  if (s == 0) return true;
  return rec(0, 1);
}

// True when the image {aM : a in A} covers some {x : u.x = 1}, u != 0.
bool image_covers_hyperplane(const VectorSet& a, const BinMatrix& m) {
  int s = m.cols;
  const u64 classes = u64{1} << s;
  std::vector<char> in_image(static_cast<size_t>(classes), 0);
  for (const BitVector& v : a.members)
    in_image[static_cast<size_t>(vec_mat(v, m).bits)] = 1;
  for (u64 u = 1; u < classes; ++u) {
    bool all = true;
    for (u64 x = 0; x < classes && all; ++x)
      if (parity(u & x) && !in_image[static_cast<size_t>(x)]) all = false;
    if (all) return true;
  }
  return false;
}

// Distinct count of the packed patterns the rows of b show on `cols`,
// skipping the column at position `skip` (pass skip = -1 to keep all).
u64 distinct_patterns(const BinMatrix& b, const std::vector<int>& cols, int skip) {
  std::vector<u64> pats;
  pats.reserve(b.row_bits.size());
  for (u64 row : b.row_bits) {
    u64 p = 0;
    int j = 0;
    for (size_t t = 0; t < cols.size(); ++t) {
      if (static_cast<int>(t) == skip) continue;
      p |= ((row >> cols[t]) & 1u) << j;
      ++j;
    }
    pats.push_back(p);
  }
  std::sort(pats.begin(), pats.end());
  return static_cast<u64>(std::unique(pats.begin(), pats.end()) - pats.begin());
}

// Columns `cols` of b restricted to every (s-1)-subset: true when no subset
// exhibits all 2^(s-1) patterns (the failure condition of the column
// property). With s = 1 the empty subset always exhibits its one pattern.
bool columns_uncoverable(const BinMatrix& b, const std::vector<int>& cols) {
  int s = static_cast<int>(cols.size());
  for (int skip = 0; skip < s; ++skip)
    if (distinct_patterns(b, cols, skip) == u64{1} << (s - 1)) return false;
  return true;
}

void require_rs(int r, int s, const char* who) {
  if (r < 1 || r > kMaxDim) throw ParamError(std::string(who) + ": bad ambient dimension");
  if (s < 1 || s > r) throw ParamError(std::string(who) + ": need 1 <= s <= r");
}

}  // namespace

VerifyResult is_good_set(const VectorSet& a, int s, GoodMethod method, u64 budget) {
  int r = a.ambient;
  require_rs(r, s, "is_good_set");
  VerifyResult res{true, std::nullopt};

  if (method == GoodMethod::definition) {
    // One unit per unordered independent s-tuple of constraint vectors.
    charge_budget("is_good_set/definition", unordered_tuple_count(r, s), budget);
    walk_independent_tuples(r, s, [&](const std::vector<u64>& tup) {
      for (const BitVector& x : a.members) {
        bool all = true;
        for (int j = 0; j < s && all; ++j)
          all = parity(tup[static_cast<size_t>(j)] & x.bits) != 0;
        if (all) return true;
      }
      Certificate c;
      c.kind = CertKind::bad_tuple;
      for (u64 v : tup) c.vectors.emplace_back(v, r);
      res = {false, std::move(c)};
      return false;
    });
    return res;
  }

  // flats: one unit per coset of dimension r-s; subspaces are skipped since
  // a system v_j.x = 1 never admits 0 as a solution.
  charge_budget("is_good_set/flats",
                saturating_mul(u128{1} << s, saturating_gaussian(r, r - s)), budget);

  if (s <= 4 && r <= 16) {
    // Per direction subspace V, a missed coset x+V is a missed value of the
    // canonical-representative map v -> rep(v). The representative is linear
    // in v: its bit at free column q_i is <h_i, v> with h_i = e_{q_i} plus
    // the pivot indicators of the basis rows set at q_i, so the hit classes
    // come out of one lane-fold signature per member. Class indices are the
    // free bits read off ascending columns, which orders the 2^s reps by
    // packed value, so the least missed class is the first missed flat.
    const u64 full = static_cast<u64>((u64{1} << (u64{1} << s)) - 1);
    std::vector<u64> mem;
    mem.reserve(a.members.size());
    for (const BitVector& v : a.members) mem.push_back(v.bits);
    enumerate_subspaces(r, r - s, [&](const Flat& sub) {
      u64 pm = 0;
      for (u64 w : sub.basis.row_bits) pm |= w & (~w + 1);
      LaneSig ls;
      int freecol[4] = {0, 0, 0, 0};
      int idx = 0;
      for (int q = 0; q < r; ++q) {
        if ((pm >> q) & 1u) continue;
        u64 h = u64{1} << q;
        for (u64 w : sub.basis.row_bits)
          if ((w >> q) & 1u) h |= w & (~w + 1);
        freecol[idx] = q;
        ls.set_row(idx, h);
        ++idx;
      }
      u64 hit = 1;  // class 0 is the subspace itself, never demanded
      for (u64 v : mem) {
        hit |= u64{1} << ls.sig_at(v);
        if (hit == full) break;
      }
      if (hit == full) return true;
      int cls = std::countr_zero(~hit & full);
      u64 rep = 0;
      for (int i = 0; i < s; ++i)
        if ((cls >> i) & 1) rep |= u64{1} << freecol[i];
      Certificate c;
      c.kind = CertKind::missed_flat;
      c.flat = make_flat(r, sub.basis, BitVector(rep, r));
      res = {false, std::move(c)};
      return false;
    });
    return res;
  }

  enumerate_flats(r, r - s, [&](const Flat& f) {
    if (f.is_subspace()) return true;
    for (const BitVector& x : a.members)
      if (f.contains(x)) return true;
    Certificate c;
    c.kind = CertKind::missed_flat;
    c.flat = f;
    res = {false, std::move(c)};
    return false;
  });
  return res;
}

VerifyResult is_generic_set(const VectorSet& a, int s, GenericMethod method, u64 budget) {
  int r = a.ambient;
  require_rs(r, s, "is_generic_set");
  VerifyResult res{true, std::nullopt};

  if (method == GenericMethod::cosets) {
    // One unit per (direction, syndrome class) pair. The class table holds
    // 2^s generation stamps, so s is capped well below the word width.
    if (s > 20) throw ParamError("is_generic_set/cosets: s too large for the class table");
    charge_budget("is_generic_set/cosets",
                  saturating_mul(saturating_gaussian(r, s), u128{1} << s), budget);

    if (s <= 4 && r <= 16) {
      // Signatures against the s basis rows of each direction come from one
      // lane-fold per member; the hit classes accumulate in a 2^s-bit mask.
      const u64 full = static_cast<u64>((u64{1} << (u64{1} << s)) - 1);
      std::vector<u64> mem;
      mem.reserve(a.members.size());
      for (const BitVector& v : a.members) mem.push_back(v.bits);
      enumerate_subspaces(r, s, [&](const Flat& w) {
        LaneSig ls;
        for (int i = 0; i < s; ++i)
          ls.set_row(i, w.basis.row_bits[static_cast<size_t>(i)]);
        u64 hit = 1;
        for (u64 v : mem) {
          hit |= u64{1} << ls.sig_at(v);
          if (hit == full) break;
        }
        u64 missed = ~hit & full;
        if (missed == 0) return true;
        // The direction fails exactly when the missed classes contain a
        // basis of F_2^s; take the lexicographically least independent
        // family, walking the missed classes in ascending order.
        XorBasis xb;
        std::vector<BitVector> family;
        for (u64 rest = missed; rest != 0 && static_cast<int>(family.size()) < s;
             rest &= rest - 1) {
          u64 cls = static_cast<u64>(std::countr_zero(rest));
          if (xb.insert(cls) >= 0) family.emplace_back(cls, s);
        }
        if (static_cast<int>(family.size()) < s) return true;
        Certificate c;
        c.kind = CertKind::bad_coset_family;
        c.mat = w.basis;
        c.vectors = std::move(family);
        res = {false, std::move(c)};
        return false;
      });
      return res;
    }

    const u64 classes = u64{1} << s;
    std::vector<u64> stamp(static_cast<size_t>(classes), 0);
    u64 gen = 0;
    enumerate_subspaces(r, s, [&](const Flat& w) {
      ++gen;
      u64 hit_nonzero = 0;
      for (const BitVector& v : a.members) {
        u64 sig = 0;
        for (int i = 0; i < s; ++i)
          sig |= static_cast<u64>(parity(w.basis.row_bits[static_cast<size_t>(i)] & v.bits)) << i;
        if (stamp[static_cast<size_t>(sig)] != gen) {
          stamp[static_cast<size_t>(sig)] = gen;
          if (sig != 0 && ++hit_nonzero == classes - 1) break;
        }
      }
      if (hit_nonzero == classes - 1) return true;
      // The direction fails exactly when the missed classes contain a basis
      // of F_2^s. Extract the lexicographically least independent family.
      XorBasis xb;
      std::vector<BitVector> family;
      for (u64 cls = 1; cls < classes && static_cast<int>(family.size()) < s; ++cls) {
        if (stamp[static_cast<size_t>(cls)] == gen) continue;
        if (xb.insert(cls) >= 0) family.emplace_back(cls, s);
      }
      if (static_cast<int>(family.size()) < s) return true;
      Certificate c;
      c.kind = CertKind::bad_coset_family;
      c.mat = w.basis;
      c.vectors = std::move(family);
      res = {false, std::move(c)};
      return false;
    });
    return res;
  }

  // matrices and hyperplanes both walk the full-rank r x s matrices; one
  // unit per matrix.
  charge_budget(method == GenericMethod::matrices ? "is_generic_set/matrices"
                                                  : "is_generic_set/hyperplanes",
                ordered_tuple_count(r, s), budget);
  if (method == GenericMethod::hyperplanes && s > 20)
    throw ParamError("is_generic_set/hyperplanes: s too large for the image table");
  enumerate_full_rank(r, s, [&](const BinMatrix& m) {
    if (method == GenericMethod::matrices) {
      for (const BitVector& v : a.members)
        if (vec_mat(v, m).weight() == 1) return true;
    } else {
      if (image_covers_hyperplane(a, m)) return true;
    }
    Certificate c;
    c.kind = CertKind::bad_matrix;
    c.mat = m;
    res = {false, std::move(c)};
    return false;
  });
  return res;
}

VerifyResult is_swise_intersecting(const BinMatrix& gen, int s, u64 budget) {
  int k = gen.rows();
  int n = gen.cols;
  if (k < 1 || n < 1) throw ParamError("is_swise_intersecting: empty generator");
  if (rank_of(gen) != k) throw ParamError("is_swise_intersecting: generator rows dependent");
  if (s < 1 || s > k) throw ParamError("is_swise_intersecting: need 1 <= s <= k");
  // One unit per unordered independent message tuple; full row rank makes
  // message independence and codeword independence coincide.
  charge_budget("is_swise_intersecting", unordered_tuple_count(k, s), budget);

  VerifyResult res{true, std::nullopt};
  std::vector<u64> words(static_cast<size_t>(s), 0);
  walk_independent_tuples(k, s, [&](const std::vector<u64>& msgs) {
    u64 common = ~u64{0};
    for (int j = 0; j < s; ++j) {
      words[static_cast<size_t>(j)] =
          vec_mat(BitVector(msgs[static_cast<size_t>(j)], k), gen).bits;
      common &= words[static_cast<size_t>(j)];
    }
    if (common != 0) return true;
    Certificate c;
    c.kind = CertKind::bad_tuple;
    for (u64 w : words) c.vectors.emplace_back(w, n);
    res = {false, std::move(c)};
    return false;
  });
  return res;
}

RoundtripResult good_intersecting_roundtrip(const VectorSet& a, int s, u64 budget) {
  int r = a.ambient;
  require_rs(r, s, "good_intersecting_roundtrip");
  RoundtripResult out;
  out.good = is_good_set(a, s, GoodMethod::flats, budget);
  BinMatrix g = transpose(a.as_matrix());
  if (rank_of(g) < r) {
    // A set that does not span F_2^r is not good (complete any functional
    // vanishing on span(A) to an independent tuple) and generates a code of
    // dimension below r, so both sides of the equivalence are false.
    out.intersecting = VerifyResult{false, std::nullopt};
  } else {
    out.intersecting = is_swise_intersecting(g, s, budget);
  }
  out.agree = out.good.pass == out.intersecting.pass;
  return out;
}

VerifyResult is_covering_array(const BinMatrix& m, int t) {
  int k = m.rows();
  if (k < 1 || m.cols < 1) throw ParamError("is_covering_array: empty array");
  if (t < 1 || t > k) throw ParamError("is_covering_array: need 1 <= t <= k");

  VerifyResult res{true, std::nullopt};
  std::vector<int> rows(static_cast<size_t>(t), 0);
  std::vector<u64> pats;
  // Row subsets in ascending packed-mask order (Gosper), rows listed
  // ascending inside each subset; pattern bit j = entry in the j-th row.
  u64 mask = (u64{1} << t) - 1;
  const u64 last = ((u64{1} << t) - 1) << (k - t);
  for (;;) {
    u64 rest = mask;
    for (int j = 0; j < t; ++j) {
      rows[static_cast<size_t>(j)] = std::countr_zero(rest);
      rest &= rest - 1;
    }
    pats.clear();
    for (int c = 0; c < m.cols; ++c) {
      u64 p = 0;
      for (int j = 0; j < t; ++j)
        p |= ((m.row_bits[static_cast<size_t>(rows[static_cast<size_t>(j)])] >> c) & 1u)
             << j;
      pats.push_back(p);
    }
    // Least pattern value absent from the sorted list, if any; t <= 63
    // keeps 2^t inside a word while the list itself has at most cols
    // entries.
    std::sort(pats.begin(), pats.end());
    u64 expect = 0;
    for (u64 p : pats) {
      if (p > expect) break;
      if (p == expect) ++expect;
    }
    if (expect != u64{1} << t) {
      Certificate c;
      c.kind = CertKind::missing_pattern;
      c.indices.assign(rows.begin(), rows.end());
      c.vectors.emplace_back(expect, t);
      res = {false, std::move(c)};
      return res;
    }
    if (mask == last) break;
    u64 lo = mask & -mask;
    u64 carry = mask + lo;
    mask = carry | (((mask ^ carry) / lo) >> 2);
  }
  return res;
}

VerifyResult is_subspace_blocking(const VectorSet& a, int s) {
  int k = a.ambient;
  if (s < 1 || s >= k) throw ParamError("is_subspace_blocking: need 1 <= s < k");
  VerifyResult res{true, std::nullopt};
  enumerate_subspaces(k, k - s, [&](const Flat& f) {
    for (const BitVector& x : a.members)
      if (f.contains(x)) return true;
    Certificate c;
    c.kind = CertKind::missed_subspace;
    c.flat = f;
    res = {false, std::move(c)};
    return false;
  });
  return res;
}

VerifyResult generic_column_property(const VectorSet& a, int s, int trials, u64 seed) {
  int r = a.ambient;
  require_rs(r, s, "generic_column_property");
  if (trials < 1) throw ParamError("generic_column_property: need trials >= 1");
  VerifyResult res{true, std::nullopt};
  if (s == 1) return res;  // the empty column subset covers its one pattern

  for (int t = 0; t < trials; ++t) {
    // Trial t draws from the stream derived from (seed, t), matching the
    // library-wide substream convention.
    BinMatrix n = random_invertible(r, seed ^ static_cast<u64>(t));
    BinMatrix b = mat_mul(a.as_matrix(), n);
    // Column s-subsets in ascending packed-mask order.
    std::vector<int> cols(static_cast<size_t>(s), 0);
    u64 mask = (u64{1} << s) - 1;
    const u64 last = ((u64{1} << s) - 1) << (r - s);
    for (;;) {
      u64 rest = mask;
      for (int j = 0; j < s; ++j) {
        cols[static_cast<size_t>(j)] = std::countr_zero(rest);
        rest &= rest - 1;
      }
      if (columns_uncoverable(b, cols)) {
        Certificate c;
        c.kind = CertKind::missing_pattern;
        c.mat = n;
        c.indices = cols;
        res = {false, std::move(c)};
        return res;
      }
      if (mask == last) break;
      u64 lo = mask & -mask;
      u64 carry = mask + lo;
      mask = carry | (((mask ^ carry) / lo) >> 2);
    }
  }
  return res;
}

bool replay_certificate(const Certificate& c, const VectorSet& a, int s) {
  int r = a.ambient;
  switch (c.kind) {
    case CertKind::missed_flat: {
      if (!c.flat || c.flat->m != r || c.flat->dim() != r - s || c.flat->is_subspace())
        return false;
      for (const BitVector& x : a.members)
        if (c.flat->contains(x)) return false;
      return true;
    }
    case CertKind::bad_tuple: {
      if (static_cast<int>(c.vectors.size()) != s) return false;
      for (const BitVector& v : c.vectors)
        if (v.dim != r) return false;
      if (rank_of_words(c.vectors) != static_cast<u64>(s)) return false;
      for (const BitVector& x : a.members) {
        bool all = true;
        for (const BitVector& v : c.vectors)
          if (!dot(v, x)) {
            all = false;
            break;
          }
        if (all) return false;
      }
      return true;
    }
    case CertKind::bad_matrix: {
      // Replays through the hyperplane condition, which a unit-weight
      // failure also violates: any {x : u.x = 1} contains a unit vector.
      if (!c.mat || c.mat->rows() != r || c.mat->cols < 1 || c.mat->cols > r)
        return false;
      if (c.mat->cols != s || rank_of(*c.mat) != s) return false;
      return !image_covers_hyperplane(a, *c.mat);
    }
    case CertKind::bad_coset_family: {
      if (!c.mat || c.mat->rows() != s || c.mat->cols != r) return false;
      if (rank_of(*c.mat) != s) return false;
      if (static_cast<int>(c.vectors.size()) != s) return false;
      if (rank_of_words(c.vectors) != static_cast<u64>(s)) return false;
      for (const BitVector& cls : c.vectors) {
        if (cls.dim != s) return false;
        for (const BitVector& v : a.members) {
          u64 sig = 0;
          for (int i = 0; i < s; ++i)
            sig |= static_cast<u64>(
                       parity(c.mat->row_bits[static_cast<size_t>(i)] & v.bits))
                   << i;
          if (sig == cls.bits) return false;
        }
      }
      return true;
    }
    case CertKind::missed_subspace: {
      if (!c.flat || c.flat->m != r || c.flat->dim() != r - s || !c.flat->is_subspace())
        return false;
      for (const BitVector& x : a.members)
        if (c.flat->contains(x)) return false;
      return true;
    }
    case CertKind::missing_pattern: {
      // Column-property failure: N plus an s-subset of columns of A*N for
      // which no (s-1)-subset exhibits all patterns.
      if (!c.mat || c.mat->rows() != r || c.mat->cols != r) return false;
      if (rank_of(*c.mat) != r) return false;
      if (static_cast<int>(c.indices.size()) != s) return false;
      for (size_t j = 0; j < c.indices.size(); ++j) {
        if (c.indices[j] < 0 || c.indices[j] >= r) return false;
        if (j > 0 && c.indices[j] <= c.indices[j - 1]) return false;
      }
      BinMatrix b = mat_mul(a.as_matrix(), *c.mat);
      return columns_uncoverable(b, c.indices);
    }
  }
  return false;
}

bool replay_certificate(const Certificate& c, const BinMatrix& m, int s_or_t) {
  switch (c.kind) {
    case CertKind::bad_tuple: {
      if (static_cast<int>(c.vectors.size()) != s_or_t) return false;
      RrefResult rr = rank_rref(m);
      u64 common = ~u64{0};
      for (const BitVector& w : c.vectors) {
        if (w.dim != m.cols || !in_rowspace(w, rr)) return false;
        common &= w.bits;
      }
      if (rank_of_words(c.vectors) != static_cast<u64>(s_or_t)) return false;
      return common == 0;
    }
    case CertKind::missing_pattern: {
      int t = s_or_t;
      if (static_cast<int>(c.indices.size()) != t || c.vectors.size() != 1) return false;
      if (c.vectors[0].dim != t) return false;
      for (int ri : c.indices)
        if (ri < 0 || ri >= m.rows()) return false;
      for (int col = 0; col < m.cols; ++col) {
        u64 p = 0;
        for (int j = 0; j < t; ++j)
          p |= ((m.row_bits[static_cast<size_t>(c.indices[static_cast<size_t>(j)])] >> col) &
                1u)
               << j;
        if (p == c.vectors[0].bits) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

}  // namespace genset
