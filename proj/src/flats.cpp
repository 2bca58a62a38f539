#include "genset/flats.hpp"

#include <algorithm>
#include <bit>

namespace genset {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace {

u128 checked_add(u128 a, u128 b) {
  u128 s = a + b;
  if (s < a) throw std::overflow_error("gaussian_coefficient: 128-bit overflow");
  return s;
}

u128 checked_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  u128 p = a * b;
  if (p / a != b) throw std::overflow_error("gaussian_coefficient: 128-bit overflow");
  return p;
}

}  // namespace

u128 gaussian_coefficient(int m, int k, u64 q) {
  if (q < 2) throw ParamError("gaussian_coefficient: q must be at least 2");
  if (m < 0 || k < 0 || k > m)
    throw ParamError("gaussian_coefficient: need 0 <= k <= m");
  if (k > m - k) k = m - k;
  // q-Pascal recurrence: [m,k] = [m-1,k-1] + q^k [m-1,k].
  std::vector<u128> row(static_cast<size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    int top = std::min(i, k);
    for (int j = top; j >= 1; --j) {
      u128 qk = 1;
      for (int t = 0; t < j; ++t) qk = checked_mul(qk, q);
      row[static_cast<size_t>(j)] =
          checked_add(row[static_cast<size_t>(j - 1)],
                      checked_mul(qk, row[static_cast<size_t>(j)]));
    }
  }
  return row[static_cast<size_t>(k)];
}

u64 gaussian_coefficient_u64(int m, int k, u64 q) {
  u128 v = gaussian_coefficient(m, k, q);
  if (v > static_cast<u128>(~u64{0}))
    throw std::overflow_error("gaussian_coefficient: does not fit 64 bits");
  return static_cast<u64>(v);
}

bool Flat::contains(const BitVector& x) const {
  if (x.dim != m) throw ParamError("Flat::contains: dimension mismatch");
  // reduce x - rep by the basis; pivot of an RREF row is its lowest set bit
  u64 v = x.bits ^ rep.bits;
  for (u64 row : basis.row_bits)
    if ((v >> std::countr_zero(row)) & 1u) v ^= row;
  return v == 0;
}

std::vector<BitVector> Flat::points() const {
  std::vector<BitVector> out;
  int t = dim();
  out.reserve(size_t{1} << t);
  u64 x = rep.bits;
  out.emplace_back(x, m);
  for (u64 i = 1; i < (u64{1} << t); ++i) {
    x ^= basis.row_bits[static_cast<size_t>(std::countr_zero(i))];
    out.emplace_back(x, m);
  }
  return out;
}

Flat make_flat(int m, const BinMatrix& basis_any, const BitVector& x) {
  if (basis_any.cols != m || x.dim != m) throw ParamError("make_flat: dimension mismatch");
  RrefResult rr = rank_rref(basis_any);
  Flat f;
  f.m = m;
  f.basis = rr.rref;
  f.rep = canonical_coset_rep(x, rr);
  return f;
}

namespace {

// Shared pivot-combination walker. Pivot sets in lexicographic order, e.g.
// for m=4, t=2: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
template <typename Fn>
void for_each_pivot_set(int m, int t, Fn&& fn) {
  std::vector<int> p(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) p[static_cast<size_t>(i)] = i;
  if (t == 0) {
    fn(p);
    return;
  }
  while (true) {
    fn(p);
    int i = t - 1;
    while (i >= 0 && p[static_cast<size_t>(i)] == m - t + i) --i;
    if (i < 0) break;
    ++p[static_cast<size_t>(i)];
    for (int j = i + 1; j < t; ++j)
      p[static_cast<size_t>(j)] = p[static_cast<size_t>(j - 1)] + 1;
  }
}

struct FreeCell { int row; int col; };

// Free positions of an RREF shape: (i, j) with j > p_i, j not a pivot,
// row-major order.
std::vector<FreeCell> free_cells(const std::vector<int>& pivots, int m) {
  u64 pm = 0;
  for (int c : pivots) pm |= u64{1} << c;
  std::vector<FreeCell> cells;
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = pivots[i] + 1; j < m; ++j)
      if (!((pm >> j) & 1u)) cells.push_back({static_cast<int>(i), j});
  return cells;
}

}  // namespace

void enumerate_subspaces(int m, int t,
                         const std::function<bool(const Flat&)>& cb) {
  if (m < 0 || m > kMaxDim || t < 0 || t > m)
    throw ParamError("enumerate_subspaces: bad dimensions");
  bool stop = false;
  for_each_pivot_set(m, t, [&](const std::vector<int>& pivots) {
    if (stop) return;
    auto cells = free_cells(pivots, m);
    u64 total = u64{1} << cells.size();
    Flat f;
    f.m = m;
    f.basis = BinMatrix(t, m);
    f.rep = BitVector(0, m);
    for (u64 v = 0; v < total && !stop; ++v) {
      for (int i = 0; i < t; ++i)
        f.basis.row_bits[static_cast<size_t>(i)] = u64{1} << pivots[static_cast<size_t>(i)];
      for (size_t c = 0; c < cells.size(); ++c)
        if ((v >> c) & 1u)
          f.basis.row_bits[static_cast<size_t>(cells[c].row)] |= u64{1} << cells[c].col;
      if (!cb(f)) stop = true;
    }
  });
}

void enumerate_flats(int m, int t, const std::function<bool(const Flat&)>& cb) {
  enumerate_subspaces(m, t, [&](const Flat& sub) {
    u64 pm = 0;
    for (int r = 0; r < sub.basis.rows(); ++r) {
      u64 w = sub.basis.row_bits[static_cast<size_t>(r)];
      pm |= w & (~w + 1);
    }
    // spread rep values over the non-pivot columns, ascending packed order
    std::vector<int> nonpivot;
    for (int c = 0; c < m; ++c)
      if (!((pm >> c) & 1u)) nonpivot.push_back(c);
    Flat f = sub;
    for (u64 v = 0; v < (u64{1} << nonpivot.size()); ++v) {
      u64 rep = 0;
      for (size_t i = 0; i < nonpivot.size(); ++i)
        if ((v >> i) & 1u) rep |= u64{1} << nonpivot[i];
      f.rep = BitVector(rep, m);
      if (!cb(f)) return false;
    }
    return true;
  });
}

std::vector<Flat> all_subspaces(int m, int t, u64 budget) {
  u128 n = gaussian_coefficient(m, t);
  if (n > budget)
    throw BudgetError("all_subspaces", static_cast<u64>(n > ~u64{0} ? ~u64{0} : n), budget);
  std::vector<Flat> out;
  out.reserve(static_cast<size_t>(n));
  enumerate_subspaces(m, t, [&](const Flat& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<Flat> all_flats(int m, int t, u64 budget) {
  u128 nsub = gaussian_coefficient(m, t);
  if (nsub > budget) throw BudgetError("all_flats", ~u64{0}, budget);
  u128 n = nsub << (m - t);  // nsub <= 2^64, m - t <= 63: no wrap
  if (n > budget)
    throw BudgetError("all_flats", static_cast<u64>(n > ~u64{0} ? ~u64{0} : n), budget);
  std::vector<Flat> out;
  out.reserve(static_cast<size_t>(n));
  enumerate_flats(m, t, [&](const Flat& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

u128 full_rank_count(int r, int s) {
  if (s < 0 || r < 0 || s > r) throw ParamError("full_rank_count: bad shape");
  u128 n = 1;
  for (int i = 0; i < s; ++i)
    n = checked_mul(n, (u128{1} << r) - (u128{1} << i));
  return n;
}

void enumerate_full_rank(int r, int s,
                         const std::function<bool(const BinMatrix&)>& cb) {
  if (s < 1 || s > r || r > kMaxDim)
    throw ParamError("enumerate_full_rank: bad shape");
  std::vector<u64> col(static_cast<size_t>(s), 0);
  BinMatrix span_basis(0, r);
  BinMatrix mat(r, s);
  bool stop = false;
  std::function<void(int)> rec = [&](int j) {
    if (stop) return;
    if (j == s) {
      for (int i = 0; i < r; ++i) {
        u64 w = 0;
        for (int c = 0; c < s; ++c)
          w |= ((col[static_cast<size_t>(c)] >> i) & 1u) << c;
        mat.row_bits[static_cast<size_t>(i)] = w;
      }
      if (!cb(mat)) stop = true;
      return;
    }
    RrefResult rr = rank_rref(span_basis);
    for (u64 v = 1; v < (u64{1} << r) && !stop; ++v) {
      if (in_rowspace(BitVector(v, r), rr)) continue;
      col[static_cast<size_t>(j)] = v;
      span_basis.push_row_bits(v);
      rec(j + 1);
      span_basis.row_bits.pop_back();
    }
  };
  rec(0);
}

std::vector<BinMatrix> all_full_rank(int r, int s, u64 budget) {
  u128 n = full_rank_count(r, s);
  if (n > budget)
    throw BudgetError("all_full_rank",
                      static_cast<u64>(n > ~u64{0} ? ~u64{0} : n), budget);
  std::vector<BinMatrix> out;
  out.reserve(static_cast<size_t>(n));
  enumerate_full_rank(r, s, [&](const BinMatrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

BinMatrix random_full_rank(int k, int n, SplitMix& rng) {
  if (k < 1 || n < k || n > kMaxDim) throw ParamError("random_full_rank: bad shape");
  BinMatrix m(0, n);
  u64 mask = (n == kMaxDim) ? ~u64{0} >> 1 : (u64{1} << n) - 1;
  while (m.rows() < k) {
    u64 cand = rng.next() & mask;
    m.push_row_bits(cand);
    if (rank_of(m) < m.rows()) m.row_bits.pop_back();
  }
  return m;
}

BinMatrix random_invertible(int m, u64 seed) {
  if (m < 1 || m > kMaxDim) throw ParamError("random_invertible: bad dimension");
  SplitMix rng(seed);
  return random_full_rank(m, m, rng);
}

}  // namespace genset
