// Minimal unsigned big integer for exact threshold verification. Products of
// a few thousand 64-bit factors and Gaussian binomials at any dimension up to
// kMaxDim need a few hundred limbs at most, so only the operations the bounds
// module uses are provided: add, multiply/divide by a 64-bit word, shift, and
// comparison. Limbs are little-endian with no trailing zero limbs (empty
// vector means zero).

#pragma once

#include <string>
#include <vector>

#include "genset/bits.hpp"

namespace genset {

struct BigUint {
  std::vector<u64> w;

  BigUint() = default;
  explicit BigUint(u64 v) {
    if (v) w.push_back(v);
  }

  bool is_zero() const { return w.empty(); }

  void trim() {
    while (!w.empty() && w.back() == 0) w.pop_back();
  }

  // -1, 0, +1 as a < b, a == b, a > b
  static int cmp(const BigUint& a, const BigUint& b) {
    if (a.w.size() != b.w.size()) return a.w.size() < b.w.size() ? -1 : 1;
    for (std::size_t i = a.w.size(); i-- > 0;) {
      if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator<(const BigUint& a, const BigUint& b) { return cmp(a, b) < 0; }
  friend bool operator==(const BigUint& a, const BigUint& b) { return cmp(a, b) == 0; }

  BigUint& operator+=(const BigUint& o) {
    if (o.w.size() > w.size()) w.resize(o.w.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      carry += w[i];
      if (i < o.w.size()) carry += o.w[i];
      w[i] = static_cast<u64>(carry);
      carry >>= 64;
    }
    if (carry) w.push_back(static_cast<u64>(carry));
    return *this;
  }

  BigUint& mul_u64(u64 m) {
    if (m == 0) {
      w.clear();
      return *this;
    }
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      carry += static_cast<unsigned __int128>(w[i]) * m;
      w[i] = static_cast<u64>(carry);
      carry >>= 64;
    }
    if (carry) w.push_back(static_cast<u64>(carry));
    return *this;
  }

  // in-place quotient, returns the remainder; d must be nonzero
  u64 div_u64(u64 d) {
    if (d == 0) throw ParamError("BigUint::div_u64: division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
      rem = (rem << 64) | w[i];
      w[i] = static_cast<u64>(rem / d);
      rem %= d;
    }
    trim();
    return static_cast<u64>(rem);
  }

  BigUint& shl_bits(unsigned n) {
    if (is_zero() || n == 0) return *this;
    const unsigned limbs = n / 64, bits = n % 64;
    w.insert(w.begin(), limbs, 0);
    if (bits) {
      u64 carry = 0;
      for (std::size_t i = limbs; i < w.size(); ++i) {
        u64 nxt = w[i] >> (64 - bits);
        w[i] = (w[i] << bits) | carry;
        carry = nxt;
      }
      if (carry) w.push_back(carry);
    }
    return *this;
  }

  std::size_t bit_length() const {
    if (w.empty()) return 0;
    std::size_t b = 64 * (w.size() - 1);
    u64 top = w.back();
    while (top) {
      ++b;
      top >>= 1;
    }
    return b;
  }

  // lowercase hex without leading zeros; "0" for zero
  std::string to_hex() const {
    if (w.empty()) return "0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::size_t i = w.size(); i-- > 0;) {
      for (int nib = 15; nib >= 0; --nib) {
        int v = static_cast<int>((w[i] >> (4 * nib)) & 0xf);
        if (s.empty() && v == 0) continue;
        s += digits[v];
      }
    }
    return s.empty() ? "0" : s;
  }
};

// Gaussian binomial coefficient over GF(2) at full precision via the
// additive recurrence g(n,m) = g(n-1,m-1) + 2^m * g(n-1,m). Needs O(n*m)
// limb-vector operations; n is capped at kMaxDim like everything else.
inline BigUint gauss_big(int n, int m) {
  if (n < 0 || m < 0 || m > n) throw ParamError("gauss_big: need 0 <= m <= n");
  if (n > kMaxDim) throw ParamError("gauss_big: dimension exceeds kMaxDim");
  std::vector<BigUint> row(static_cast<std::size_t>(m) + 1);
  row[0] = BigUint(1);
  for (int ni = 1; ni <= n; ++ni) {
    int top = ni < m ? ni : m;
    for (int mi = top; mi >= 1; --mi) {
      BigUint t = row[mi];
      t.shl_bits(static_cast<unsigned>(mi));
      t += row[mi - 1];
      row[mi] = std::move(t);
    }
  }
  return row[m];
}

}  // namespace genset
