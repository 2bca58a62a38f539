// Packed GF(2) vectors.
//
// Coordinate convention used everywhere in this project: coordinates are
// 1-based in text and reports, and coordinate i lives in bit (i-1) of the
// packed word. So the text "0110" has coordinate 1 = '0' and packs to 0b0110
// read with coordinate 1 least significant, i.e. the value 6.
//
// "Lexicographic" order on vectors always means text order: compare
// coordinate 1 first, '0' before '1'. This is *not* integer order on the
// packed word (the packed LSB is the most significant comparison digit).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <bit>

namespace genset {

using u64 = std::uint64_t;

inline constexpr int kMaxDim = 63;

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, u64 needed, u64 cap)
      : std::runtime_error(what + " (needs " + std::to_string(needed) +
                           " items, budget " + std::to_string(cap) + ")"),
        needed(needed),
        cap(cap) {}
  u64 needed;
  u64 cap;
};

struct BitVector {
  u64 bits = 0;
  int dim = 0;

  BitVector() = default;
  BitVector(u64 bits, int dim) : bits(bits), dim(dim) {
    if (dim < 0 || dim > kMaxDim) throw ParamError("BitVector: bad dimension");
    if (dim < kMaxDim && (bits >> dim) != 0)
      throw ParamError("BitVector: bits outside dimension");
  }

  bool get(int i) const { return (bits >> i) & 1u; }  // 0-based accessor
  void set(int i, bool v) {
    bits = v ? (bits | (u64{1} << i)) : (bits & ~(u64{1} << i));
  }
  int weight() const { return std::popcount(bits); }
  bool is_zero() const { return bits == 0; }

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.dim == b.dim && a.bits == b.bits;
  }
  friend bool operator!=(const BitVector& a, const BitVector& b) {
    return !(a == b);
  }
};

// Text order: the first differing coordinate decides, 0 < 1. With the packing
// above the first differing coordinate is the lowest set bit of the XOR.
inline bool lex_less(u64 a, u64 b) {
  u64 d = a ^ b;
  if (d == 0) return false;
  return (a >> std::countr_zero(d) & 1u) == 0;
}

inline bool lex_less(const BitVector& a, const BitVector& b) {
  if (a.dim != b.dim) throw ParamError("lex_less: dimension mismatch");
  return lex_less(a.bits, b.bits);
}

inline std::string to_text(const BitVector& v) {
  std::string s(static_cast<size_t>(v.dim), '0');
  for (int i = 0; i < v.dim; ++i)
    if (v.get(i)) s[static_cast<size_t>(i)] = '1';
  return s;
}

inline BitVector bitvector_from_text(std::string_view s) {
  if (s.empty() || s.size() > static_cast<size_t>(kMaxDim))
    throw DataError("vector text: bad length");
  BitVector v(0, static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(static_cast<int>(i), true);
    else if (s[i] != '0')
      throw DataError("vector text: expected 0/1, got '" +
                      std::string(1, s[i]) + "'");
  }
  return v;
}

inline int parity(u64 x) { return std::popcount(x) & 1; }

// Dot product over GF(2).
inline int dot(const BitVector& a, const BitVector& b) {
  return parity(a.bits & b.bits);
}

}  // namespace genset
