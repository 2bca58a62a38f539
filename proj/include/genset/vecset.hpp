// Ordered sets of distinct nonzero vectors of F_2^r. The candidate sets fed
// to the verifiers and produced by the constructors. Order is meaningful:
// image rows, certificates and greedy traces all refer to member indices.

#pragma once

#include <algorithm>
#include <vector>

#include "genset/matrix.hpp"

namespace genset {

struct VectorSet {
  int ambient = 0;
  std::vector<BitVector> members;

  VectorSet() = default;
  VectorSet(int ambient, std::vector<BitVector> members)
      : ambient(ambient), members(std::move(members)) {
    if (ambient < 1 || ambient > kMaxDim)
      throw ParamError("VectorSet: bad ambient dimension");
    for (const auto& v : this->members) {
      if (v.dim != ambient) throw ParamError("VectorSet: dimension mismatch");
      if (v.is_zero()) throw ParamError("VectorSet: zero vector not allowed");
    }
    std::vector<u64> sorted;
    sorted.reserve(this->members.size());
    for (const auto& v : this->members) sorted.push_back(v.bits);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParamError("VectorSet: duplicate member");
  }

  int size() const { return static_cast<int>(members.size()); }

  bool contains_bits(u64 bits) const {
    for (const auto& v : members)
      if (v.bits == bits) return true;
    return false;
  }

  // |A| x r matrix whose row i is member i.
  BinMatrix as_matrix() const {
    BinMatrix m(0, ambient);
    for (const auto& v : members) m.push_row(v);
    return m;
  }

  friend bool operator==(const VectorSet& a, const VectorSet& b) {
    return a.ambient == b.ambient && a.members == b.members;
  }
};

inline VectorSet vectorset_from_masks(int ambient, const std::vector<u64>& masks) {
  std::vector<BitVector> mem;
  mem.reserve(masks.size());
  for (u64 b : masks) mem.emplace_back(b, ambient);
  return VectorSet(ambient, std::move(mem));
}

}  // namespace genset
