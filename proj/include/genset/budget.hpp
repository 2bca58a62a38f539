// Work budgets for the enumerating operations. Each operation documents its
// unit (tuples, flats, matrices, subspaces, search nodes); when the projected
// count exceeds the cap the call refuses with BudgetError instead of running
// for hours. The default cap is 2^31 units, overridable with the
// GENSET_BUDGET environment variable or per call.

#pragma once

#include <cstdlib>
#include <string>

#include "genset/bits.hpp"

namespace genset {

inline u64 default_budget() {
  static const u64 cached = [] {
    const char* env = std::getenv("GENSET_BUDGET");
    if (!env || !*env) return u64{1} << 31;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw ParamError("GENSET_BUDGET: expected a positive integer");
    return static_cast<u64>(v);
  }();
  return cached;
}

// projected u128 work against a u64 cap, clamping the reported need
inline void charge_budget(const char* what, unsigned __int128 needed, u64 cap) {
  if (needed > cap)
    throw BudgetError(what,
                      needed > ~u64{0} ? ~u64{0} : static_cast<u64>(needed),
                      cap);
}

}  // namespace genset
