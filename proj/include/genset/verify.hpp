// Decision procedures for the set properties: (r,s)-sets ("good" sets),
// generic (r,s)-sets, s-wise intersecting codes, covering arrays, and
// subspace blocking sets. Every failing verdict carries a certificate that
// re-fails when replayed, and every property has at least two independent
// methods that must agree (cross-validation is the point, so the caller
// always picks the method explicitly).
//
// Enumeration orders are fixed: tuples ascend in packed value, flats and
// subspaces follow the canonical order in flats.hpp, matrices follow
// enumerate_full_rank. A certificate is always the first failure in that
// order.

#pragma once

#include <optional>
#include <vector>

#include "genset/budget.hpp"
#include "genset/flats.hpp"
#include "genset/vecset.hpp"

namespace genset {

enum class CertKind {
  missed_flat,      // good set, flats method
  bad_matrix,       // generic set, matrices / hyperplanes method
  bad_coset_family, // generic set, cosets method
  bad_tuple,        // good set definition / intersecting code
  missed_subspace,  // blocking set
  missing_pattern,  // covering array / column property
};

struct Certificate {
  CertKind kind;
  std::optional<Flat> flat;       // missed_flat, missed_subspace
  std::optional<BinMatrix> mat;   // offending M, coset check matrix, or the
                                  // invertible N of a column-property failure
  std::vector<BitVector> vectors; // tuple / coset classes / missing pattern
  std::vector<int> indices;       // row or column subset, 0-based
};

struct VerifyResult {
  bool pass = false;
  std::optional<Certificate> cert;
  explicit operator bool() const { return pass; }
};

enum class GoodMethod { definition, flats };
enum class GenericMethod { matrices, cosets, hyperplanes };

// A contains a common solution of v_j . x = 1 for every independent s-tuple
// {v_1..v_s}; equivalently A meets every (r-s)-flat that is not a subspace.
// definition enumerates unordered independent tuples, flats enumerates
// cosets. Units charged: tuples, resp. flats.
VerifyResult is_good_set(const VectorSet& a, int s, GoodMethod method,
                         u64 budget = default_budget());

// Three characterizations of generic (r,s)-sets, all equivalent:
//   matrices:    every full-rank r x s M has some a in A with wt(aM) = 1
//   cosets:      for every s-dim direction W (check matrix H in RREF), the
//                syndrome classes A misses span less than all of F_2^s
//   hyperplanes: the image {aM} always contains a set {x : u.x = 1}
// Units charged: matrices (matrices/hyperplanes), subspaces x classes
// (cosets). The class/image tables cap s at 20 for cosets and hyperplanes.
VerifyResult is_generic_set(const VectorSet& a, int s, GenericMethod method,
                            u64 budget = default_budget());

// Every s linearly independent codewords of the row space of gen share a
// coordinate where all are nonzero. gen must have full row rank. s = 1
// degenerates to "nonzero words have nonempty support" (always true).
VerifyResult is_swise_intersecting(const BinMatrix& gen, int s,
                                   u64 budget = default_budget());

// Equivalence between the good-set property of A and the s-wise
// intersection of the code whose generator columns are A's members. A set
// that fails to span F_2^r fails both sides. agree = false signals an
// implementation fault, never a property of the input.
struct RoundtripResult {
  bool agree = false;
  VerifyResult good;
  VerifyResult intersecting;
};
RoundtripResult good_intersecting_roundtrip(const VectorSet& a, int s,
                                            u64 budget = default_budget());

// Every t-subset of rows of m exhibits all 2^t column patterns. The
// certificate lists the row subset and the absent pattern (bit j of the
// pattern = value in the j-th listed row).
VerifyResult is_covering_array(const BinMatrix& m, int t);

// A intersects every (k-s)-dimensional subspace (1 <= s < k).
VerifyResult is_subspace_blocking(const VectorSet& a, int s);

// For `trials` seeded invertible N: every s columns of A*N contain an
// (s-1)-column subset exhibiting all 2^{s-1} patterns. s = 1 is vacuous.
// Failure certificate: N plus the s column indices of the first subset
// (ascending packed-mask order) no (s-1)-subset of which covers.
VerifyResult generic_column_property(const VectorSet& a, int s, int trials,
                                     u64 seed);

// True iff the certificate still witnesses a failure of the property it was
// issued for, against these inputs. Used by tests and by the CLI to
// double-check before printing.
bool replay_certificate(const Certificate& c, const VectorSet& a, int s);
bool replay_certificate(const Certificate& c, const BinMatrix& m, int s_or_t);

}  // namespace genset
