#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genset/bits.hpp"
#include "genset/bounds.hpp"
#include "genset/budget.hpp"
#include "genset/code.hpp"
#include "genset/matrix.hpp"
#include "genset/vecset.hpp"

namespace genset {

// Result of a constructor or search. Vector-set producers fill `set`, the
// parity-check builder fills `matrix`; `size` counts members or rows.
// `optimal` is true only when every smaller size was exhaustively refuted.
// `nodes_explored` counts greedy rounds for the greedy builders, verified
// trials for the randomized search, and visited branch nodes for the exact
// search. `seed` is present only on randomized paths. Every producer runs
// the matching verifier on its output before returning.
struct SearchOutcome {
  std::optional<VectorSet> set;
  std::optional<BinMatrix> matrix;
  int size = 0;
  bool optimal = false;
  u64 nodes_explored = 0;
  std::optional<u64> seed;
};

// A covering problem over candidate vectors. `vertices` lists candidate
// tokens in canonical order; edges stream through `for_each_edge` as opaque
// tokens and are never stored with their incidence lists; `incident` tests
// one (vertex, edge) pair. `edge_degree_min` and `vertex_degree_max` record
// the exact uniform degrees of the instance kind; the reference greedy
// recomputes both by scan and rejects a mismatch.
struct CoverInstance {
  std::string kind;
  std::vector<u64> vertices;
  u64 edge_count = 0;
  std::function<void(const std::function<void(u64)>&)> for_each_edge;
  std::function<bool(u64, u64)> incident;
  u64 edge_degree_min = 0;
  u64 vertex_degree_max = 0;
};

// Covering instance whose edges are the (direction, nonzero class) pairs a
// good set must hit: directions are the s-dimensional rowspaces in subspace
// enumeration order and the edge token is direction_index * 2^s + class.
// A vertex covers an edge when its signature against the direction rows
// equals the class.
CoverInstance good_cover_instance(int r, int s, u64 budget = default_budget());

// Covering instance whose edges are the (direction, class basis) pairs a
// generic set must break: the edge token is direction_index * basis_count
// + basis_index with bases enumerated as ascending independent class
// tuples. A vertex covers an edge when its signature lands in the basis.
CoverInstance generic_cover_instance(int r, int s, u64 budget = default_budget());

// Plain greedy cover on an instance: per round picks the vertex covering
// the most uncovered edges, ties to the lexicographically least vertex
// token, until no edge is uncovered. Returns picks in order. Maintains
// per-vertex counters incrementally; work is charged as two full
// edge-vertex incidence passes plus one edge or vertex scan per round.
std::vector<u64> reference_cover_greedy(const CoverInstance& inst,
                                        u64 budget = default_budget());

// Greedy good-set construction: repeatedly picks the vector covering the
// most still-uncovered (direction, class) demands, ties to the
// lexicographically least vector. The result passes the flat-cover checker
// and never exceeds the ceiling of 2^s (s (r-s) ln2 + 2 ln2 + 1).
SearchOutcome greedy_good_set(int r, int s, u64 budget = default_budget());

// Greedy generic-set construction over the coset-family demands; the result
// passes the coset-method checker and never exceeds the ceiling of
// 2^s (r ln2 - ln s).
SearchOutcome greedy_generic_set(int r, int s, u64 budget = default_budget());

// Greedily unions s-dimensional subspaces until every (r-s)-dimensional
// subspace meets a chosen one trivially; ties go to the first subspace in
// enumeration order. Needs 1 <= s < r. The chosen-subspace count stays
// strictly below 4 (s (r-s) ln2 + 1); the member set is the union of the
// chosen subspaces' nonzero vectors in ascending packed order and passes
// the flat-cover checker. Every subspace is verified to admit exactly
// 2^(s(r-s)) trivially-intersecting partners. nodes_explored counts chosen
// subspaces, not members.
SearchOutcome greedy_subspace_union(int r, int s, u64 budget = default_budget());

// Samples uniform N-subsets of the nonzero vectors with N from the
// threshold scan of the bounds module, drawing trial t from the stream
// derived from (seed, t), and returns the first sample the verifier
// accepts with members ascending. When N covers the whole space the full
// nonzero set is returned directly. Exhausting max_trials raises a budget
// error naming the trial cap.
SearchOutcome randomized_search(int r, int s, SetKind kind, u64 seed,
                                u64 max_trials = 64,
                                u64 budget = default_budget());

// Exact minimum-size search by branch and bound over the covering demands:
// branches on the uncovered edge with the fewest remaining coverers,
// orders coverers by descending marginal coverage then lexicographically,
// and prunes with the uncovered/max-marginal ratio and the spanning-rank
// deficit. Only tiny parameters are accepted (r <= 5 for generic; r <= 5,
// or r = 6 with s in {1,5,6}, for good). Exceeding node_budget returns the
// best cover found with optimal = false instead of raising.
SearchOutcome exact_minimum(int r, int s, SetKind kind,
                            u64 node_budget = 50'000'000);

// Greedy stopping-distance parity-check builder: picks dual codewords
// covering the most coordinate sets K, 1 <= |K| <= d-1, still lacking a
// row of weight one on K (ties to the lexicographically least dual word),
// then completes to rank n-k with the first rank-raising dual words in
// enumeration order. The output has rank n-k, stopping distance exactly d,
// and for d >= 2 at most 2^(d-1)/(d-1) (1 + ln sum_i binom(n,i)) + n-k-d+1
// rows. Initial cover degrees are cross-checked against the closed forms
// |K| 2^(n-k-|K|) per edge and wt(u) sum_i binom(n-wt(u), i) per dual word.
SearchOutcome greedy_parity_check(const LinearCode& code,
                                  u64 budget = default_budget());

}  // namespace genset
