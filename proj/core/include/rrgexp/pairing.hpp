#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rrgexp/errors.hpp"

namespace rrgexp {

/// A pairing-model outcome: a perfect matching over half-edges v*delta + j
/// merged into a delta-regular multigraph. Self-loops and parallel edges are
/// preserved; each vertex's adjacency list has exactly delta entries (one per
/// incident half-edge, so a self-loop contributes two copies of the vertex).
struct MultiGraph {
  int n = 0;
  int delta = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<int, int>> matching;  // half-edge id pairs
  std::vector<std::vector<int>> adjacency;

  static MultiGraph from_edges(int n, int delta,
                               const std::vector<std::pair<int, int>>& edges);
};

struct ConfigurationVector {
  int k = 0;                  // |S|
  long long c = 0;            // cut size, with multiplicity
  std::vector<long long> s;      // cross-degree histogram of S, indices 0..delta
  std::vector<long long> s_bar;  // histogram of the complement
};

struct ScoreOrder {
  std::vector<int> pi;  // permutation of 0..n-1

  static ScoreOrder identity(int n);
  static ScoreOrder random(int n, std::uint64_t seed);
  long long score(const std::vector<int>& subset) const;
};

struct ExpansionResult {
  double iota = 0.0;
  std::vector<int> witness;  // sorted
};

MultiGraph sample_pairing(int n, int delta, std::uint64_t seed);

ConfigurationVector configuration_vector(const MultiGraph& g,
                                         const std::vector<int>& subset);

double set_expansion(const MultiGraph& g, const std::vector<int>& subset);

/// Exhaustive minimum over all nonempty subsets with |S| <= n/2 (Gray-code
/// enumeration with incremental cut updates); n <= 24.
ExpansionResult exact_expansion(const MultiGraph& g);

/// Single-vertex local moves plus score-reducing equal-cut swaps, driven by
/// the lexicographic objective (iota, |S|, score). The result upper-bounds
/// the true expansion.
ExpansionResult local_search_expansion(const MultiGraph& g,
                                       const ScoreOrder& order,
                                       std::vector<int> start);

/// Membership in the locally-unimprovable profile set: no cross-degree above
/// delta/2 on either side, and no complement vertex at exactly delta/2 when
/// |S| < n/2.
bool u_local_membership(const ConfigurationVector& cv, int n, int delta);

/// Exact probability that a fixed subset of size cv.k realizes the given
/// cross-degree histograms under the pairing model. Returns 0 for
/// parity-infeasible vectors. Evaluated in log space.
double configuration_probability(int n, int delta,
                                 const ConfigurationVector& cv);

/// Probability that a uniformly random interleaving places all p marked
/// elements before all q others: 1 / C(p+q, q).
double ordering_probability(int p, int q);

/// min(1, n^{2 delta} / C(s_{d/2} + sbar_{d/2}, s_{d/2})), log space.
double lex_bound(int n, int delta, const ConfigurationVector& cv);

/// Edge-list text format: header "n delta seed", then one "u v" line per
/// configuration edge (self-loops as "u u", parallel edges repeated).
void write_edge_list(const MultiGraph& g, std::ostream& os);
MultiGraph read_edge_list(std::istream& is);

}  // namespace rrgexp
