#pragma once

#include <cstddef>
#include <cstdint>

#include "encov/graph.hpp"

namespace encov {

/// Exact solvers work on 64-bit vertex masks.
inline constexpr int kExactMaxOrder = 64;

struct CoverCertificate {
  VertexSet cover;
  int size = 0;
};

struct MatchingCertificate {
  EdgeSet matching;
  int size = 0;
};

struct OddCycleCount {
  long long count = 0;
  /// False when the cactus shortcut produced the count.
  bool enumerated = false;
};

inline constexpr long long kDefaultCycleCap = 1'000'000;

/// Minimum vertex cover by branch and bound. Reductions: isolated vertices
/// are dropped; for the lowest-indexed degree-1 vertex its neighbor is
/// taken. Branching is on the lowest-indexed vertex of maximum degree
/// (take it, or take its whole neighborhood), pruned with a greedy matching
/// lower bound. Throws Error{too_large} past kExactMaxOrder.
CoverCertificate min_vertex_cover(const Graph& g);

/// Maximum matching by Edmonds' blossom algorithm.
MatchingCertificate max_matching(const Graph& g);

/// Maximum clique by branch and bound with a greedy coloring bound.
VertexSet max_clique(const Graph& g);
int clique_number(const Graph& g);

/// Number of elementary cycles of odd length. Graphs whose blocks are all
/// edges or cycles are counted from the blocks directly; otherwise every
/// cycle is enumerated once from its smallest vertex. Throws
/// Error{cap_exceeded} when more than `cap` cycles (of any parity) exist.
OddCycleCount odd_cycle_count(const Graph& g, long long cap = kDefaultCycleCap);

/// Same count without the block shortcut; always enumerates.
OddCycleCount enumerate_odd_cycles(const Graph& g, long long cap = kDefaultCycleCap);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);
bool is_matching(const Graph& g, const EdgeSet& matching);

}  // namespace encov
