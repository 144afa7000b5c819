#pragma once

#include <map>
#include <optional>
#include <vector>

#include "encov/blocks.hpp"
#include "encov/graph.hpp"

namespace encov {

/// Minimum cover X against the independent remainder Y.
struct VcRepresentation {
  VertexSet cover;        // X
  VertexSet independent;  // Y
};

/// X from min_vertex_cover() (deterministic), Y = V \ X.
VcRepresentation vc_representation(const Graph& g);

/// g plus every missing edge inside X. Throws Error{invalid_representation}
/// if X is not a minimum vertex cover of g or Y is not its complement.
Graph associated_split_graph(const Graph& g, const VcRepresentation& rep);

struct CliqueDecomposition {
  /// Pairwise disjoint vertex sets, each inducing a complete graph.
  std::vector<VertexSet> parts;
  /// Independent-side vertices chosen to cover the clique part, ascending.
  VertexSet anchors;
};

/// Disjoint complete subgraphs whose cover numbers add up to tau(g), for a
/// connected split graph with clique number equal to cover number. The
/// clique part K comes from split_partition(); anchors are a minimal set of
/// independent vertices whose neighborhoods cover K (greedy by coverage,
/// then redundant anchors dropped in ascending order); part i is the closed
/// neighborhood of anchor i minus earlier parts.
/// Throws Error{hypothesis_failed} when g is not a connected split graph
/// with omega == tau.
CliqueDecomposition split_clique_decomposition(const Graph& g);

struct BlockTree {
  BlockDecomposition decomposition;
  /// Node i is decomposition.blocks[i].
  std::vector<int> level;   // root has level 1
  std::vector<int> parent;  // -1 for the root
  int root = -1;
};

/// Breadth-first levelling of the block-adjacency relation. The root is the
/// block with the most cut vertices (lowest block index on ties, blocks
/// being in lexicographic order); each block keeps the first parent that
/// reaches it and links inside a level are dropped.
/// Throws Error{disconnected}.
BlockTree block_tree(const Graph& g);

struct QuasiPendentReduction {
  Vertex removed = -1;  // u
  Graph reduced;        // g - u
};

/// Lowest-indexed neighbor of a degree-1 vertex, and g with it deleted.
/// Throws Error{no_pendant}.
QuasiPendentReduction quasi_pendent_reduce(const Graph& g);

struct CutSetEnergyCheck {
  double energy_before = 0.0;
  double energy_after = 0.0;
  bool monotone = false;
  bool star_shaped = false;
  /// energy_before > energy_after + 1e-9; reported for star-shaped sets.
  bool strict = false;
};

/// Energies of g and g - s for a cut set s (nonempty edges of g whose
/// removal increases the component count). Throws Error{not_a_cut_set}.
CutSetEnergyCheck cut_set_energy_check(const Graph& g, const EdgeSet& s);

}  // namespace encov
