#pragma once

#include <utility>
#include <vector>

#include "encov/graph.hpp"

namespace encov {

/// Biconnected-component decomposition. Bridges appear as two-vertex blocks
/// and isolated vertices as one-vertex blocks, so every vertex lies in at
/// least one block and every edge in exactly one.
struct BlockDecomposition {
  /// Each block's vertex set; blocks sorted lexicographically.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// Pairs (i, j), i < j, of blocks sharing a vertex.
  std::vector<std::pair<int, int>> block_adjacency;

  /// Indices of the blocks containing v, ascending.
  std::vector<int> blocks_of(Vertex v) const;
};

BlockDecomposition blocks(const Graph& g);

/// Edges of g with both endpoints in the block.
std::size_t block_edge_count(const Graph& g, const VertexSet& block);

/// A block is a cycle when it has at least three vertices and exactly as
/// many edges as vertices (a 2-connected graph with m = n is a cycle).
bool block_is_cycle(const Graph& g, const VertexSet& block);
bool block_is_clique(const Graph& g, const VertexSet& block);

}  // namespace encov
