#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace encov {

using Vertex = int;
/// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Same pair with the smaller endpoint first.
  Edge normalized() const { return u <= v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unordered vertex pairs; stored normalized and sorted.
using EdgeSet = std::vector<Edge>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: sorted neighbor lists for traversal and, up to
/// kDenseMaxOrder vertices, a packed bit matrix for O(1) adjacency tests.
/// Larger graphs answer adjacency by binary search. Both are built once in
/// build_graph() and never change, so a Graph can be shared freely between
/// threads.
class Graph {
 public:
  static constexpr int kDenseMaxOrder = 4096;

  Graph() = default;

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    if (bits_.empty()) return std::binary_search(nbrs_[u].begin(), nbrs_[u].end(), v);
    return (bits_[row_offset(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
  }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }

  /// Neighborhood as a bit mask; only valid for graphs with at most 64 vertices.
  std::uint64_t neighbor_mask(Vertex v) const { return bits_[row_offset(v)]; }

  /// All edges as (u < v) pairs in lexicographic order.
  EdgeSet edges() const;

  int max_degree() const;
  int min_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.nbrs_ == b.nbrs_;
  }

  friend Graph build_graph(int n, std::span<const Edge> edges);

 private:
  std::size_t row_offset(Vertex v) const { return static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> nbrs_;
};

/// Builds a graph from an edge list. Duplicate pairs (in either orientation)
/// collapse to one edge. Throws Error{index_out_of_range} or Error{self_loop}.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Edgeless graph on n vertices.
Graph empty_graph(int n);

/// Induced subgraph on V \ vs. Surviving vertices are relabeled 0..n-|vs|-1
/// in ascending order of their old labels.
Graph induced_delete(const Graph& g, std::span<const Vertex> vs);

/// Induced subgraph on the listed vertices (relabeled in ascending order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// G - [e]: drop both endpoints of e and everything incident to them.
Graph delete_closed_edge(const Graph& g, Edge e);

/// Same vertex set, edges E(g) \ s. Throws Error{not_an_edge}.
Graph delete_edges(const Graph& g, std::span<const Edge> s);

/// Same vertex set, E(g) plus the given pairs.
Graph add_edges(const Graph& g, std::span<const Edge> extra);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
/// Vertex (x, y) of a x b gets index x * b.order() + y.
Graph cartesian_product(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
/// relabeled[perm[v]] = v, i.e. perm maps old labels to new ones.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

VertexSet isolated_vertices(const Graph& g);

}  // namespace encov
