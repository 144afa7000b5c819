#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "encov/graph.hpp"

namespace encov {

/// Largest order for which canonical_form() is offered. The search is a
/// brute-force permutation walk, so this is a desk-scale limit.
inline constexpr int kCanonicalMaxOrder = 16;

struct CanonicalForm {
  /// perm[v] = position of v in the canonical labeling.
  std::vector<Vertex> perm;
  /// g relabeled by perm.
  Graph graph;
};

/// Canonical labeling: vertices are split into cells by iterated degree
/// refinement, cells are laid out in increasing refined-color order, and
/// within that constraint the labeling minimizing the upper-triangle
/// adjacency bit string (graph6 column order) is chosen. Twin vertices are
/// interchangeable, so only one of each is tried per position.
/// Throws Error{too_large} beyond kCanonicalMaxOrder.
CanonicalForm canonical_form(const Graph& g);

/// graph6 of the canonical relabeling; equal iff the graphs are isomorphic.
std::string canonical_graph6(const Graph& g);

/// Canonical graph6 when the order allows, otherwise the graph6 of g as given.
std::string graph_id(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

inline constexpr int kEnumerateMaxOrder = 8;

/// One representative per isomorphism class on n vertices, in ascending
/// order of canonical bit string. Graphs are generated by extending every
/// class on n-1 vertices with a new vertex in all possible ways and keeping
/// canonical forms. Throws Error{too_large} for n > kEnumerateMaxOrder.
std::vector<Graph> enumerate_nonisomorphic(int n, bool connected_only);

}  // namespace encov
