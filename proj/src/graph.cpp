#include "encov/graph.hpp"

#include <algorithm>
#include <string>

#include "encov/error.hpp"

namespace encov {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw Error(Errc::index_out_of_range,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
  }
}

}  // namespace

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(Errc::bad_parameter, "negative vertex count");
  Graph g;
  g.n_ = n;
  const bool dense = n <= Graph::kDenseMaxOrder;
  g.words_ = dense ? (static_cast<std::size_t>(n) + 63) / 64 : 0;
  g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  g.nbrs_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(Errc::index_out_of_range, "edge (" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + ") outside 0.." +
                                                std::to_string(n - 1));
    }
    if (e.u == e.v) throw Error(Errc::self_loop, "self-loop at " + std::to_string(e.u));
    if (dense) {
      if (g.adjacent(e.u, e.v)) continue;
      g.bits_[g.row_offset(e.u) + static_cast<std::size_t>(e.v) / 64] |= std::uint64_t{1} << (e.v % 64);
      g.bits_[g.row_offset(e.v) + static_cast<std::size_t>(e.u) / 64] |= std::uint64_t{1} << (e.u % 64);
    }
    g.nbrs_[e.u].push_back(e.v);
    g.nbrs_[e.v].push_back(e.u);
  }
  std::size_t ends = 0;
  for (auto& list : g.nbrs_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    ends += list.size();
  }
  g.m_ = ends / 2;
  return g;
}

Graph empty_graph(int n) { return build_graph(n, std::span<const Edge>{}); }

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : nbrs_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& list : nbrs_) d = std::max(d, static_cast<int>(list.size()));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (const auto& list : nbrs_) d = std::min(d, static_cast<int>(list.size()));
  return d;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    check_vertex(g, sorted[i]);
    index[sorted[i]] = static_cast<Vertex>(i);
  }
  EdgeSet edges;
  for (Vertex u : sorted) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && index[v] >= 0) edges.push_back({index[u], index[v]});
    }
  }
  return build_graph(static_cast<int>(sorted.size()), edges);
}

Graph induced_delete(const Graph& g, std::span<const Vertex> vs) {
  std::vector<bool> drop(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : vs) {
    check_vertex(g, v);
    drop[v] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph delete_closed_edge(const Graph& g, Edge e) {
  check_vertex(g, e.u);
  check_vertex(g, e.v);
  if (!g.adjacent(e.u, e.v)) {
    throw Error(Errc::not_an_edge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                       ") is not an edge");
  }
  const Vertex ends[] = {e.u, e.v};
  return induced_delete(g, ends);
}

Graph delete_edges(const Graph& g, std::span<const Edge> s) {
  EdgeSet removed;
  for (const Edge& e : s) {
    check_vertex(g, e.u);
    check_vertex(g, e.v);
    if (e.u == e.v || !g.adjacent(e.u, e.v)) {
      throw Error(Errc::not_an_edge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                         ") is not an edge");
    }
    removed.push_back(e.normalized());
  }
  std::sort(removed.begin(), removed.end());
  EdgeSet kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
  }
  return build_graph(g.order(), kept);
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  EdgeSet all = g.edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return build_graph(g.order(), all);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeSet edges = a.edges();
  const int offset = a.order();
  for (const Edge& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
  return build_graph(a.order() + b.order(), edges);
}

Graph join(const Graph& a, const Graph& b) {
  EdgeSet edges = a.edges();
  const int offset = a.order();
  for (const Edge& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
  for (Vertex u = 0; u < a.order(); ++u) {
    for (Vertex v = 0; v < b.order(); ++v) edges.push_back({u, v + offset});
  }
  return build_graph(a.order() + b.order(), edges);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const int nb = b.order();
  auto id = [nb](Vertex x, Vertex y) { return x * nb + y; };
  EdgeSet edges;
  for (Vertex x = 0; x < a.order(); ++x) {
    for (const Edge& e : b.edges()) edges.push_back({id(x, e.u), id(x, e.v)});
  }
  for (const Edge& e : a.edges()) {
    for (Vertex y = 0; y < nb; ++y) edges.push_back({id(e.u, y), id(e.v, y)});
  }
  return build_graph(a.order() * nb, edges);
}

Graph complement(const Graph& g) {
  EdgeSet edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return build_graph(g.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error(Errc::bad_parameter, "permutation length does not match vertex count");
  }
  EdgeSet edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return build_graph(g.order(), edges);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

}  // namespace encov
