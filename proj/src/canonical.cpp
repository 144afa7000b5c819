#include "encov/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "encov/error.hpp"
#include "encov/graph6.hpp"

namespace encov {

namespace {

// Iterated refinement of the degree partition. Colors are ranks of
// (color, sorted neighbor colors) keys, so they depend only on structure.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = 0;
  while (true) {
    std::vector<std::vector<int>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      keys[v].push_back(color[v]);
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      keys[v].insert(keys[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
                                  distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    color_ = refined_colors(g);
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return color_[a] < color_[b]; });
    position_color_.resize(n_);
    for (int p = 0; p < n_; ++p) position_color_[p] = color_[order[p]];

    twin_.assign(n_, std::vector<bool>(n_, false));
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (color_[u] != color_[v]) continue;
        std::uint64_t nu = g.neighbor_mask(u) & ~(std::uint64_t{1} << v);
        std::uint64_t nv = g.neighbor_mask(v) & ~(std::uint64_t{1} << u);
        twin_[u][v] = twin_[v][u] = (nu == nv);
      }
    }
    at_.assign(n_, -1);
    used_.assign(n_, false);
    best_columns_.assign(n_, 0);
    columns_.assign(n_, 0);
  }

  std::vector<Vertex> run() {
    descend(0);
    std::vector<Vertex> perm(n_);
    for (int p = 0; p < n_; ++p) perm[best_at_[p]] = p;
    return perm;
  }

 private:
  // Lexicographic comparison of the first `len` columns against the best.
  int compare_prefix(int len) const {
    for (int i = 0; i < len; ++i) {
      if (columns_[i] != best_columns_[i]) return columns_[i] < best_columns_[i] ? -1 : 1;
    }
    return 0;
  }

  void descend(int p) {
    if (p == n_) {
      if (best_at_.empty() || compare_prefix(n_) < 0) {
        best_at_ = at_;
        best_columns_ = columns_;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != position_color_[p]) continue;
      bool shadowed = false;
      for (Vertex u = 0; u < v; ++u) {
        if (!used_[u] && twin_[u][v]) {
          shadowed = true;
          break;
        }
      }
      if (shadowed) continue;

      std::uint64_t column = 0;
      for (int i = 0; i < p; ++i) {
        column = (column << 1) | (g_.adjacent(at_[i], v) ? 1U : 0U);
      }
      columns_[p] = column;
      if (!best_at_.empty() && compare_prefix(p + 1) > 0) continue;
      at_[p] = v;
      used_[v] = true;
      descend(p + 1);
      used_[v] = false;
      at_[p] = -1;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> position_color_;
  std::vector<std::vector<bool>> twin_;
  std::vector<Vertex> at_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> columns_;
  std::vector<Vertex> best_at_;
  std::vector<std::uint64_t> best_columns_;
};

// Packed canonical bit string for n <= 11 (55 bits), used for ordering.
std::uint64_t pack_bits(const Graph& g) {
  std::uint64_t bits = 0;
  for (Vertex column = 1; column < g.order(); ++column) {
    for (Vertex row = 0; row < column; ++row) bits = (bits << 1) | (g.adjacent(row, column) ? 1U : 0U);
  }
  return bits;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw Error(Errc::too_large, "canonical form limited to " +
                                     std::to_string(kCanonicalMaxOrder) + " vertices");
  }
  CanonicalForm out;
  out.perm = CanonicalSearch(g).run();
  out.graph = relabel(g, out.perm);
  return out;
}

std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g).graph); }

std::string graph_id(const Graph& g) {
  return g.order() <= kCanonicalMaxOrder ? canonical_graph6(g) : emit_graph6(g);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

std::vector<Graph> enumerate_nonisomorphic(int n, bool connected_only) {
  if (n < 0) throw Error(Errc::bad_parameter, "negative vertex count");
  if (n > kEnumerateMaxOrder) {
    throw Error(Errc::too_large, "built-in enumeration limited to " +
                                     std::to_string(kEnumerateMaxOrder) +
                                     " vertices; supply larger graphs as graph6");
  }
  std::vector<Graph> level{empty_graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::map<std::uint64_t, Graph> next;
    for (const Graph& base : level) {
      EdgeSet base_edges = base.edges();
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (k - 1)); ++subset) {
        EdgeSet edges = base_edges;
        for (Vertex v = 0; v < k - 1; ++v) {
          if ((subset >> v) & 1U) edges.push_back({v, k - 1});
        }
        Graph canon = canonical_form(build_graph(k, edges)).graph;
        next.try_emplace(pack_bits(canon), std::move(canon));
      }
    }
    level.clear();
    for (auto& [bits, graph] : next) level.push_back(std::move(graph));
  }
  if (connected_only) {
    std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  }
  return level;
}

}  // namespace encov
