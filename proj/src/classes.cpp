#include "encov/classes.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "encov/blocks.hpp"
#include "encov/covers.hpp"
#include "encov/error.hpp"

namespace encov {

namespace {

constexpr std::array<std::string_view, kClassTagCount> kTagNames{
    "bipartite", "tree",         "forest", "cycle",     "path",
    "complete",  "star",         "complete_bipartite",  "block_graph",
    "cactus",    "cycle_clique", "split",  "threshold", "disjoint_cycles",
};

bool is_clique_set(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_partition(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<int> seen(g.order(), 0);
  for (Vertex v : a) {
    if (v < 0 || v >= g.order()) return false;
    ++seen[v];
  }
  for (Vertex v : b) {
    if (v < 0 || v >= g.order()) return false;
    ++seen[v];
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

VertexSet complement_of(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  }
  return out;
}

bool is_forest(const Graph& g) { return g.size() + components(g).size() == static_cast<std::size_t>(g.order()); }

bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && is_forest(g); }

bool is_cycle_graph(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && g.min_degree() == 2 && g.max_degree() == 2;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return n >= 1 && g.size() == n * (n - 1) / 2;
}

std::optional<Bipartition> star_split(const Graph& g) {
  if (g.order() < 2 || !is_tree(g)) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) {
      VertexSet leaves = complement_of(g, {v});
      return Bipartition{{v}, leaves};
    }
  }
  return std::nullopt;
}

std::optional<Bipartition> complete_bipartite_split(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  auto bp = bipartition(g);
  if (!bp) return std::nullopt;
  if (g.size() != bp->side0.size() * bp->side1.size()) return std::nullopt;
  return bp;
}

enum class BlockRule { clique_only, edge_or_cycle, cycle_or_clique, disjoint_cycles };

bool blocks_satisfy(const std::vector<BlockKind>& kinds, int n, BlockRule rule) {
  std::vector<int> cycle_blocks_at(n, 0);
  int cycles = 0;
  for (const auto& b : kinds) {
    const bool small = b.vertices.size() <= 2;
    switch (rule) {
      case BlockRule::clique_only:
        if (!b.is_clique) return false;
        break;
      case BlockRule::edge_or_cycle:
      case BlockRule::disjoint_cycles:
        if (!small && !b.is_cycle) return false;
        break;
      case BlockRule::cycle_or_clique:
        if (!b.is_cycle && !b.is_clique) return false;
        break;
    }
    if (b.is_cycle) {
      ++cycles;
      for (Vertex v : b.vertices) ++cycle_blocks_at[v];
    }
  }
  if (rule == BlockRule::disjoint_cycles) {
    if (cycles == 0) return false;
    return std::all_of(cycle_blocks_at.begin(), cycle_blocks_at.end(), [](int c) { return c <= 1; });
  }
  return true;
}

BlockRule rule_for(ClassTag tag) {
  switch (tag) {
    case ClassTag::block_graph: return BlockRule::clique_only;
    case ClassTag::cactus: return BlockRule::edge_or_cycle;
    case ClassTag::disjoint_cycles: return BlockRule::disjoint_cycles;
    default: return BlockRule::cycle_or_clique;
  }
}

// Listed blocks must carry correct flags and partition the edge set.
bool block_kinds_valid(const Graph& g, const std::vector<BlockKind>& kinds) {
  std::size_t edges = 0;
  std::vector<std::vector<int>> owner(g.order(), std::vector<int>(g.order(), 0));
  for (const auto& b : kinds) {
    for (Vertex v : b.vertices) {
      if (v < 0 || v >= g.order()) return false;
    }
    if (b.is_cycle != block_is_cycle(g, b.vertices)) return false;
    if (b.is_clique != block_is_clique(g, b.vertices)) return false;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < b.vertices.size(); ++j) {
        const Vertex u = b.vertices[i];
        const Vertex v = b.vertices[j];
        if (!g.adjacent(u, v)) continue;
        if (owner[u][v]++ > 0) return false;
        ++edges;
      }
    }
  }
  return edges == g.size();
}

bool replay_creation(const Graph& g, const CreationSequence& seq) {
  if (static_cast<int>(seq.steps.size()) != g.order()) return false;
  std::vector<bool> added(g.order(), false);
  VertexSet so_far;
  for (const auto& [v, dominating] : seq.steps) {
    if (v < 0 || v >= g.order() || added[v]) return false;
    for (Vertex u : so_far) {
      if (g.adjacent(u, v) != dominating) return false;
    }
    added[v] = true;
    so_far.push_back(v);
  }
  return true;
}

}  // namespace

std::string_view to_string(ClassTag tag) { return kTagNames[static_cast<int>(tag)]; }

std::optional<ClassTag> parse_class_tag(std::string_view name) {
  for (int i = 0; i < kClassTagCount; ++i) {
    if (kTagNames[i] == name) return static_cast<ClassTag>(i);
  }
  return std::nullopt;
}

std::vector<ClassTag> tag_list(TagMask mask) {
  std::vector<ClassTag> out;
  for (int i = 0; i < kClassTagCount; ++i) {
    if ((mask >> i) & 1U) out.push_back(static_cast<ClassTag>(i));
  }
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (Vertex v = 0; v < g.order(); ++v) (side[v] == 0 ? out.side0 : out.side1).push_back(v);
  return out;
}

std::vector<BlockKind> block_kinds(const Graph& g) {
  std::vector<BlockKind> out;
  for (const auto& b : blocks(g).blocks) {
    out.push_back({b, block_is_cycle(g, b), block_is_clique(g, b)});
  }
  return out;
}

bool is_split(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  int m = 0;
  for (int i = 0; i < g.order(); ++i) {
    if (d[i] >= i) m = i + 1;  // 1-based: d_i >= i - 1
  }
  long long head = 0;
  long long tail = 0;
  for (int i = 0; i < g.order(); ++i) (i < m ? head : tail) += d[i];
  return head == static_cast<long long>(m) * (m - 1) + tail;
}

SplitPartition split_partition(const Graph& g) {
  if (!is_split(g)) throw Error(Errc::not_split, "graph is not split");
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < g.order(); ++i) {
    if (g.degree(order[i]) >= i) m = i + 1;
  }
  VertexSet base(order.begin(), order.begin() + m);
  std::sort(base.begin(), base.end());
  const VertexSet rest = complement_of(g, base);
  if (!is_clique_set(g, base) || !is_independent_set(g, rest)) {
    throw std::logic_error("degree-sequence split partition failed to validate");
  }

  // Any clique holds at most one independent vertex, so every maximum
  // clique is the base, the base plus one vertex, or the base with one
  // vertex swapped out.
  std::vector<VertexSet> candidates{base};
  for (Vertex i : rest) {
    VertexSet missing;
    for (Vertex k : base) {
      if (!g.adjacent(i, k)) missing.push_back(k);
    }
    VertexSet c = base;
    if (missing.size() == 1) std::erase(c, missing[0]);
    if (missing.size() > 1) continue;
    c.push_back(i);
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  std::optional<SplitPartition> best;
  for (auto& c : candidates) {
    VertexSet other = complement_of(g, c);
    if (!is_clique_set(g, c) || !is_independent_set(g, other)) continue;
    if (!best || c.size() > best->clique.size() ||
        (c.size() == best->clique.size() && c < best->clique)) {
      best = SplitPartition{std::move(c), std::move(other)};
    }
  }
  return *best;
}

std::optional<CreationSequence> threshold_sequence(const Graph& g) {
  const int n = g.order();
  std::vector<bool> alive(n, true);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<std::pair<Vertex, bool>> removed;
  for (int left = n; left > 0; --left) {
    Vertex pick = -1;
    bool dominating = false;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (alive[v] && degree[v] == 0) pick = v;
    }
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (alive[v] && degree[v] == left - 1) {
        pick = v;
        dominating = true;
      }
    }
    if (pick < 0) return std::nullopt;
    alive[pick] = false;
    for (Vertex w : g.neighbors(pick)) {
      if (alive[w]) --degree[w];
    }
    removed.emplace_back(pick, dominating && left > 1);
  }
  CreationSequence seq;
  seq.steps.assign(removed.rbegin(), removed.rend());
  return seq;
}

std::vector<ClassWitness> classify(const Graph& g) {
  std::vector<ClassWitness> out;
  const auto bp = bipartition(g);
  const auto kinds = block_kinds(g);
  const bool forest = is_forest(g);
  const bool tree = is_tree(g);

  if (bp) out.push_back({ClassTag::bipartite, *bp});
  if (tree) out.push_back({ClassTag::tree, std::monostate{}});
  if (forest) out.push_back({ClassTag::forest, std::monostate{}});
  if (is_cycle_graph(g)) out.push_back({ClassTag::cycle, std::monostate{}});
  if (tree && g.max_degree() <= 2) out.push_back({ClassTag::path, std::monostate{}});
  if (is_complete(g)) out.push_back({ClassTag::complete, std::monostate{}});
  if (auto s = star_split(g)) out.push_back({ClassTag::star, *s});
  if (auto cb = complete_bipartite_split(g)) out.push_back({ClassTag::complete_bipartite, *cb});
  for (ClassTag tag : {ClassTag::block_graph, ClassTag::cactus, ClassTag::cycle_clique}) {
    if (blocks_satisfy(kinds, g.order(), rule_for(tag))) out.push_back({tag, kinds});
  }
  if (is_split(g)) out.push_back({ClassTag::split, split_partition(g)});
  if (auto seq = threshold_sequence(g)) out.push_back({ClassTag::threshold, *seq});
  if (blocks_satisfy(kinds, g.order(), BlockRule::disjoint_cycles)) {
    out.push_back({ClassTag::disjoint_cycles, kinds});
  }
  return out;
}

TagMask class_tags(const Graph& g) {
  TagMask mask = 0;
  for (const auto& w : classify(g)) mask |= 1U << static_cast<int>(w.tag);
  return mask;
}

bool validate_witness(const Graph& g, const ClassWitness& w) {
  switch (w.tag) {
    case ClassTag::bipartite:
    case ClassTag::star:
    case ClassTag::complete_bipartite: {
      const auto* bp = std::get_if<Bipartition>(&w.witness);
      if (!bp || !is_partition(g, bp->side0, bp->side1)) return false;
      if (!is_independent_set(g, bp->side0) || !is_independent_set(g, bp->side1)) return false;
      if (w.tag == ClassTag::bipartite) return true;
      if (bp->side0.empty() || bp->side1.empty() || !is_connected(g)) return false;
      if (g.size() != bp->side0.size() * bp->side1.size()) return false;
      return w.tag == ClassTag::complete_bipartite || bp->side0.size() == 1;
    }
    case ClassTag::tree: return is_tree(g);
    case ClassTag::forest: return is_forest(g);
    case ClassTag::cycle: return is_cycle_graph(g);
    case ClassTag::path: return is_tree(g) && g.max_degree() <= 2;
    case ClassTag::complete: return is_complete(g);
    case ClassTag::block_graph:
    case ClassTag::cactus:
    case ClassTag::cycle_clique:
    case ClassTag::disjoint_cycles: {
      const auto* kinds = std::get_if<std::vector<BlockKind>>(&w.witness);
      return kinds && block_kinds_valid(g, *kinds) && blocks_satisfy(*kinds, g.order(), rule_for(w.tag));
    }
    case ClassTag::split: {
      const auto* sp = std::get_if<SplitPartition>(&w.witness);
      return sp && is_partition(g, sp->clique, sp->independent) && is_clique_set(g, sp->clique) &&
             is_independent_set(g, sp->independent);
    }
    case ClassTag::threshold: {
      const auto* seq = std::get_if<CreationSequence>(&w.witness);
      return seq && replay_creation(g, *seq);
    }
  }
  return false;
}

bool is_tau2_structure(const Graph& g) { return min_vertex_cover(g).size == 2; }

}  // namespace encov
