#include "encov/covers.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "encov/blocks.hpp"
#include "encov/error.hpp"

namespace encov {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
int lowest(std::uint64_t mask) { return std::countr_zero(mask); }

void require_exact_order(const Graph& g, const char* what) {
  if (g.order() > kExactMaxOrder) {
    throw Error(Errc::too_large, std::string(what) + " limited to " +
                                     std::to_string(kExactMaxOrder) + " vertices");
  }
}

std::vector<std::uint64_t> masks(const Graph& g) {
  std::vector<std::uint64_t> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.neighbor_mask(v);
  return out;
}

VertexSet to_set(std::uint64_t mask) {
  VertexSet out;
  for (; mask; mask &= mask - 1) out.push_back(lowest(mask));
  return out;
}

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : adj_(masks(g)) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (adj_[v]) best_ |= bit(v);
    }
    best_size_ = std::popcount(best_);
  }

  std::uint64_t run() {
    std::uint64_t all = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) all |= bit(static_cast<int>(v));
    solve(all, 0);
    return best_;
  }

 private:
  void reduce(std::uint64_t& active, std::uint64_t& chosen) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint64_t rest = active; rest; rest &= rest - 1) {
        const int v = lowest(rest);
        const std::uint64_t nv = adj_[v] & active;
        if (nv == 0) {
          active &= ~bit(v);
        } else if (std::has_single_bit(nv)) {
          chosen |= nv;
          active &= ~(nv | bit(v));
          changed = true;
          break;
        }
      }
    }
  }

  int greedy_matching_size(std::uint64_t active) const {
    int size = 0;
    while (active) {
      const int v = lowest(active);
      active &= ~bit(v);
      const std::uint64_t nv = adj_[v] & active;
      if (nv) {
        active &= ~bit(lowest(nv));
        ++size;
      }
    }
    return size;
  }

  void solve(std::uint64_t active, std::uint64_t chosen) {
    reduce(active, chosen);
    const int taken = std::popcount(chosen);
    if (taken >= best_size_) return;
    if (active == 0) {
      best_ = chosen;
      best_size_ = taken;
      return;
    }
    if (taken + greedy_matching_size(active) >= best_size_) return;

    int pivot = -1;
    int pivot_degree = -1;
    for (std::uint64_t rest = active; rest; rest &= rest - 1) {
      const int v = lowest(rest);
      const int d = std::popcount(adj_[v] & active);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    const std::uint64_t around = adj_[pivot] & active;
    solve(active & ~bit(pivot), chosen | bit(pivot));
    solve(active & ~(bit(pivot) | around), chosen | around);
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
  int best_size_ = 0;
};

// Edmonds' blossom algorithm, BFS form with explicit base contraction.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<Vertex> run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] >= 0) continue;
      Vertex v = augmenting_path_end(root);
      while (v >= 0) {
        const Vertex pv = parent_[v];
        const Vertex ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return match_;
  }

 private:
  Vertex common_base(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex augmenting_path_end(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          const Vertex b = common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : adj_(masks(g)) {}

  std::uint64_t run() {
    std::uint64_t all = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) all |= bit(static_cast<int>(v));
    expand(0, all);
    return best_;
  }

 private:
  void expand(std::uint64_t clique, std::uint64_t candidates) {
    if (candidates == 0) {
      if (std::popcount(clique) > std::popcount(best_)) best_ = clique;
      return;
    }
    // Greedy coloring: order[i] gets color bound[i], nondecreasing.
    std::vector<int> order;
    std::vector<int> bound;
    std::uint64_t uncolored = candidates;
    int color = 0;
    while (uncolored) {
      ++color;
      std::uint64_t available = uncolored;
      while (available) {
        const int v = lowest(available);
        available &= ~(bit(v) | adj_[v]);
        uncolored &= ~bit(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    const int size = std::popcount(clique);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= std::popcount(best_)) return;
      const int v = order[i];
      expand(clique | bit(v), candidates & adj_[v]);
      candidates &= ~bit(v);
    }
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
};

}  // namespace

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : cover) {
    if (v < 0 || v >= g.order()) return false;
    in[v] = true;
  }
  for (const Edge& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

bool is_matching(const Graph& g, const EdgeSet& matching) {
  std::vector<bool> hit(g.order(), false);
  for (const Edge& e : matching) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order()) return false;
    if (e.u == e.v || !g.adjacent(e.u, e.v) || hit[e.u] || hit[e.v]) return false;
    hit[e.u] = hit[e.v] = true;
  }
  return true;
}

CoverCertificate min_vertex_cover(const Graph& g) {
  require_exact_order(g, "minimum vertex cover");
  CoverCertificate out;
  out.cover = to_set(CoverSearch(g).run());
  out.size = static_cast<int>(out.cover.size());
  if (!is_vertex_cover(g, out.cover)) throw std::logic_error("vertex cover certificate failed");
  return out;
}

MatchingCertificate max_matching(const Graph& g) {
  require_exact_order(g, "maximum matching");
  const std::vector<Vertex> mate = Blossom(g).run();
  MatchingCertificate out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mate[v] > v) out.matching.push_back({v, mate[v]});
  }
  out.size = static_cast<int>(out.matching.size());
  if (!is_matching(g, out.matching)) throw std::logic_error("matching certificate failed");
  return out;
}

VertexSet max_clique(const Graph& g) {
  require_exact_order(g, "maximum clique");
  return to_set(CliqueSearch(g).run());
}

int clique_number(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

OddCycleCount enumerate_odd_cycles(const Graph& g, long long cap) {
  const int n = g.order();
  long long total = 0;
  long long odd = 0;
  long long steps = 0;
  const long long step_budget = 64 * std::max<long long>(cap, 1) + 1'000'000;
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);
  std::vector<std::size_t> next;

  auto over_cap = [&] {
    throw Error(Errc::cap_exceeded, "more than " + std::to_string(cap) +
                                        " elementary cycles; odd cycle count not computed");
  };

  for (Vertex root = 0; root < n; ++root) {
    path.assign(1, root);
    next.assign(1, 0);
    on_path[root] = true;
    while (!path.empty()) {
      const Vertex v = path.back();
      auto nbrs = g.neighbors(v);
      if (next.back() == nbrs.size()) {
        on_path[v] = false;
        path.pop_back();
        next.pop_back();
        continue;
      }
      const Vertex w = nbrs[next.back()++];
      if (++steps > step_budget) over_cap();
      if (w == root) {
        // Each cycle is seen in both directions; keep the one whose second
        // vertex is smaller than its last.
        if (path.size() >= 3 && path[1] < path.back()) {
          if (++total > cap) over_cap();
          if (path.size() % 2 == 1) ++odd;
        }
      } else if (w > root && !on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        next.push_back(0);
      }
    }
  }
  return {odd, true};
}

OddCycleCount odd_cycle_count(const Graph& g, long long cap) {
  const BlockDecomposition bd = blocks(g);
  long long odd = 0;
  bool shortcut = true;
  for (const auto& b : bd.blocks) {
    if (b.size() <= 2) continue;
    if (!block_is_cycle(g, b)) {
      shortcut = false;
      break;
    }
    if (b.size() % 2 == 1) ++odd;
  }
  if (shortcut) {
    // One cycle per cycle block; the cap still applies to the total.
    long long cycles = 0;
    for (const auto& b : bd.blocks) cycles += b.size() > 2 ? 1 : 0;
    if (cycles > cap) {
      throw Error(Errc::cap_exceeded, "more than " + std::to_string(cap) + " elementary cycles");
    }
    return {odd, false};
  }
  return enumerate_odd_cycles(g, cap);
}

}  // namespace encov
