#include "encov/theory.hpp"

#include <algorithm>
#include <deque>

#include "encov/classes.hpp"
#include "encov/covers.hpp"
#include "encov/error.hpp"
#include "encov/spectra.hpp"

namespace encov {

VcRepresentation vc_representation(const Graph& g) {
  VcRepresentation rep;
  rep.cover = min_vertex_cover(g).cover;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!std::binary_search(rep.cover.begin(), rep.cover.end(), v)) rep.independent.push_back(v);
  }
  for (std::size_t i = 0; i < rep.independent.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.independent.size(); ++j) {
      if (g.adjacent(rep.independent[i], rep.independent[j])) {
        throw std::logic_error("vertex cover complement is not independent");
      }
    }
  }
  return rep;
}

Graph associated_split_graph(const Graph& g, const VcRepresentation& rep) {
  VertexSet all = rep.cover;
  all.insert(all.end(), rep.independent.begin(), rep.independent.end());
  std::sort(all.begin(), all.end());
  bool partition = static_cast<int>(all.size()) == g.order();
  for (std::size_t i = 0; partition && i < all.size(); ++i) partition = all[i] == static_cast<Vertex>(i);
  if (!partition) {
    throw Error(Errc::invalid_representation, "X and Y must partition the vertex set");
  }
  if (!is_vertex_cover(g, rep.cover)) {
    throw Error(Errc::invalid_representation, "X is not a vertex cover");
  }
  const int tau = min_vertex_cover(g).size;
  if (static_cast<int>(rep.cover.size()) != tau) {
    throw Error(Errc::invalid_representation, "X is a cover but not a minimum one");
  }
  EdgeSet extra;
  for (std::size_t i = 0; i < rep.cover.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.cover.size(); ++j) extra.push_back({rep.cover[i], rep.cover[j]});
  }
  Graph gs = add_edges(g, extra);
  if (min_vertex_cover(gs).size != tau) {
    throw std::logic_error("associated split graph changed the cover number");
  }
  return gs;
}

CliqueDecomposition split_clique_decomposition(const Graph& g) {
  if (!is_connected(g) || !is_split(g)) {
    throw Error(Errc::hypothesis_failed, "needs a connected split graph");
  }
  const int omega = clique_number(g);
  const int tau = min_vertex_cover(g).size;
  if (omega != tau) {
    throw Error(Errc::hypothesis_failed, "clique number " + std::to_string(omega) +
                                             " differs from cover number " + std::to_string(tau));
  }
  const SplitPartition sp = split_partition(g);
  const VertexSet& clique = sp.clique;

  auto covered_by = [&](Vertex anchor) {
    VertexSet out;
    for (Vertex k : clique) {
      if (g.adjacent(anchor, k)) out.push_back(k);
    }
    return out;
  };

  VertexSet uncovered = clique;
  VertexSet anchors;
  while (!uncovered.empty()) {
    Vertex pick = -1;
    std::size_t gain = 0;
    for (Vertex y : sp.independent) {
      std::size_t hits = 0;
      for (Vertex k : uncovered) hits += g.adjacent(y, k) ? 1 : 0;
      if (hits > gain) {
        gain = hits;
        pick = y;
      }
    }
    if (pick < 0) throw std::logic_error("independent side does not cover the clique");
    anchors.push_back(pick);
    std::erase_if(uncovered, [&](Vertex k) { return g.adjacent(pick, k); });
  }
  std::sort(anchors.begin(), anchors.end());
  for (std::size_t i = 0; i < anchors.size();) {
    VertexSet reach;
    for (std::size_t j = 0; j < anchors.size(); ++j) {
      if (j == i) continue;
      for (Vertex k : covered_by(anchors[j])) reach.push_back(k);
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    if (reach == clique) {
      anchors.erase(anchors.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  CliqueDecomposition out;
  out.anchors = anchors;
  std::vector<bool> used(g.order(), false);
  for (Vertex anchor : anchors) {
    VertexSet part{anchor};
    for (Vertex k : covered_by(anchor)) {
      if (!used[k]) part.push_back(k);
    }
    std::sort(part.begin(), part.end());
    for (Vertex v : part) used[v] = true;
    out.parts.push_back(std::move(part));
  }

  std::size_t total = 0;
  for (const auto& part : out.parts) total += part.size() - 1;
  if (static_cast<int>(total) != tau) throw std::logic_error("clique decomposition sum mismatch");
  return out;
}

BlockTree block_tree(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) {
    throw Error(Errc::disconnected, "block tree needs a connected, nonempty graph");
  }
  BlockTree t;
  t.decomposition = blocks(g);
  const auto& bd = t.decomposition;
  const int count = static_cast<int>(bd.blocks.size());
  std::vector<std::vector<int>> around(count);
  for (const auto& [a, b] : bd.block_adjacency) {
    around[a].push_back(b);
    around[b].push_back(a);
  }
  int best_cuts = -1;
  for (int i = 0; i < count; ++i) {
    int cuts = 0;
    for (Vertex v : bd.blocks[i]) {
      cuts += std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v) ? 1 : 0;
    }
    if (cuts > best_cuts) {
      best_cuts = cuts;
      t.root = i;
    }
  }
  t.level.assign(count, 0);
  t.parent.assign(count, -1);
  t.level[t.root] = 1;
  std::deque<int> queue{t.root};
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    for (int c : around[b]) {
      if (t.level[c] != 0) continue;
      t.level[c] = t.level[b] + 1;
      t.parent[c] = b;
      queue.push_back(c);
    }
  }
  return t;
}

QuasiPendentReduction quasi_pendent_reduce(const Graph& g) {
  Vertex best = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) {
      const Vertex u = g.neighbors(v)[0];
      if (best < 0 || u < best) best = u;
    }
  }
  if (best < 0) throw Error(Errc::no_pendant, "graph has no pendant vertex");
  const Vertex drop[] = {best};
  QuasiPendentReduction out{best, induced_delete(g, drop)};
  if (min_vertex_cover(out.reduced).size != min_vertex_cover(g).size - 1) {
    throw std::logic_error("quasi-pendent deletion did not lower the cover number by one");
  }
  return out;
}

CutSetEnergyCheck cut_set_energy_check(const Graph& g, const EdgeSet& cut) {
  EdgeSet s;
  for (const Edge& e : cut) s.push_back(e.normalized());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw Error(Errc::not_a_cut_set, "cut set is empty");
  Graph after;
  try {
    after = delete_edges(g, s);
  } catch (const Error& e) {
    throw Error(Errc::not_a_cut_set, e.what());
  }
  if (components(after).size() <= components(g).size()) {
    throw Error(Errc::not_a_cut_set, "deleting the edges does not disconnect anything");
  }
  CutSetEnergyCheck out;
  out.energy_before = energy(g).energy;
  out.energy_after = energy(after).energy;
  out.monotone = out.energy_before >= out.energy_after - 1e-9;
  std::vector<int> touches(g.order(), 0);
  for (const Edge& e : s) {
    ++touches[e.u];
    ++touches[e.v];
  }
  out.star_shaped = std::any_of(touches.begin(), touches.end(),
                                [&](int c) { return c == static_cast<int>(s.size()); });
  out.strict = out.energy_before > out.energy_after + 1e-9;
  return out;
}

}  // namespace encov
