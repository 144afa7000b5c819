#include "encov/blocks.hpp"

#include <algorithm>

namespace encov {

std::vector<int> BlockDecomposition::blocks_of(Vertex v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), v)) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

BlockDecomposition blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> found;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      found.push_back({root});
      continue;
    }
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (disc[w] < 0) {
          edge_stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        VertexSet block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == parent && e.v == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        found.push_back(std::move(block));
      }
    }
  }

  BlockDecomposition out;
  std::sort(found.begin(), found.end());
  out.blocks = std::move(found);
  std::vector<int> count(n, 0);
  for (const auto& b : out.blocks) {
    for (Vertex v : b) ++count[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (count[v] >= 2) out.cut_vertices.push_back(v);
  }
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < out.blocks.size(); ++j) {
      const auto& a = out.blocks[i];
      const auto& b = out.blocks[j];
      auto ia = a.begin();
      auto ib = b.begin();
      bool shared = false;
      while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) {
          shared = true;
          break;
        }
        if (*ia < *ib) ++ia; else ++ib;
      }
      if (shared) out.block_adjacency.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

std::size_t block_edge_count(const Graph& g, const VertexSet& block) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (g.adjacent(block[i], block[j])) ++m;
    }
  }
  return m;
}

bool block_is_cycle(const Graph& g, const VertexSet& block) {
  return block.size() >= 3 && block_edge_count(g, block) == block.size();
}

bool block_is_clique(const Graph& g, const VertexSet& block) {
  const std::size_t k = block.size();
  return block_edge_count(g, block) == k * (k - 1) / 2;
}

}  // namespace encov
