#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "encov/blocks.hpp"
#include "encov/canonical.hpp"
#include "encov/error.hpp"
#include "encov/families.hpp"
#include "encov/graph.hpp"
#include "encov/spectra.hpp"
#include "oracles.hpp"

using namespace encov;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an encov::Error");
  return Errc::io_error;
}

Graph bowtie() { return build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}); }

void check_symmetric(const Graph& g) {
  std::size_t ones = 0;
  for (int u = 0; u < g.order(); ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (int v = 0; v < g.order(); ++v) {
      CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      ones += g.adjacent(u, v);
    }
  }
  CHECK(ones == 2 * g.size());
}

}  // namespace

TEST_CASE("build_graph basics") {
  const Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);

  const Graph k1 = build_graph(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

  // duplicates in either orientation collapse
  const Graph dup = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.size() == 1);
  check_symmetric(dup);
}

TEST_CASE("build_graph errors") {
  CHECK(code_of([] { build_graph(3, {{0, 3}}); }) == Errc::index_out_of_range);
  CHECK(code_of([] { build_graph(3, {{-1, 2}}); }) == Errc::index_out_of_range);
  CHECK(code_of([] { build_graph(3, {{1, 1}}); }) == Errc::self_loop);
}

TEST_CASE("adjacency is symmetric and irreflexive on random graphs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + t % 12, 0.4);
    check_symmetric(g);
    for (int v = 0; v < g.order(); ++v) {
      CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
    }
  }
}

TEST_CASE("induced_delete relabels in ascending order") {
  const Graph k3 = make(parse_family_spec("complete(3)"));
  const std::vector<Vertex> two{2};
  CHECK(induced_delete(k3, two) == build_graph(2, {{0, 1}}));

  const Graph c4 = make(parse_family_spec("cycle(4)"));
  const std::vector<Vertex> first{0, 1};
  CHECK(induced_delete(c4, first) == build_graph(2, {{0, 1}}));

  const Graph p = build_graph(5, {{0, 4}, {1, 3}, {2, 4}});
  const std::vector<Vertex> drop{1};
  CHECK(induced_delete(p, drop) == build_graph(4, {{0, 3}, {1, 3}}));

  const std::vector<Vertex> bad{7};
  CHECK(code_of([&] { induced_delete(k3, bad); }) == Errc::index_out_of_range);
}

TEST_CASE("closed edge deletion on G_{2,1}") {
  // u1 u2 u3 = 0 1 2; deleting [u2 u3] leaves u1 with its two pendants and
  // the pendant of u2 on its own.
  const Graph g = make(parse_family_spec("g_pq(2,1)"));
  const Graph rest = delete_closed_edge(g, {1, 2});
  CHECK(rest.order() == 4);
  const Graph expected = disjoint_union(make(parse_family_spec("star(2)")), empty_graph(1));
  CHECK(isomorphic(rest, expected));
  CHECK(oracle::isomorphic(rest, expected));
  CHECK(code_of([&] { delete_closed_edge(g, {3, 4}); }) == Errc::not_an_edge);
}

TEST_CASE("delete_edges") {
  const Graph c4 = make(parse_family_spec("cycle(4)"));
  const std::vector<Edge> one{{0, 1}};
  CHECK(oracle::isomorphic(delete_edges(c4, one), make(parse_family_spec("path(4)"))));

  const Graph k3 = make(parse_family_spec("complete(3)"));
  const std::vector<Edge> all{{0, 1}, {1, 2}, {0, 2}};
  CHECK(delete_edges(k3, all) == empty_graph(3));

  const Graph k4 = make(parse_family_spec("complete(4)"));
  const std::vector<Edge> pm{{0, 1}, {2, 3}};
  CHECK(oracle::isomorphic(delete_edges(k4, pm), make(parse_family_spec("cycle(4)"))));

  const std::vector<Edge> missing{{0, 2}};
  CHECK(code_of([&] { delete_edges(c4, missing); }) == Errc::not_an_edge);
}

TEST_CASE("graph algebra") {
  const Graph c4 = make(parse_family_spec("cycle(4)"));
  const Graph w = join(c4, empty_graph(2));
  CHECK(w.size() == 12);
  CHECK(w == make(parse_family_spec("generalized_wheel(2,4)")));

  const Graph prism = cartesian_product(make(parse_family_spec("complete(3)")), make(parse_family_spec("complete(2)")));
  CHECK(prism.order() == 6);
  CHECK(prism.size() == 9);
  CHECK(oracle::isomorphic(prism, make(parse_family_spec("kn_times_k2(3)"))));

  const Graph u = disjoint_union(build_graph(2, {{0, 1}}), empty_graph(1));
  CHECK(u.order() == 3);
  CHECK(u.size() == 1);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Graph a = oracle::random_graph(rng, 1 + t % 6, 0.5);
    const Graph b = oracle::random_graph(rng, 1 + (t * 7) % 5, 0.5);
    const Graph j = join(a, b);
    CHECK(j.size() == a.size() + b.size() + static_cast<std::size_t>(a.order() * b.order()));

    // product adjacency: one coordinate changes along an edge
    const Graph p = cartesian_product(a, b);
    for (int x1 = 0; x1 < a.order(); ++x1)
      for (int y1 = 0; y1 < b.order(); ++y1)
        for (int x2 = 0; x2 < a.order(); ++x2)
          for (int y2 = 0; y2 < b.order(); ++y2) {
            const bool expect = (x1 == x2 && b.adjacent(y1, y2)) || (y1 == y2 && a.adjacent(x1, x2));
            CHECK(p.adjacent(x1 * b.order() + y1, x2 * b.order() + y2) == expect);
          }

    CHECK(oracle::isomorphic(cartesian_product(a, empty_graph(1)), a));
    CHECK(join(a, empty_graph(0)) == a);

    const auto before = eigenvalues(a).values;
    auto after = eigenvalues(disjoint_union(a, empty_graph(2))).values;
    std::vector<double> expected = before;
    expected.push_back(0.0);
    expected.push_back(0.0);
    std::sort(expected.rbegin(), expected.rend());
    REQUIRE(after.size() == expected.size());
    for (std::size_t i = 0; i < after.size(); ++i) CHECK(after[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  }
}

TEST_CASE("complement and relabel") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::random_graph(rng, 6, 0.5);
    const Graph c = complement(g);
    CHECK(g.size() + c.size() == 15);
    CHECK(complement(c) == g);
    std::vector<Vertex> perm{3, 0, 5, 1, 4, 2};
    const Graph r = relabel(g, perm);
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v) CHECK(r.adjacent(perm[u], perm[v]) == g.adjacent(u, v));
  }
}

TEST_CASE("components") {
  const Graph g = build_graph(6, {{0, 3}, {3, 5}, {1, 2}});
  const auto cs = components(g);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == VertexSet{0, 3, 5});
  CHECK(cs[1] == VertexSet{1, 2});
  CHECK(cs[2] == VertexSet{4});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(empty_graph(1)));
  CHECK(isolated_vertices(g) == VertexSet{4});
}

TEST_CASE("blocks examples") {
  const auto bt = blocks(bowtie());
  CHECK(bt.blocks.size() == 2);
  CHECK(bt.cut_vertices == VertexSet{0});

  const auto p4 = blocks(make(parse_family_spec("path(4)")));
  CHECK(p4.blocks.size() == 3);
  CHECK(p4.cut_vertices == VertexSet{1, 2});

  const auto k4 = blocks(make(parse_family_spec("complete(4)")));
  CHECK(k4.blocks.size() == 1);
  CHECK(k4.cut_vertices.empty());

  const auto iso = blocks(build_graph(3, {{0, 1}}));
  CHECK(iso.blocks == std::vector<VertexSet>{{0, 1}, {2}});
}

TEST_CASE("blocks agree with the cycle-relation oracle on all graphs n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n, false)) {
      const auto d = blocks(g);
      CHECK(d.blocks == oracle::blocks(g));
      CHECK(d.cut_vertices == oracle::cut_vertices(g));
      std::size_t edges = 0;
      for (const auto& b : d.blocks) edges += block_edge_count(g, b);
      CHECK(edges == g.size());
      for (Vertex v = 0; v < n; ++v) {
        const bool cut = std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v);
        CHECK(cut == (d.blocks_of(v).size() >= 2));
      }
      for (const auto& [i, j] : d.block_adjacency) {
        REQUIRE(i < j);
        VertexSet common;
        std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(), d.blocks[j].begin(), d.blocks[j].end(),
                              std::back_inserter(common));
        CHECK_FALSE(common.empty());
      }
    }
  }
}
