#include "encov/families.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "encov/error.hpp"

namespace encov {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 13> kNames{{
    {FamilyKind::path, "path"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::complete, "complete"},
    {FamilyKind::complete_bipartite, "complete_bipartite"},
    {FamilyKind::complete_multipartite, "complete_multipartite"},
    {FamilyKind::star, "star"},
    {FamilyKind::wheel, "wheel"},
    {FamilyKind::generalized_wheel, "generalized_wheel"},
    {FamilyKind::g_pq, "g_pq"},
    {FamilyKind::d_pq, "d_pq"},
    {FamilyKind::flower, "flower"},
    {FamilyKind::friendship, "friendship"},
    {FamilyKind::kn_times_k2, "kn_times_k2"},
}};

[[noreturn]] void bad(const std::string& why) { throw Error(Errc::bad_parameter, why); }

void require_arity(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.params.size() < lo || spec.params.size() > hi) {
    bad(std::string(to_string(spec.kind)) + " takes " + std::to_string(lo) +
        (lo == hi ? "" : ".." + std::to_string(hi)) + " parameter(s)");
  }
}

void require_min(const FamilySpec& spec, int lo) {
  for (int p : spec.params) {
    if (p < lo) bad(to_string(spec) + ": parameters must be >= " + std::to_string(lo));
  }
}

// Cap on constructed graph size; generators are for desk-scale corpora.
constexpr long long kMaxFamilyOrder = 4096;

void add_cycle(EdgeSet& edges, const std::vector<Vertex>& ring) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    edges.push_back({ring[i], ring[(i + 1) % ring.size()]});
  }
}

}  // namespace

int SeededStream::between(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

std::string_view to_string(FamilyKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(to_string(spec.kind));
  out += '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  out += ')';
  return out;
}

FamilySpec parse_family_spec(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    bad("family spec must look like kind(p1,p2,...): \"" + std::string(text) + "\"");
  }
  const std::string_view name = trim(text.substr(0, open));
  FamilySpec spec;
  const auto kind = parse_family_kind(name);
  if (!kind) bad("unknown family \"" + std::string(name) + "\"");
  spec.kind = *kind;

  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (!trim(body).empty()) {
    const auto comma = body.find(',');
    const std::string_view item = trim(body.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      bad("bad parameter \"" + std::string(item) + "\" in " + std::string(text));
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  validate(spec);
  return spec;
}

std::pair<int, int> wheel_parameters(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::wheel && spec.params.size() == 1) return {1, spec.params[0]};
  return {spec.params.at(0), spec.params.at(1)};
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  long long order = 0;
  switch (spec.kind) {
    case FamilyKind::path:
      require_arity(spec, 1, 1);
      require_min(spec, 1);
      order = p[0];
      break;
    case FamilyKind::cycle:
      require_arity(spec, 1, 1);
      require_min(spec, 3);
      order = p[0];
      break;
    case FamilyKind::complete:
    case FamilyKind::kn_times_k2:
      require_arity(spec, 1, 1);
      require_min(spec, 1);
      order = spec.kind == FamilyKind::complete ? p[0] : 2LL * p[0];
      break;
    case FamilyKind::complete_bipartite:
      require_arity(spec, 2, 2);
      require_min(spec, 1);
      order = static_cast<long long>(p[0]) + p[1];
      break;
    case FamilyKind::complete_multipartite:
      require_arity(spec, 1, 64);
      require_min(spec, 1);
      for (int x : p) order += x;
      break;
    case FamilyKind::star:
    case FamilyKind::friendship:
      require_arity(spec, 1, 1);
      require_min(spec, 1);
      order = spec.kind == FamilyKind::star ? p[0] + 1LL : 2LL * p[0] + 1;
      break;
    case FamilyKind::wheel:
    case FamilyKind::generalized_wheel: {
      require_arity(spec, spec.kind == FamilyKind::wheel ? 1 : 2, 2);
      const auto [m, n] = wheel_parameters(spec);
      if (m < 1 || n < 3) bad(to_string(spec) + ": needs m >= 1 and n >= 3");
      order = static_cast<long long>(m) + n;
      break;
    }
    case FamilyKind::g_pq:
    case FamilyKind::d_pq:
      require_arity(spec, 2, 2);
      require_min(spec, 0);
      order = (spec.kind == FamilyKind::g_pq ? 3LL : 4LL) + p[0] + p[1];
      break;
    case FamilyKind::flower:
      require_arity(spec, 1, 64);
      require_min(spec, 3);
      order = 1;
      for (int x : p) order += x - 1;
      break;
  }
  if (order > kMaxFamilyOrder) {
    bad(to_string(spec) + " would have " + std::to_string(order) + " vertices (limit " +
        std::to_string(kMaxFamilyOrder) + ")");
  }
}

Graph make(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  EdgeSet edges;
  switch (spec.kind) {
    case FamilyKind::path:
      for (Vertex v = 0; v + 1 < p[0]; ++v) edges.push_back({v, v + 1});
      return build_graph(p[0], edges);
    case FamilyKind::cycle: {
      std::vector<Vertex> ring(p[0]);
      for (Vertex v = 0; v < p[0]; ++v) ring[v] = v;
      add_cycle(edges, ring);
      return build_graph(p[0], edges);
    }
    case FamilyKind::complete:
      return complement(empty_graph(p[0]));
    case FamilyKind::complete_bipartite:
      return join(empty_graph(p[0]), empty_graph(p[1]));
    case FamilyKind::complete_multipartite: {
      Graph g = empty_graph(p[0]);
      for (std::size_t i = 1; i < p.size(); ++i) g = join(g, empty_graph(p[i]));
      return g;
    }
    case FamilyKind::star:
      return join(empty_graph(1), empty_graph(p[0]));
    case FamilyKind::wheel:
    case FamilyKind::generalized_wheel: {
      const auto [m, n] = wheel_parameters(spec);
      return join(make({FamilyKind::cycle, {n}}), empty_graph(m));
    }
    case FamilyKind::g_pq: {
      edges = {{0, 1}, {1, 2}, {0, 2}};
      Vertex next = 3;
      for (int i = 0; i < p[0]; ++i) edges.push_back({0, next++});
      for (int i = 0; i < p[1]; ++i) edges.push_back({1, next++});
      return build_graph(next, edges);
    }
    case FamilyKind::d_pq: {
      edges = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}};
      Vertex next = 4;
      for (int i = 0; i < p[0]; ++i) edges.push_back({0, next++});
      for (int i = 0; i < p[1]; ++i) edges.push_back({1, next++});
      return build_graph(next, edges);
    }
    case FamilyKind::flower:
    case FamilyKind::friendship: {
      std::vector<int> lengths = p;
      if (spec.kind == FamilyKind::friendship) lengths.assign(p[0], 3);
      Vertex next = 1;
      for (int len : lengths) {
        std::vector<Vertex> ring{0};
        for (int i = 1; i < len; ++i) ring.push_back(next++);
        add_cycle(edges, ring);
      }
      return build_graph(next, edges);
    }
    case FamilyKind::kn_times_k2:
      return cartesian_product(make({FamilyKind::complete, {p[0]}}), make({FamilyKind::complete, {2}}));
  }
  bad("unhandled family");
}

Graph random_split_graph(std::uint64_t seed, int n, double clique_fraction, double edge_prob) {
  if (n < 1 || n > kMaxFamilyOrder) bad("random split graph needs 1 <= n <= 4096");
  if (!(clique_fraction > 0.0 && clique_fraction < 1.0)) bad("clique_fraction must lie in (0,1)");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) bad("edge_prob must lie in [0,1]");
  const int k = std::min(n, static_cast<int>(std::ceil(clique_fraction * n)));
  SeededStream rng(seed);
  EdgeSet edges;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.push_back({u, v});
  }
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = k; v < n; ++v) {
      if (rng.uniform() < edge_prob) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

Graph random_cactus(std::uint64_t seed, int n_blocks, int max_cycle_len) {
  if (n_blocks < 1) bad("random cactus needs at least one block");
  if (max_cycle_len < 3) bad("max_cycle_len must be >= 3");
  if (static_cast<long long>(n_blocks) * (max_cycle_len - 1) + 1 > kMaxFamilyOrder) {
    bad("random cactus would exceed 4096 vertices");
  }
  SeededStream rng(seed);
  EdgeSet edges;
  Vertex next = 1;
  for (int b = 0; b < n_blocks; ++b) {
    const Vertex anchor = rng.between(0, next - 1);
    const int len = rng.between(2, max_cycle_len);
    if (len == 2) {
      edges.push_back({anchor, next++});
      continue;
    }
    std::vector<Vertex> ring{anchor};
    for (int i = 1; i < len; ++i) ring.push_back(next++);
    add_cycle(edges, ring);
  }
  return build_graph(next, edges);
}

}  // namespace encov

namespace encov {

std::optional<std::pair<int, int>> recognize_generalized_wheel(const Graph& g) {
  const int total = g.order();
  if (total < 4 || !is_connected(g)) return std::nullopt;
  for (Vertex h = 0; h < total; ++h) {
    // A hub is adjacent to exactly the rim, so the hubs are V \ N(h).
    const auto rim_span = g.neighbors(h);
    const VertexSet rim(rim_span.begin(), rim_span.end());
    const int n = static_cast<int>(rim.size());
    const int m = total - n;
    if (n < 3) continue;
    std::vector<bool> on_rim(total, false);
    for (Vertex v : rim) on_rim[v] = true;
    bool ok = true;
    for (Vertex x = 0; x < total && ok; ++x) {
      if (on_rim[x]) {
        int rim_degree = 0;
        for (Vertex w : g.neighbors(x)) rim_degree += on_rim[w] ? 1 : 0;
        ok = rim_degree == 2 && g.degree(x) == 2 + m;
      } else {
        ok = g.degree(x) == n;
        for (Vertex w : g.neighbors(x)) ok = ok && on_rim[w];
      }
    }
    if (!ok) continue;
    if (!is_connected(induced_subgraph(g, rim))) continue;
    return std::pair{m, n};
  }
  return std::nullopt;
}

std::optional<int> recognize_complete_prism(const Graph& g) {
  const int total = g.order();
  if (total < 4 || total % 2 != 0) return std::nullopt;
  const int n = total / 2;
  if (g.min_degree() != n || g.max_degree() != n) return std::nullopt;
  if (n == 2) return is_connected(g) ? std::optional<int>(2) : std::nullopt;  // C_4
  // For n >= 3 the rungs are exactly the edges on no triangle.
  EdgeSet rungs;
  EdgeSet rails;
  for (const Edge& e : g.edges()) {
    bool in_triangle = false;
    for (Vertex w : g.neighbors(e.u)) {
      if (w != e.v && g.adjacent(w, e.v)) {
        in_triangle = true;
        break;
      }
    }
    (in_triangle ? rails : rungs).push_back(e);
  }
  if (static_cast<int>(rungs.size()) != n) return std::nullopt;
  if (rails.size() != static_cast<std::size_t>(n) * (n - 1)) return std::nullopt;
  // n(n-1) rail edges over two n-vertex components forces two cliques.
  const auto parts = components(build_graph(total, rails));
  if (parts.size() != 2 || parts[0].size() != static_cast<std::size_t>(n)) return std::nullopt;
  std::vector<int> side(total, 0);
  for (Vertex v : parts[1]) side[v] = 1;
  std::vector<int> rung_degree(total, 0);
  for (const Edge& e : rungs) {
    if (side[e.u] == side[e.v]) return std::nullopt;
    ++rung_degree[e.u];
    ++rung_degree[e.v];
  }
  for (int d : rung_degree) {
    if (d != 1) return std::nullopt;
  }
  return n;
}

}  // namespace encov
