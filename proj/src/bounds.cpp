#include "encov/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "encov/canonical.hpp"
#include "encov/error.hpp"
#include "encov/spectra.hpp"

namespace encov {

namespace {

constexpr std::array<std::string_view, 11> kTheoremNames{
    "complete",     "bipartite", "cycle", "cover-two",      "tree",     "cycle-clique",
    "split",        "wheel",     "complete-prism", "wang-ma", "matching",
};

}  // namespace

std::string_view to_string(TheoremId id) { return kTheoremNames[static_cast<int>(id)]; }

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (std::size_t i = 0; i < kTheoremNames.size(); ++i) {
    if (kTheoremNames[i] == name) return static_cast<TheoremId>(i);
  }
  return std::nullopt;
}

bool bounds_tau(TheoremId id) { return id != TheoremId::wang_ma && id != TheoremId::matching; }

bool BoundReport::tau_backed() const {
  return std::any_of(guaranteed_by.begin(), guaranteed_by.end(), bounds_tau);
}

std::vector<TheoremId> applicable_theorems(const Graph& g, TagMask tags, int tau) {
  std::vector<TheoremId> out;
  if (has_tag(tags, ClassTag::complete)) out.push_back(TheoremId::complete);
  if (has_tag(tags, ClassTag::bipartite)) out.push_back(TheoremId::bipartite);
  if (has_tag(tags, ClassTag::cycle)) out.push_back(TheoremId::cycle);
  if (tau == 2) out.push_back(TheoremId::cover_two);
  if (has_tag(tags, ClassTag::tree)) out.push_back(TheoremId::tree);
  if (has_tag(tags, ClassTag::cycle_clique)) out.push_back(TheoremId::cycle_clique);
  if (has_tag(tags, ClassTag::split)) out.push_back(TheoremId::split);
  if (recognize_generalized_wheel(g)) out.push_back(TheoremId::wheel);
  if (recognize_complete_prism(g)) out.push_back(TheoremId::complete_prism);
  out.push_back(TheoremId::wang_ma);
  out.push_back(TheoremId::matching);
  return out;
}

BoundReport verify(const Graph& input, const VerifyOptions& opts) {
  Graph g = input;
  if (opts.strip_isolated) g = induced_delete(input, isolated_vertices(input));

  BoundReport r;
  r.graph_id = graph_id(g);
  r.n = g.order();
  r.m = static_cast<long long>(g.size());
  r.omega = g.order() > 0 ? 1 : 0;
  long long odd = 0;
  bool odd_known = true;
  for (const VertexSet& comp : components(g)) {
    if (comp.size() < 2) continue;
    const Graph part = induced_subgraph(g, comp);
    r.energy += energy(part).energy;
    r.tau += min_vertex_cover(part).size;
    r.mu += max_matching(part).size;
    r.omega = std::max(r.omega, clique_number(part));
    if (odd_known) {
      try {
        odd += odd_cycle_count(part, opts.cycle_cap).count;
      } catch (const Error& e) {
        if (e.code() != Errc::cap_exceeded) throw;
        odd_known = false;
      }
    }
  }
  if (odd_known) r.c = odd;

  const TagMask tags = class_tags(g);
  r.class_tags = tag_list(tags);
  r.slack_tau = r.energy - 2.0 * r.tau;
  if (r.c) r.slack_wang_ma = r.energy - (2.0 * r.tau - 2.0 * static_cast<double>(*r.c));
  r.slack_matching = r.energy - 2.0 * r.mu;
  r.equality_tau = std::abs(r.slack_tau) <= kEqualityTol;
  r.guaranteed_by = applicable_theorems(g, tags, r.tau);
  return r;
}

bool equality_classification(const Graph& g) {
  const TagMask tags = class_tags(g);
  if (g.order() == 0 || !is_connected(g) || !has_tag(tags, ClassTag::cycle_clique)) {
    throw Error(Errc::hypothesis_failed, "equality classification needs a connected cycle-clique graph");
  }
  return has_tag(tags, ClassTag::complete) || (has_tag(tags, ClassTag::cycle) && g.order() == 4);
}

std::optional<bool> stated_equality(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::complete:
    case FamilyKind::kn_times_k2:
      return true;
    case FamilyKind::cycle:
      return p[0] == 3 || p[0] == 4;
    case FamilyKind::complete_bipartite:
      return p[0] == p[1];
    case FamilyKind::star:
      return p[0] == 1;
    case FamilyKind::path:
      return p[0] <= 2;
    case FamilyKind::wheel:
    case FamilyKind::generalized_wheel: {
      const auto [m, n] = wheel_parameters(spec);
      return m == 1 && (n == 3 || n == 4);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace encov
