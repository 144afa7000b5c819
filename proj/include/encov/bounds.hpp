#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "encov/classes.hpp"
#include "encov/covers.hpp"
#include "encov/families.hpp"
#include "encov/graph.hpp"

namespace encov {

/// Results whose hypotheses a graph can satisfy. The first nine give
/// E >= 2*tau; the last two are the unconditional bounds.
enum class TheoremId {
  complete,        // E(K_n) = 2 tau
  bipartite,       // bipartite graphs
  cycle,           // cycles
  cover_two,       // tau = 2
  tree,            // trees (equality only for K_2)
  cycle_clique,    // every block a cycle or a clique
  split,           // split graphs
  wheel,           // W_{m,n}
  complete_prism,  // K_n x K_2
  wang_ma,         // E >= 2 tau - 2 c
  matching,        // E >= 2 mu
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
/// True for the ids that guarantee E >= 2 tau.
bool bounds_tau(TheoremId id);

inline constexpr double kEqualityTol = 1e-6;
inline constexpr double kSlackTol = 1e-9;

struct BoundReport {
  std::string graph_id;
  int n = 0;
  long long m = 0;
  double energy = 0.0;
  int tau = 0;
  int mu = 0;
  std::optional<long long> c;  // empty when cycle enumeration hit the cap
  int omega = 0;
  std::vector<ClassTag> class_tags;
  double slack_tau = 0.0;                  // E - 2 tau
  std::optional<double> slack_wang_ma;     // E - (2 tau - 2 c)
  double slack_matching = 0.0;             // E - 2 mu
  bool equality_tau = false;               // |slack_tau| <= kEqualityTol
  std::vector<TheoremId> guaranteed_by;

  bool tau_backed() const;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct VerifyOptions {
  long long cycle_cap = kDefaultCycleCap;
  /// Drop isolated vertices before anything else (changes n and graph_id
  /// only; every other field is additive and unaffected).
  bool strip_isolated = false;
};

/// Evaluates all bounds on g. Invariants are computed per connected
/// component and summed (omega is the maximum). guaranteed_by is derived
/// from class recognizers and family recognizers only, never from the
/// numeric outcome.
BoundReport verify(const Graph& g, const VerifyOptions& opts = {});

/// Ids whose hypotheses hold, given the tags, the cover number and the graph.
std::vector<TheoremId> applicable_theorems(const Graph& g, TagMask tags, int tau);

/// For a connected cycle-clique graph: true iff g is K_n (n >= 1) or C_4.
/// Throws Error{hypothesis_failed} otherwise.
bool equality_classification(const Graph& g);

/// Published equality verdict (E == 2 tau) for family members where one
/// exists; the wheel entry lists W_{1,3} and W_{1,4}.
std::optional<bool> stated_equality(const FamilySpec& spec);

}  // namespace encov
