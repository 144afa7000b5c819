#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "encov/graph.hpp"

namespace encov {

enum class FamilyKind {
  path,                   // path(n)
  cycle,                  // cycle(n), n >= 3
  complete,               // complete(n), n >= 1
  complete_bipartite,     // complete_bipartite(p,q), p,q >= 1
  complete_multipartite,  // complete_multipartite(p1,...,pk), k >= 1, each >= 1
  star,                   // star(k): K_{1,k}, k >= 1
  wheel,                  // wheel(n) = W_{1,n}, or wheel(m,n) = W_{m,n}
  generalized_wheel,      // generalized_wheel(m,n), m >= 1, n >= 3
  g_pq,                   // g_pq(p,q), p,q >= 0
  d_pq,                   // d_pq(p,q), p,q >= 0
  flower,                 // flower(l1,...,lk), k >= 1, each >= 3
  friendship,             // friendship(k): k triangles on one vertex
  kn_times_k2,            // kn_times_k2(n), n >= 1
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);
/// "kind(p1,p2,...)".
std::string to_string(const FamilySpec& spec);

/// Parses "kind(p1,p2,...)". Throws Error{bad_parameter} on syntax errors,
/// unknown kinds, or parameters out of range.
FamilySpec parse_family_spec(std::string_view text);

/// Throws Error{bad_parameter} when arity or ranges are wrong.
void validate(const FamilySpec& spec);

/// (m, n) for wheel / generalized_wheel specs.
std::pair<int, int> wheel_parameters(const FamilySpec& spec);

/// Deterministic construction. Vertex numbering:
///  - path / cycle: 0..n-1 along the path / cycle.
///  - complete_bipartite(p,q): side of size p first.
///  - star(k): center 0, leaves 1..k.
///  - wheel(m,n): cycle 0..n-1, then the m hubs.
///  - g_pq(p,q): triangle u1 u2 u3 = 0 1 2, then p pendants on u1, then q on u2.
///  - d_pq(p,q): triangles u1 u2 u3 and u1 u2 u4 on 0 1 2 3 (sharing u1 u2),
///    then p pendants on u1, then q on u2.
///  - flower(l1..lk): shared vertex 0, then each cycle's remaining vertices
///    in order.
///  - kn_times_k2(n): vertex (i, j) is 2i + j.
Graph make(const FamilySpec& spec);

/// Complete split graph generator. The clique takes ceil(clique_fraction*n)
/// vertices (0..k-1), the rest are independent, and each clique/independent
/// pair is joined when the next draw of an mt19937_64 stream seeded with
/// `seed` (mapped to [0,1) through its top 53 bits) is below edge_prob.
Graph random_split_graph(std::uint64_t seed, int n, double clique_fraction, double edge_prob);

/// Starts from one vertex and attaches n_blocks blocks, each at a uniformly
/// chosen existing vertex; a block's length is uniform in 2..max_cycle_len
/// (2 = bridge, otherwise a cycle of that length). Same mt19937_64 stream
/// convention as random_split_graph.
Graph random_cactus(std::uint64_t seed, int n_blocks, int max_cycle_len);

/// Deterministic stream helper shared by the generators. Draws are defined
/// in terms of raw mt19937_64 output, so they are identical across standard
/// libraries.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [lo, hi] by rejection sampling.
  int between(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace encov

namespace encov {

/// (m, n) when g is W_{m,n} = C_n joined with m isolated vertices
/// (n >= 3, m >= 1), checked by trying each vertex as a hub.
std::optional<std::pair<int, int>> recognize_generalized_wheel(const Graph& g);

/// n when g is K_n x K_2 with n >= 2.
std::optional<int> recognize_complete_prism(const Graph& g);

}  // namespace encov
