#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "encov/graph.hpp"

namespace encov {

enum class ClassTag {
  bipartite,
  tree,
  forest,
  cycle,
  path,
  complete,
  star,
  complete_bipartite,
  block_graph,
  cactus,
  cycle_clique,
  split,
  threshold,
  disjoint_cycles,
};

inline constexpr int kClassTagCount = 14;

std::string_view to_string(ClassTag tag);
std::optional<ClassTag> parse_class_tag(std::string_view name);

/// Two color classes; every edge crosses.
struct Bipartition {
  VertexSet side0;
  VertexSet side1;
};

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

/// A triangle block is both a cycle and a clique, so both flags may be set.
struct BlockKind {
  VertexSet vertices;
  bool is_cycle = false;
  bool is_clique = false;
};

/// Creation order: vertices in the order they were added, each either
/// isolated (false) or dominating (true) at the time of addition.
struct CreationSequence {
  std::vector<std::pair<Vertex, bool>> steps;
};

using WitnessData =
    std::variant<std::monostate, Bipartition, SplitPartition, std::vector<BlockKind>, CreationSequence>;

struct ClassWitness {
  ClassTag tag;
  WitnessData witness;
};

/// Every tag that applies to g, in enum order, each with a witness that
/// validate_witness() re-checks from the definition.
std::vector<ClassWitness> classify(const Graph& g);

/// Tag membership as a bit set indexed by ClassTag.
using TagMask = unsigned;
TagMask class_tags(const Graph& g);
inline bool has_tag(TagMask mask, ClassTag tag) { return (mask >> static_cast<int>(tag)) & 1U; }
std::vector<ClassTag> tag_list(TagMask mask);

bool validate_witness(const Graph& g, const ClassWitness& w);

std::optional<Bipartition> bipartition(const Graph& g);
std::vector<BlockKind> block_kinds(const Graph& g);

/// Hammer-Simeone degree-sequence test.
bool is_split(const Graph& g);

/// Clique/independent partition with the largest clique part; ties go to
/// the lexicographically smallest clique part. Throws Error{not_split}.
SplitPartition split_partition(const Graph& g);

/// Elimination by repeatedly removing an isolated or dominating vertex
/// (lowest index first, isolated preferred); the witness lists additions in
/// reverse elimination order.
std::optional<CreationSequence> threshold_sequence(const Graph& g);

/// True iff the minimum vertex cover has exactly two vertices.
bool is_tau2_structure(const Graph& g);

}  // namespace encov
