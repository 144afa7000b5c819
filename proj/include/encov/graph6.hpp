#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "encov/graph.hpp"

namespace encov {

inline constexpr int kGraph6MaxOrder = 258047;

/// Decodes one graph6 line (no trailing newline). Accepts an optional
/// ">>graph6<<" header, the one-byte size form (n <= 62) and both '~' forms.
/// Throws Error{malformed_graph6} on bad length, a byte outside 63..126, or
/// nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes g with the shortest size prefix. Throws Error{too_large} past
/// kGraph6MaxOrder vertices.
std::string emit_graph6(const Graph& g);

/// One graph per nonblank line. Errors carry the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

/// "n m" header followed by m lines "u v", 0-based.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string emit_edge_list(const Graph& g);

}  // namespace encov
