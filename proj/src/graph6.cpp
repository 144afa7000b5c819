#include "encov/graph6.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "encov/error.hpp"

namespace encov {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(Errc::malformed_graph6, "malformed graph6: " + why);
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c);
  if (value < 63 || value > 126) malformed("byte " + std::to_string(value) + " outside 63..126");
  return value - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) malformed("empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) malformed("truncated size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) malformed("non-canonical size field");
    pos = 4;
  } else {
    if (text.size() < 8) malformed("truncated size field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    if (n <= kGraph6MaxOrder) malformed("non-canonical size field");
    throw Error(Errc::too_large, "graph6 order " + std::to_string(n) + " not supported");
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    malformed("expected " + std::to_string(bytes) + " data bytes, found " +
              std::to_string(text.size() - pos));
  }

  EdgeSet edges;
  std::size_t k = 0;
  int column = 1;
  int row = 0;
  for (std::size_t b = 0; b < bytes; ++b) {
    const int value = sextet(text[pos + b]);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool bit = (value >> shift) & 1;
      if (k >= bits) {
        if (bit) malformed("nonzero padding bits");
        continue;
      }
      if (bit) edges.push_back({row, column});
      if (++row == column) {
        row = 0;
        ++column;
      }
    }
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Error(Errc::too_large, "graph6 encoding limited to " + std::to_string(kGraph6MaxOrder) +
                                     " vertices");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex column = 1; column < n; ++column) {
    for (Vertex row = 0; row < column; ++row) {
      acc = (acc << 1) | (g.adjacent(row, column) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return read_graph6_stream(in);
}

Graph parse_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(Errc::malformed_edge_list, "edge list must start with \"n m\"");
  }
  EdgeSet edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw Error(Errc::malformed_edge_list, "expected " + std::to_string(m) + " edges, read " +
                                                 std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::index_out_of_range, "edge (" + std::to_string(u) + "," +
                                                std::to_string(v) + ") outside 0.." +
                                                std::to_string(n - 1));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string rest;
  if (in >> rest) throw Error(Errc::malformed_edge_list, "trailing data after edge list");
  return build_graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace encov
