#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kef/errors.hpp"
#include "kef/graph.hpp"

namespace kef {

enum class GraphFormat { edgelist, graph6 };

inline GraphFormat graph_format_from_string(std::string_view s) {
  if (s == "edgelist") return GraphFormat::edgelist;
  if (s == "graph6") return GraphFormat::graph6;
  throw InputError("unknown graph format '" + std::string(s) + "'");
}

namespace detail {

/// Splits into whitespace tokens, dropping blank lines and '#' comments.
/// Each token carries its 1-based line number for error messages.
struct Token {
  std::string text;
  int line = 0;
};

inline std::vector<Token> edge_list_tokens(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back({w, lineno});
  }
  return out;
}

inline long long parse_count(const Token& t, const char* what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size() || value < 0) {
    throw InputError("line " + std::to_string(t.line) + ": expected " + what + ", got '" + t.text + "'");
  }
  return value;
}

}  // namespace detail

/// Reads every graph in an edge-list stream: a header `n m` followed by m
/// lines `u v`, repeated. Throws InputError if the stream holds no graph.
inline std::vector<Graph> read_edge_lists(std::istream& in) {
  const std::vector<detail::Token> tokens = detail::edge_list_tokens(in);
  if (tokens.empty()) throw InputError("edge list is empty");
  std::vector<Graph> graphs;
  std::size_t i = 0;
  auto take = [&](const char* what) -> long long {
    if (i >= tokens.size()) throw InputError(std::string("unexpected end of edge list, expected ") + what);
    return detail::parse_count(tokens[i++], what);
  };
  while (i < tokens.size()) {
    const long long n = take("vertex count");
    const long long m = take("edge count");
    if (n > kMaxVertices) {
      throw CapacityError("graph order " + std::to_string(n) + " exceeds the limit of " +
                          std::to_string(kMaxVertices));
    }
    if (m > n * (n - 1) / 2) throw InputError("edge count " + std::to_string(m) + " too large for n=" + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
      const long long u = take("edge endpoint");
      const long long v = take("edge endpoint");
      if (u >= n || v >= n) {
        throw InputError("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range for n=" +
                         std::to_string(n));
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    graphs.emplace_back(static_cast<int>(n), edges);
  }
  return graphs;
}

/// Reads exactly one graph.
inline Graph read_edge_list(std::istream& in) {
  std::vector<Graph> all = read_edge_lists(in);
  if (all.size() != 1) throw InputError("expected one graph, found " + std::to_string(all.size()));
  return std::move(all.front());
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is accepted).
/// digraph6 (`&`), sparse6 (`:`) and incremental sparse6 (`;`) are rejected.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");
  if (text.front() == '&') throw InputError("graph6: directed (digraph6) input is not supported");
  if (text.front() == ':' || text.front() == ';') throw InputError("graph6: sparse6 input is not supported");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw InputError("graph6: byte out of range");
  }

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw InputError("graph6: truncated order");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  } else {
    throw InputError("graph6: order too large");
  }
  if (n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " exceeds the limit of " + std::to_string(kMaxVertices));
  }

  const std::int64_t pairs = n * (n - 1) / 2;
  const std::int64_t need = (pairs + 5) / 6;
  if (static_cast<std::int64_t>(text.size() - pos) != need) {
    throw InputError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                     std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if (((byte >> (5 - k % 6)) & 1) != 0) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

/// Reads every graph in a graph6 stream, one per non-blank line.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_graph6(line));
  }
  if (out.empty()) throw InputError("graph6 input is empty");
  return out;
}

inline std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  return format == GraphFormat::graph6 ? read_graph6_lines(in) : read_edge_lists(in);
}

inline std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? write_graph6(g) + "\n" : write_edge_list(g);
}

}  // namespace kef
