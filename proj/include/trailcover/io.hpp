#pragma once

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trailcover/graph.hpp"
#include "trailcover/subgraph.hpp"
#include "trailcover/trail.hpp"

namespace trailcover {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Splits the input into significant lines: blank lines and lines whose first
// non-space character is '#' are dropped.
inline std::vector<std::string> significant_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

inline long long parse_int(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    long long value = std::stoll(token, &used);
    if (used != token.size()) throw ParseError("bad " + what + ": " + token);
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad " + what + ": " + token);
  }
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace detail

// Graph text format:
//   p <n> <m>
//   e <u> <v>     (exactly m lines; edge id = 0-based order)
// '#' begins a comment line.
inline Graph parse_graph(std::istream& in) {
  const auto lines = detail::significant_lines(in);
  if (lines.empty()) throw ParseError("empty graph file");
  auto header = detail::tokens_of(lines[0]);
  if (header.size() != 3 || header[0] != "p")
    throw ParseError("expected header 'p <n> <m>', got: " + lines[0]);
  const long long n = detail::parse_int(header[1], "vertex count");
  const long long m = detail::parse_int(header[2], "edge count");
  if (n < 0 || m < 0) throw ParseError("negative count in header");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(lines.size() - 1));
  Graph g(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = detail::tokens_of(lines[i]);
    if (toks.size() != 3 || toks[0] != "e")
      throw ParseError("expected 'e <u> <v>', got: " + lines[i]);
    const long long u = detail::parse_int(toks[1], "vertex id");
    const long long v = detail::parse_int(toks[2], "vertex id");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge endpoint out of range: " + lines[i]);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

inline Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

// Subgraph text format: lines 'v <vertex_id>' and 's <edge_id>' in any
// order. Endpoints of listed edges are implicitly included.
inline Subgraph parse_subgraph(std::istream& in, const Graph& host) {
  std::vector<int> vertices;
  std::vector<int> edge_ids;
  for (const auto& line : detail::significant_lines(in)) {
    auto toks = detail::tokens_of(line);
    if (toks.size() != 2 || (toks[0] != "v" && toks[0] != "s"))
      throw ParseError("expected 'v <id>' or 's <id>', got: " + line);
    const long long id = detail::parse_int(toks[1], "id");
    if (toks[0] == "v") {
      if (id < 0 || id >= host.vertex_count())
        throw ParseError("subgraph vertex out of range: " + line);
      vertices.push_back(static_cast<int>(id));
    } else {
      if (id < 0 || id >= host.edge_count())
        throw ParseError("subgraph edge out of range: " + line);
      edge_ids.push_back(static_cast<int>(id));
      const auto [u, v] = host.endpoints(static_cast<int>(id));
      vertices.push_back(u);
      vertices.push_back(v);
    }
  }
  return subgraph_from(host, std::move(vertices), std::move(edge_ids));
}

inline Subgraph parse_subgraph_text(const std::string& text, const Graph& host) {
  std::istringstream in(text);
  return parse_subgraph(in, host);
}

inline std::string serialize_subgraph(const Subgraph& h) {
  std::ostringstream out;
  for (int v : h.vertices()) out << "v " << v << '\n';
  for (int e : h.edge_ids()) out << "s " << e << '\n';
  return out.str();
}

// Trail text format:
//   t <closed|open> <start>
//   e <edge_id>     (one line per step)
// The tag is informational; verify_trail checks the actual shape against the
// requested mode, so out-of-range ids are kept for it to diagnose.
inline Trail parse_trail(std::istream& in, const Graph& host) {
  const auto lines = detail::significant_lines(in);
  if (lines.empty()) throw ParseError("empty trail file");
  auto header = detail::tokens_of(lines[0]);
  if (header.size() != 3 || header[0] != "t" ||
      (header[1] != "closed" && header[1] != "open"))
    throw ParseError("expected header 't <closed|open> <start>', got: " +
                     lines[0]);
  Trail t;
  t.host = &host;
  t.start = static_cast<int>(detail::parse_int(header[2], "start vertex"));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = detail::tokens_of(lines[i]);
    if (toks.size() != 2 || toks[0] != "e")
      throw ParseError("expected 'e <edge_id>', got: " + lines[i]);
    t.steps.push_back(
        static_cast<int>(detail::parse_int(toks[1], "edge id")));
  }
  return t;
}

inline Trail parse_trail_text(const std::string& text, const Graph& host) {
  std::istringstream in(text);
  return parse_trail(in, host);
}

inline std::string serialize_trail(const Trail& t) {
  auto end = t.end_vertex();
  if (!end) throw std::invalid_argument("cannot serialize: not a walk");
  std::ostringstream out;
  out << "t " << (*end == t.start ? "closed" : "open") << ' ' << t.start
      << '\n';
  for (int e : t.steps) out << "e " << e << '\n';
  return out.str();
}

inline std::string to_string(Mode mode) {
  return mode == Mode::closed ? "closed" : "open";
}

inline Mode parse_mode(const std::string& text) {
  if (text == "closed") return Mode::closed;
  if (text == "open") return Mode::open;
  throw ParseError("mode must be 'closed' or 'open', got: " + text);
}

}  // namespace trailcover
