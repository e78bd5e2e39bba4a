#pragma once

// graph6 and plain edge-list text formats.
//
// graph6 follows the format description shipped with nauty: N(n) followed by
// the upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six
// bits per printable byte (value + 63), big-endian, zero padded.

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "folkman/graph.hpp"

namespace folkman {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void put_graph6_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw FormatError("graph6: order above 258047 is not supported");
  }
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  detail::put_graph6_size(out, n);
  int acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw FormatError("graph6: byte outside the printable range 63..126");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) throw FormatError("graph6: 8-byte size header is not supported");
    if (text.size() < 4) throw FormatError("graph6: truncated size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    if (n <= 62) throw FormatError("graph6: non-canonical size header");
    pos = 4;
  }
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes) throw FormatError("graph6: truncated bit payload");
  if (text.size() - pos > nbytes) throw FormatError("graph6: trailing bytes after payload");
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const int last = text[pos + nbytes - 1] - 63;
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw FormatError("graph6: nonzero padding bits");
  }
  return g;
}

/// Edge-list text: an optional "# vertices N" line, then "u v" per line,
/// 0-indexed.  Other '#' lines are comments.  Without the header the order
/// is one more than the largest endpoint.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# vertices " << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline Graph from_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t max_vertex = 0;
  bool any = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      std::size_t n = 0;
      if (ls >> key && key == "vertices" && ls >> n) declared = n;
      continue;
    }
    std::size_t u = 0;
    std::size_t v = 0;
    try {
      std::size_t used = 0;
      u = std::stoull(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw FormatError("edge list: bad vertex on line " + std::to_string(lineno));
    }
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) throw FormatError("edge list: expected \"u v\" on line " + std::to_string(lineno));
    if (u == v) throw FormatError("edge list: loop on line " + std::to_string(lineno));
    edges.push_back({std::min(u, v), std::max(u, v)});
    max_vertex = std::max({max_vertex, u, v});
    any = true;
  }
  const std::size_t n = declared ? *declared : (any ? max_vertex + 1 : 0);
  if (any && max_vertex >= n) throw FormatError("edge list: vertex exceeds declared order");
  return Graph::from_edges(n, edges);
}

inline Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_edge_list(in);
}

}  // namespace folkman
