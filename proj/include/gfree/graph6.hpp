#pragma once

#include <string>
#include <string_view>

#include "gfree/graph.hpp"

namespace gfree {

// graph6 short form: header byte n+63, then the upper adjacency triangle in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
// 6-bit groups, each group + 63, zero-padded to a multiple of 6.

inline Graph parse_graph6(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) throw std::runtime_error("graph6: empty input");
  size_t end = text.find_last_not_of(" \t\r\n");
  std::string_view s = text.substr(begin, end - begin + 1);

  auto fail = [&](const std::string& what, size_t offset) {
    throw std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset));
  };
  if (s[0] == '~') fail("long-form size (n > 62) unsupported", 0);
  if (s[0] < 63 || s[0] > 126) fail("header byte out of range", 0);
  int n = s[0] - 63;
  Graph g(n);

  int nbits = n * (n - 1) / 2;
  size_t need = 1 + static_cast<size_t>((nbits + 5) / 6);
  if (s.size() < need) fail("truncated bit payload", s.size());
  if (s.size() > need) fail("trailing data", need);

  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      size_t at = 1 + static_cast<size_t>(bit / 6);
      char c = s[at];
      if (c < 63 || c > 126) fail("payload byte out of range", at);
      int group = c - 63;
      if ((group >> (5 - bit % 6)) & 1) g.add_edge(row, col);
    }
  }
  return g;
}

inline std::string write_graph6(const Graph& g) {
  if (g.n > max_vertices) throw std::invalid_argument("graph6: order above 62 unsupported");
  std::string out(1, static_cast<char>(g.n + 63));
  int group = 0, fill = 0;
  for (int col = 1; col < g.n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = group << 1 | (g.has_edge(row, col) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = fill = 0;
      }
    }
  }
  if (fill) out.push_back(static_cast<char>((group << (6 - fill)) + 63));
  return out;
}

}  // namespace gfree
