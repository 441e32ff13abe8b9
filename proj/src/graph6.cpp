#include "umrg/graph6.hpp"

#include <istream>
#include <ostream>

namespace umrg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.node_count();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside [63, 126]");
  const int n = text[0] - 63;
  if (n > 62) throw Graph6Error("graph6: only the single-byte size form (n <= 62) is supported");
  if (n > kMaxNodes) throw Graph6Error("graph6: graphs above 32 nodes are not supported");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) throw Graph6Error("graph6: wrong length for n=" + std::to_string(n));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace umrg
