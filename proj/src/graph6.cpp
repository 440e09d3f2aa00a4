#include "tokgraph/graph6.hpp"

#include <fstream>
#include <istream>

namespace tokgraph {

namespace {

constexpr int kOffset = 63;

const char* kind_name(Graph6Error::Kind kind) {
  switch (kind) {
    case Graph6Error::Kind::kTruncated: return "truncated";
    case Graph6Error::Kind::kBadHeader: return "bad header";
    case Graph6Error::Kind::kByteOutOfRange: return "byte out of range";
    case Graph6Error::Kind::kTrailingData: return "trailing data";
    case Graph6Error::Kind::kOrderTooLarge: return "order too large";
  }
  return "?";
}

}  // namespace

Graph6Error::Graph6Error(Kind kind, std::size_t offset, const std::string& what)
    : std::runtime_error(std::string("graph6 ") + kind_name(kind) + " at byte " +
                         std::to_string(offset) + ": " + what),
      kind_(kind),
      offset_(offset) {}

Graph parse_graph6(std::string_view text) {
  using Kind = Graph6Error::Kind;
  if (text.empty()) throw Graph6Error(Kind::kTruncated, 0, "empty record");

  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) {
    throw Graph6Error(Kind::kOrderTooLarge, 0, "multi-byte orders (n > 62) are not supported");
  }
  if (head < kOffset || head > 126) {
    throw Graph6Error(Kind::kBadHeader, 0, "order byte " + std::to_string(head));
  }
  const int n = head - kOffset;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) {
    throw Graph6Error(Kind::kTruncated, text.size(),
                      "expected " + std::to_string(body) + " adjacency bytes");
  }
  if (text.size() > 1 + body) {
    throw Graph6Error(Kind::kTrailingData, 1 + body, "record longer than its order implies");
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const std::size_t pos = 1 + bit / 6;
      const int byte = static_cast<unsigned char>(text[pos]);
      if (byte < kOffset || byte > 126) {
        throw Graph6Error(Kind::kByteOutOfRange, pos, "byte value " + std::to_string(byte));
      }
      if (((byte - kOffset) >> (5 - bit % 6)) & 1) edges.push_back({u, v});
    }
  }
  // Padding bytes past the last adjacency bit still have to be legal.
  for (std::size_t pos = 1 + bits / 6; pos < text.size(); ++pos) {
    const int byte = static_cast<unsigned char>(text[pos]);
    if (byte < kOffset || byte > 126) {
      throw Graph6Error(Kind::kByteOutOfRange, pos, "byte value " + std::to_string(byte));
    }
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Graph6Error(Graph6Error::Kind::kOrderTooLarge, 0,
                      "order " + std::to_string(n) + " exceeds " + std::to_string(kGraph6MaxOrder));
  }
  std::string out(1, static_cast<char>(n + kOffset));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::string_view record = line;
    if (record.starts_with(">>graph6<<")) record.remove_prefix(10);
    if (record.empty()) continue;
    out.push_back(parse_graph6(record));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in);
}

}  // namespace tokgraph
