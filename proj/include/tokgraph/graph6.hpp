#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tokgraph/graph.hpp"

namespace tokgraph {

/// Parse failure; `offset()` is the byte index in the record that broke.
class Graph6Error : public std::runtime_error {
 public:
  enum class Kind { kTruncated, kBadHeader, kByteOutOfRange, kTrailingData, kOrderTooLarge };

  Graph6Error(Kind kind, std::size_t offset, const std::string& what);

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// Largest order handled by the single-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// One graph per line; blank lines and a leading ">>graph6<<" marker are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace tokgraph
