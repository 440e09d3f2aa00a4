#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tokgraph/graph.hpp"

namespace tokgraph {

class TokenError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A k-subset of base vertices: one vertex of F_k(G). Stored as a bitmask,
/// so base graphs are limited to 64 vertices.
class TokenConfig {
 public:
  TokenConfig() = default;
  static TokenConfig from_mask(std::uint64_t mask) { return TokenConfig(mask); }
  /// Throws TokenError on repeated or out-of-range members.
  static TokenConfig from_members(std::span<const Vertex> members);
  static TokenConfig from_members(std::initializer_list<Vertex> members) {
    return from_members(std::span<const Vertex>(members.begin(), members.size()));
  }

  std::uint64_t mask() const noexcept { return mask_; }
  int size() const noexcept { return std::popcount(mask_); }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < 64 && ((mask_ >> v) & 1U);
  }
  /// Members in ascending order.
  std::vector<Vertex> members() const;

  /// Result of sliding the token on `from` to `to`; no admissibility check.
  TokenConfig moved(Vertex from, Vertex to) const {
    return TokenConfig((mask_ & ~(std::uint64_t{1} << from)) | (std::uint64_t{1} << to));
  }

  friend bool operator==(TokenConfig a, TokenConfig b) = default;

  /// Lexicographic order of the sorted member lists (for equal sizes).
  friend bool operator<(TokenConfig a, TokenConfig b) {
    std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    if (a.size() != b.size()) return a.size() < b.size();
    return (a.mask_ & (diff & -diff)) != 0;
  }

 private:
  explicit TokenConfig(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

std::string to_string(TokenConfig c);

/// Throws TokenError unless 1 <= |c| <= n-1 and every member is a vertex of g.
void require_valid_config(const Graph& g, TokenConfig c);

/// Explicit F_k(G). Vertex i of graph() is config(i); configs are sorted
/// lexicographically.
class TokenGraph {
 public:
  /// Materialization guard: C(n, k) above this is refused.
  static constexpr std::uint64_t kMaxVertices = 500000;

  TokenGraph(const Graph& base, int k);

  const Graph& base() const noexcept { return base_; }
  int k() const noexcept { return k_; }
  const Graph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return configs_.size(); }
  const std::vector<TokenConfig>& configs() const noexcept { return configs_; }
  TokenConfig config(int index) const { return configs_.at(static_cast<std::size_t>(index)); }
  /// -1 when `c` is not a vertex of this token graph.
  int index_of(TokenConfig c) const;

 private:
  Graph base_;
  int k_;
  std::vector<TokenConfig> configs_;
  std::unordered_map<std::uint64_t, int> index_;
  Graph graph_;
};

class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

std::uint64_t binomial(int n, int k);

TokenGraph build_token_graph(const Graph& g, int k);

/// Number of base edges with exactly one end in `a`; equals deg of `a` in F_k.
int token_degree(const Graph& g, TokenConfig a);

/// delta(F_k(g)) by direct count over all k-subsets; F_k is not built.
int min_token_degree(const Graph& g, int k);

/// psi(A) = V \ A, an isomorphism F_k(G) -> F_{n-k}(G).
TokenConfig complement_iso(TokenConfig a, int n);

/// Classification of a pair at distance two in F_k(G).
struct Case1Pair {
  Vertex x;  // X \ Y
  Vertex y;  // Y \ X
  Vertex v;  // common neighbour; smallest index when there are several
};

struct Case2Pair {
  Vertex x1, y1, x2, y2;  // x1y1, x2y2 independent edges; X\Y = {x1,x2}
};

using Distance2Class = std::variant<Case1Pair, Case2Pair>;

class ClassificationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ClassificationError unless d_{F_k(g)}(x_cfg, y_cfg) == 2.
Distance2Class classify_distance2(const Graph& g, TokenConfig x_cfg, TokenConfig y_cfg);

/// Enumerates all k-subsets of {0..n-1} as masks in lexicographic order.
std::vector<TokenConfig> all_configs(int n, int k);

}  // namespace tokgraph
