#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tokgraph/graph.hpp"
#include "tokgraph/token_graph.hpp"

namespace tokgraph {

/// Slide the token on `from` to the free neighbour `to`.
struct TokenMove {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const TokenMove&, const TokenMove&) = default;
};

/// A run of moves written "a0 -> a1 -> ... -> am": one token slides along the
/// vertex chain. A chain of length 1 contributes no moves.
using MoveChain = std::vector<Vertex>;

class PathError : public std::invalid_argument {
 public:
  enum class Kind {
    kNotAPath,
    kInadmissible,
    kRepeatedConfig,
    kPrecondition,
    kEndpointMismatch,
  };

  PathError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A simple path in F_k(G), stored as a start config plus admissible moves.
/// Construction replays every move against the base graph and rejects
/// inadmissible moves and repeated configs.
class TokenPath {
 public:
  TokenPath(const Graph& g, TokenConfig start, std::vector<TokenMove> moves);

  TokenConfig start() const noexcept { return start_; }
  TokenConfig end() const noexcept { return end_; }
  const std::vector<TokenMove>& moves() const noexcept { return moves_; }
  std::size_t length() const noexcept { return moves_.size(); }

  /// A_0 .. A_m.
  std::vector<TokenConfig> configs() const;
  /// A_1 .. A_{m-1}.
  std::vector<TokenConfig> inner_configs() const;

  /// Same path walked from end() to start().
  TokenPath reversed(const Graph& g) const;
  /// Image under psi in F_{n-k}: every move u->v becomes v->u.
  TokenPath complemented(const Graph& g) const;

  friend bool operator==(const TokenPath& a, const TokenPath& b) {
    return a.start_ == b.start_ && a.moves_ == b.moves_;
  }

 private:
  TokenConfig start_;
  TokenConfig end_;
  std::vector<TokenMove> moves_;
};

std::vector<TokenMove> chain_moves(std::span<const Vertex> chain);
std::vector<TokenMove> chain_moves(std::span<const MoveChain> chains);

/// Type-1 path induced by sliding the token on p.front() along p.
TokenPath lift_path(const Graph& g, std::span<const Vertex> p, TokenConfig a);

/// Semicolon concatenation "c1; c2; ..." of move chains started at `start`.
TokenPath concat(const Graph& g, TokenConfig start, std::span<const MoveChain> chains);
TokenPath concat(const Graph& g, TokenConfig start, std::initializer_list<MoveChain> chains);

/// "u -> v; inner; v -> u" with v as the distractor. Requires u in A and B,
/// v outside A and B, uv an edge, and u in I, v not in I for every inner
/// config I of the path induced by `inner`.
TokenPath distractor_wrap(const Graph& g, std::span<const TokenMove> inner, Vertex u, Vertex v,
                          TokenConfig a);

/// q = k - |intersection of all configs on p|.
int path_type(const TokenPath& p);

struct DisjointnessReport {
  bool disjoint = true;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
  std::optional<TokenConfig> shared_config;
};

/// Throws PathError(kEndpointMismatch) unless all paths share start and end.
DisjointnessReport pairwise_internally_disjoint(std::span<const TokenPath> paths);

std::string to_string(const TokenPath& p);

}  // namespace tokgraph
