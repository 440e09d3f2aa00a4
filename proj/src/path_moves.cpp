#include "tokgraph/path_moves.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tokgraph {

namespace {

std::string move_text(const TokenMove& m) {
  return std::to_string(m.from) + "->" + std::to_string(m.to);
}

}  // namespace

TokenPath::TokenPath(const Graph& g, TokenConfig start, std::vector<TokenMove> moves)
    : start_(start), end_(start), moves_(std::move(moves)) {
  require_valid_config(g, start);
  std::unordered_set<std::uint64_t> seen{start.mask()};
  TokenConfig current = start;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    const TokenMove& m = moves_[i];
    if (m.from < 0 || m.to < 0 || m.from >= g.order() || m.to >= g.order()) {
      throw PathError(PathError::Kind::kInadmissible,
                      "move " + std::to_string(i) + " (" + move_text(m) + ") leaves the graph");
    }
    if (!current.contains(m.from) || current.contains(m.to) || !g.adjacent(m.from, m.to)) {
      throw PathError(PathError::Kind::kInadmissible, "move " + std::to_string(i) + " (" +
                                                          move_text(m) + ") is not admissible at " +
                                                          to_string(current));
    }
    current = current.moved(m.from, m.to);
    if (!seen.insert(current.mask()).second) {
      throw PathError(PathError::Kind::kRepeatedConfig, "move " + std::to_string(i) + " (" +
                                                            move_text(m) + ") revisits " +
                                                            to_string(current));
    }
  }
  end_ = current;
}

std::vector<TokenConfig> TokenPath::configs() const {
  std::vector<TokenConfig> out;
  out.reserve(moves_.size() + 1);
  out.push_back(start_);
  for (const TokenMove& m : moves_) out.push_back(out.back().moved(m.from, m.to));
  return out;
}

std::vector<TokenConfig> TokenPath::inner_configs() const {
  std::vector<TokenConfig> all = configs();
  if (all.size() <= 2) return {};
  return {all.begin() + 1, all.end() - 1};
}

TokenPath TokenPath::reversed(const Graph& g) const {
  std::vector<TokenMove> back;
  back.reserve(moves_.size());
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) back.push_back({it->to, it->from});
  return TokenPath(g, end_, std::move(back));
}

TokenPath TokenPath::complemented(const Graph& g) const {
  std::vector<TokenMove> flipped;
  flipped.reserve(moves_.size());
  for (const TokenMove& m : moves_) flipped.push_back({m.to, m.from});
  return TokenPath(g, complement_iso(start_, g.order()), std::move(flipped));
}

std::vector<TokenMove> chain_moves(std::span<const Vertex> chain) {
  std::vector<TokenMove> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.push_back({chain[i], chain[i + 1]});
  return out;
}

std::vector<TokenMove> chain_moves(std::span<const MoveChain> chains) {
  std::vector<TokenMove> out;
  for (const MoveChain& c : chains) {
    auto part = chain_moves(std::span<const Vertex>(c));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

TokenPath lift_path(const Graph& g, std::span<const Vertex> p, TokenConfig a) {
  if (p.empty()) throw PathError(PathError::Kind::kNotAPath, "empty vertex path");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.order()) {
      throw PathError(PathError::Kind::kNotAPath, "vertex out of range in path");
    }
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) {
      throw PathError(PathError::Kind::kNotAPath, std::to_string(p[i - 1]) + " and " +
                                                      std::to_string(p[i]) + " are not adjacent");
    }
  }
  std::vector<Vertex> sorted(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PathError(PathError::Kind::kNotAPath, "vertex repeated in path");
  }
  if (!a.contains(p.front())) {
    throw PathError(PathError::Kind::kPrecondition, "path start carries no token");
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (a.contains(p[i])) {
      throw PathError(PathError::Kind::kInadmissible,
                      "vertex " + std::to_string(p[i]) + " on the path is occupied");
    }
  }
  return TokenPath(g, a, chain_moves(p));
}

TokenPath concat(const Graph& g, TokenConfig start, std::span<const MoveChain> chains) {
  return TokenPath(g, start, chain_moves(chains));
}

TokenPath concat(const Graph& g, TokenConfig start, std::initializer_list<MoveChain> chains) {
  return concat(g, start, std::span<const MoveChain>(chains.begin(), chains.size()));
}

TokenPath distractor_wrap(const Graph& g, std::span<const TokenMove> inner, Vertex u, Vertex v,
                          TokenConfig a) {
  using Kind = PathError::Kind;
  TokenPath base(g, a, std::vector<TokenMove>(inner.begin(), inner.end()));
  const TokenConfig b = base.end();
  if (!a.contains(u) || !b.contains(u)) {
    throw PathError(Kind::kPrecondition, "distractor source u must lie in A and B");
  }
  if (a.contains(v) || b.contains(v)) {
    throw PathError(Kind::kPrecondition, "distractor v must lie outside A and B");
  }
  if (!g.adjacent(u, v)) throw PathError(Kind::kPrecondition, "uv is not an edge");
  for (TokenConfig inner_cfg : base.inner_configs()) {
    if (!inner_cfg.contains(u) || inner_cfg.contains(v)) {
      throw PathError(Kind::kPrecondition,
                      "inner config " + to_string(inner_cfg) + " must hold u and not v");
    }
  }
  std::vector<TokenMove> moves;
  moves.reserve(inner.size() + 2);
  moves.push_back({u, v});
  moves.insert(moves.end(), inner.begin(), inner.end());
  moves.push_back({v, u});
  return TokenPath(g, a, std::move(moves));
}

int path_type(const TokenPath& p) {
  std::uint64_t common = p.start().mask();
  for (TokenConfig c : p.configs()) common &= c.mask();
  return p.start().size() - std::popcount(common);
}

DisjointnessReport pairwise_internally_disjoint(std::span<const TokenPath> paths) {
  DisjointnessReport report;
  if (paths.empty()) return report;
  const TokenConfig x = paths.front().start();
  const TokenConfig y = paths.front().end();
  for (const TokenPath& p : paths) {
    if (p.start() != x || p.end() != y) {
      throw PathError(PathError::Kind::kEndpointMismatch,
                      "path " + to_string(p) + " does not join " + to_string(x) + " and " +
                          to_string(y));
    }
  }
  std::unordered_map<std::uint64_t, std::size_t> owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (TokenConfig c : paths[i].inner_configs()) {
      auto [it, inserted] = owner.emplace(c.mask(), i);
      if (!inserted) {
        report.disjoint = false;
        report.violating_pair = std::make_pair(it->second, i);
        report.shared_config = c;
        return report;
      }
    }
  }
  return report;
}

std::string to_string(const TokenPath& p) {
  std::ostringstream out;
  out << to_string(p.start());
  for (const TokenMove& m : p.moves()) out << " " << move_text(m);
  return out.str();
}

}  // namespace tokgraph
