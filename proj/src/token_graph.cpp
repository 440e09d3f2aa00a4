#include "tokgraph/token_graph.hpp"

#include <algorithm>
#include <sstream>

namespace tokgraph {

TokenConfig TokenConfig::from_members(std::span<const Vertex> members) {
  std::uint64_t mask = 0;
  for (Vertex v : members) {
    if (v < 0 || v >= 64) throw TokenError("token vertex out of range: " + std::to_string(v));
    std::uint64_t bit = std::uint64_t{1} << v;
    if (mask & bit) throw TokenError("repeated token vertex: " + std::to_string(v));
    mask |= bit;
  }
  return TokenConfig(mask);
}

std::vector<Vertex> TokenConfig::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string to_string(TokenConfig c) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (Vertex v : c.members()) {
    if (!first) out << ",";
    first = false;
    out << v;
  }
  out << "}";
  return out.str();
}

void require_valid_config(const Graph& g, TokenConfig c) {
  const int n = g.order();
  if (n > 64) throw TokenError("token configurations need a base graph of order <= 64");
  if (n < 64 && (c.mask() >> n) != 0) {
    throw TokenError("config " + to_string(c) + " uses vertices outside 0.." + std::to_string(n - 1));
  }
  if (c.size() < 1 || c.size() > n - 1) {
    throw TokenError("config size " + std::to_string(c.size()) + " outside 1.." +
                     std::to_string(n - 1));
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / i;
  return out;
}

std::vector<TokenConfig> all_configs(int n, int k) {
  std::vector<TokenConfig> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int v : idx) mask |= std::uint64_t{1} << v;
    out.push_back(TokenConfig::from_mask(mask));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

void require_k(const Graph& g, int k) {
  if (g.order() > 64) throw TokenError("token graphs need a base graph of order <= 64");
  if (k < 1 || k > g.order() - 1) {
    throw TokenError("k=" + std::to_string(k) + " outside 1.." + std::to_string(g.order() - 1));
  }
}

}  // namespace

TokenGraph::TokenGraph(const Graph& base, int k) : base_(base), k_(k) {
  require_k(base, k);
  if (binomial(base.order(), k) > kMaxVertices) {
    throw SizeGuardError("C(" + std::to_string(base.order()) + "," + std::to_string(k) +
                         ") exceeds the materialization guard of " +
                         std::to_string(kMaxVertices));
  }
  configs_ = all_configs(base.order(), k);
  index_.reserve(configs_.size());
  for (std::size_t i = 0; i < configs_.size(); ++i) {
    index_.emplace(configs_[i].mask(), static_cast<int>(i));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < configs_.size(); ++i) {
    const TokenConfig a = configs_[i];
    for (Vertex u : a.members()) {
      for (std::uint64_t free = base.neighbor_mask(u) & ~a.mask(); free != 0; free &= free - 1) {
        Vertex w = std::countr_zero(free);
        int j = index_.at(a.moved(u, w).mask());
        if (static_cast<std::size_t>(j) > i) edges.push_back({static_cast<Vertex>(i), j});
      }
    }
  }
  graph_ = Graph(static_cast<int>(configs_.size()), edges);
}

int TokenGraph::index_of(TokenConfig c) const {
  auto it = index_.find(c.mask());
  return it == index_.end() ? -1 : it->second;
}

TokenGraph build_token_graph(const Graph& g, int k) { return TokenGraph(g, k); }

int token_degree(const Graph& g, TokenConfig a) {
  require_valid_config(g, a);
  int degree = 0;
  for (std::uint64_t rest = a.mask(); rest != 0; rest &= rest - 1) {
    degree += std::popcount(g.neighbor_mask(std::countr_zero(rest)) & ~a.mask());
  }
  return degree;
}

int min_token_degree(const Graph& g, int k) {
  require_k(g, k);
  const int n = g.order();
  int best = -1;
  if (n > 63) throw TokenError("min_token_degree supports order <= 63");
  // Gosper's hack over all k-subsets of n bits.
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t set = (std::uint64_t{1} << k) - 1; set < limit;) {
    int d = token_degree(g, TokenConfig::from_mask(set));
    if (best < 0 || d < best) best = d;
    std::uint64_t low = set & -set;
    std::uint64_t ripple = set + low;
    set = ripple | (((ripple ^ set) >> 2) / low);
  }
  return best;
}

TokenConfig complement_iso(TokenConfig a, int n) {
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return TokenConfig::from_mask(all & ~a.mask());
}

Distance2Class classify_distance2(const Graph& g, TokenConfig x_cfg, TokenConfig y_cfg) {
  require_valid_config(g, x_cfg);
  require_valid_config(g, y_cfg);
  if (x_cfg.size() != y_cfg.size()) throw ClassificationError("configs of different sizes");
  const std::uint64_t only_x = x_cfg.mask() & ~y_cfg.mask();
  const std::uint64_t only_y = y_cfg.mask() & ~x_cfg.mask();
  const int diff = std::popcount(only_x);

  if (diff == 1) {
    Vertex x = std::countr_zero(only_x);
    Vertex y = std::countr_zero(only_y);
    if (g.adjacent(x, y)) {
      throw ClassificationError(to_string(x_cfg) + " and " + to_string(y_cfg) + " are adjacent");
    }
    std::uint64_t common = g.neighbor_mask(x) & g.neighbor_mask(y);
    if (common == 0) {
      throw ClassificationError(to_string(x_cfg) + " and " + to_string(y_cfg) +
                                " are at distance > 2");
    }
    return Case1Pair{x, y, std::countr_zero(common)};
  }

  if (diff == 2) {
    std::vector<Vertex> xs = TokenConfig::from_mask(only_x).members();
    std::vector<Vertex> ys = TokenConfig::from_mask(only_y).members();
    for (int pick = 0; pick < 2; ++pick) {
      Vertex y1 = ys[pick];
      Vertex y2 = ys[1 - pick];
      if (g.adjacent(xs[0], y1) && g.adjacent(xs[1], y2)) {
        return Case2Pair{xs[0], y1, xs[1], y2};
      }
    }
    throw ClassificationError(to_string(x_cfg) + " and " + to_string(y_cfg) +
                              " are at distance > 2");
  }

  throw ClassificationError(to_string(x_cfg) + " and " + to_string(y_cfg) +
                            (diff == 0 ? " coincide" : " are at distance > 2"));
}

}  // namespace tokgraph
