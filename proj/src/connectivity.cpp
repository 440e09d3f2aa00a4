#include "tokgraph/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>

namespace tokgraph {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// Dinic on a small directed network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  int add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[from], cap, cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0, 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
    return static_cast<int>(arcs_.size()) - 2;
  }

  int max_flow(int s, int t, int limit = kInf) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      iter_ = head_;
      while (flow < limit) {
        int pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  void reset() {
    for (Arc& a : arcs_) a.cap = a.initial;
  }

  // Nodes reachable from s in the residual network.
  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e = head_[x]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
          seen[arcs_[e].to] = true;
          stack.push_back(arcs_[e].to);
        }
      }
    }
    return seen;
  }

  int flow_on(int arc) const { return arcs_[arc].initial - arcs_[arc].cap; }
  int arc_to(int arc) const { return arcs_[arc].to; }
  int first_arc(int node) const { return head_[node]; }
  int next_arc(int arc) const { return arcs_[arc].next; }
  bool is_forward(int arc) const { return arc % 2 == 0; }
  void consume(int arc) { arcs_[arc].cap += 1; }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
    int initial;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int e = head_[x]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
          level_[arcs_[e].to] = level_[x] + 1;
          q.push(arcs_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int x, int t, int f) {
    if (x == t) return f;
    for (int& e = iter_[x]; e != -1; e = arcs_[e].next) {
      Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] == level_[x] + 1) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          arcs_[e ^ 1].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// Vertex x becomes in-node 2x and out-node 2x+1 joined by a unit arc.
struct SplitNetwork {
  FlowNetwork net;
  explicit SplitNetwork(const Graph& g) : net(2 * g.order()) {
    for (Vertex x = 0; x < g.order(); ++x) net.add_arc(2 * x, 2 * x + 1, 1);
    // Edge arcs are uncapped so that every min cut is made of vertex arcs.
    for (const Edge& e : g.edges()) {
      net.add_arc(2 * e.u + 1, 2 * e.v, kInf);
      net.add_arc(2 * e.v + 1, 2 * e.u, kInf);
    }
  }
};

FlowNetwork edge_network(const Graph& g) {
  FlowNetwork net(g.order());
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net;
}

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return static_cast<long long>(g.size()) == n * (n - 1) / 2;
}

std::vector<Vertex> cut_from_residual(const Graph& g, const FlowNetwork& net, Vertex u) {
  std::vector<bool> seen = net.reachable(2 * u + 1);
  std::vector<Vertex> cut;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (seen[2 * x] && !seen[2 * x + 1]) cut.push_back(x);
  }
  return cut;
}

struct PairValue {
  int value = kInf;
  Vertex u = -1, v = -1;
};

}  // namespace

LocalConnectivity local_vertex_connectivity(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw ConnectivityError("vertex out of range");
  }
  if (u == v) throw ConnectivityError("endpoints are identical");
  if (g.adjacent(u, v)) throw ConnectivityError("endpoints are adjacent");

  SplitNetwork split(g);
  FlowNetwork& net = split.net;
  LocalConnectivity out;
  out.value = net.max_flow(2 * u + 1, 2 * v);
  out.cut = cut_from_residual(g, net, u);

  // Peel the flow into paths; each unit leaves u's out-node on its own arc.
  for (int p = 0; p < out.value; ++p) {
    std::vector<Vertex> path{u};
    int node = 2 * u + 1;
    while (node != 2 * v) {
      int next = -1;
      for (int e = net.first_arc(node); e != -1; e = net.next_arc(e)) {
        if (net.is_forward(e) && net.flow_on(e) > 0) {
          net.consume(e);
          next = net.arc_to(e);
          break;
        }
      }
      if (next < 0) throw std::logic_error("flow decomposition failed");
      node = next;
      if (node % 2 == 0) {
        // A flow cycle can bring the walk back; drop the loop.
        auto seen = std::find(path.begin(), path.end(), node / 2);
        if (seen != path.end()) path.erase(seen + 1, path.end());
        else path.push_back(node / 2);
      }
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

namespace {

PairValue min_local(const Graph& g, KappaStrategy strategy) {
  SplitNetwork split(g);
  PairValue best;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    std::vector<int> dist;
    if (strategy == KappaStrategy::kDistanceTwo) dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      if (strategy == KappaStrategy::kDistanceTwo && dist[v] != 2) continue;
      split.net.reset();
      int f = split.net.max_flow(2 * u + 1, 2 * v, best.value);
      if (f < best.value) best = {f, u, v};
    }
  }
  return best;
}

}  // namespace

int vertex_connectivity(const Graph& g, KappaStrategy strategy) {
  if (g.order() <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return g.order() - 1;
  return min_local(g, strategy).value;
}

int edge_connectivity(const Graph& g) {
  if (g.order() <= 1 || !is_connected(g)) return 0;
  FlowNetwork net = edge_network(g);
  int best = kInf;
  for (Vertex t = 1; t < g.order(); ++t) {
    net.reset();
    best = std::min(best, net.max_flow(0, t, best));
  }
  return best;
}

ConnectivityReport connectivity_report(const Graph& g, KappaStrategy strategy) {
  ConnectivityReport r;
  r.delta = g.order() == 0 ? 0 : g.min_degree();
  if (g.order() <= 1) return r;
  if (!is_connected(g)) {
    r.witness_cut = std::vector<Vertex>{};
    r.witness_edge_cut = std::vector<Edge>{};
    return r;
  }

  if (is_complete(g)) {
    r.kappa = g.order() - 1;
  } else {
    PairValue best = min_local(g, strategy);
    r.kappa = best.value;
    SplitNetwork split(g);
    split.net.max_flow(2 * best.u + 1, 2 * best.v);
    r.witness_cut = cut_from_residual(g, split.net, best.u);
  }

  FlowNetwork net = edge_network(g);
  int best = kInf;
  Vertex best_t = 1;
  for (Vertex t = 1; t < g.order(); ++t) {
    net.reset();
    int f = net.max_flow(0, t, best);
    if (f < best) {
      best = f;
      best_t = t;
    }
  }
  r.lambda = best;
  net.reset();
  net.max_flow(0, best_t);
  std::vector<bool> side = net.reachable(0);
  std::vector<Edge> cut;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) cut.push_back(e);
  }
  r.witness_edge_cut = std::move(cut);
  return r;
}

ConnectivityReport brute_force_connectivity(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw ConnectivityError("brute force limited to " + std::to_string(kBruteForceMaxOrder) +
                            " vertices");
  }
  ConnectivityReport r;
  r.delta = n == 0 ? 0 : g.min_degree();
  if (n <= 1) return r;

  std::vector<std::uint32_t> adj(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : g.neighbors(x)) adj[x] |= 1U << y;
  }
  const std::uint32_t full = (1U << n) - 1;
  auto connected_within = [&](std::uint32_t keep) {
    if (keep == 0) return true;
    std::uint32_t seen = keep & (~keep + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= keep & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == keep;
  };

  if (!connected_within(full)) {
    r.witness_cut = std::vector<Vertex>{};
    r.witness_edge_cut = std::vector<Edge>{};
    return r;
  }

  // Smallest removal leaving at least two vertices in a disconnected graph.
  r.kappa = n - 1;
  for (int size = 0; size <= n - 2 && r.kappa == n - 1; ++size) {
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (std::popcount(s) != size) continue;
      if (!connected_within(full & ~s)) {
        r.kappa = size;
        std::vector<Vertex> cut;
        for (std::uint32_t f = s; f; f &= f - 1) cut.push_back(std::countr_zero(f));
        r.witness_cut = std::move(cut);
        break;
      }
    }
  }

  // Min crossing edges over bipartitions with vertex 0 on the first side.
  int best = kInf;
  std::uint32_t best_side = 0;
  for (std::uint32_t s = 1; s < full; s += 2) {
    int crossing = 0;
    for (std::uint32_t f = s; f; f &= f - 1) {
      crossing += std::popcount(adj[std::countr_zero(f)] & ~s & full);
    }
    if (crossing < best) {
      best = crossing;
      best_side = s;
    }
  }
  r.lambda = best;
  std::vector<Edge> cut;
  for (const Edge& e : g.edges()) {
    if (((best_side >> e.u) & 1U) != ((best_side >> e.v) & 1U)) cut.push_back(e);
  }
  r.witness_edge_cut = std::move(cut);
  return r;
}

}  // namespace tokgraph
