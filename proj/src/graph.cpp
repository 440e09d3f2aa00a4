#include "tokgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace tokgraph {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                       std::to_string(e.v));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw GraphError("duplicate edge");
    }
  }
  m_ = edges.size();
  if (n <= kMaskLimit) {
    masks_.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      for (Vertex w : adj_[v]) masks_[v] |= std::uint64_t{1} << w;
    }
  }
}

std::size_t Graph::check(Vertex v) const {
  if (v < 0 || v >= n_) throw GraphError("vertex out of range: " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  if (!masks_.empty()) return (masks_[u] >> v) & 1U;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  if (masks_.empty()) throw GraphError("neighbour masks need order <= 64");
  return masks_[check(v)];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(dist.size());
  dist.at(static_cast<std::size_t>(source)) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex out of range: " + std::to_string(v));
  if (u < 0 || u >= g.order()) throw GraphError("vertex out of range: " + std::to_string(u));
  int d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      // No shorter cycle through root can appear once BFS is this deep.
      if (best > 0 && 2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Graph relabel(const Graph& g, std::span<const Vertex> new_label) {
  if (new_label.size() != static_cast<std::size_t>(g.order())) {
    throw GraphError("relabel: permutation size mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({new_label[e.u], new_label[e.v]});
  return Graph(g.order(), edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, edges);
}

Graph bridged_cliques(int m) {
  if (m < 1) throw GraphError("bridged_cliques needs m >= 1");
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    int base = side * m;
    for (int u = 0; u < m; ++u) {
      for (int v = u + 1; v < m; ++v) edges.push_back({base + u, base + v});
    }
  }
  edges.push_back({m - 1, m});
  return Graph(2 * m, edges);
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "Graph(n=" << g.order() << ", edges={";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out << ", ";
    first = false;
    out << e.u << "-" << e.v;
  }
  out << "})";
  return out.str();
}

}  // namespace tokgraph
