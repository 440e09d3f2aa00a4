#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tokgraph {

/// Vertices are dense integers 0..n-1. Named roles from the proof (x, y, v, ...)
/// are plain vertices bound inside a context.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph. Immutable once constructed.
///
/// Adjacency lists are kept sorted. For n <= 64 a neighbour bitmask per vertex
/// is kept as well; the token-graph code does all of its set algebra on those.
class Graph {
 public:
  static constexpr int kMaskLimit = 64;

  Graph() = default;
  explicit Graph(int n);
  /// Throws GraphError on self-loops, duplicate edges or out-of-range ends.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[check(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Requires order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;
  bool has_masks() const noexcept { return !masks_.empty() || n_ == 0; }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  int min_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t check(Vertex v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> masks_;
};

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Shortest-path length, std::nullopt when u and v are disconnected.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Length of a shortest cycle, std::nullopt for forests.
std::optional<int> girth(const Graph& g);

Graph relabel(const Graph& g, std::span<const Vertex> new_label);

// Small named families used across tests and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
/// Two copies of K_m joined by one edge between vertex m-1 and vertex m.
Graph bridged_cliques(int m);

std::string to_string(const Graph& g);

}  // namespace tokgraph
