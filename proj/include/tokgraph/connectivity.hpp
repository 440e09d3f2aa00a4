#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tokgraph/graph.hpp"

namespace tokgraph {

class ConnectivityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConnectivityReport {
  int kappa = 0;
  int lambda = 0;
  int delta = 0;
  std::optional<std::vector<Vertex>> witness_cut;
  std::optional<std::vector<Edge>> witness_edge_cut;
};

struct LocalConnectivity {
  int value = 0;
  /// `value` internally disjoint u-v paths, each listed from u to v.
  std::vector<std::vector<Vertex>> paths;
  /// A minimum u,v-separating vertex set.
  std::vector<Vertex> cut;
};

/// Unit vertex-capacity max-flow between two distinct non-adjacent vertices.
LocalConnectivity local_vertex_connectivity(const Graph& g, Vertex u, Vertex v);

enum class KappaStrategy {
  kGeneral,      // min over all non-adjacent pairs
  kDistanceTwo,  // min over pairs at distance two; valid for connected graphs
};

int vertex_connectivity(const Graph& g, KappaStrategy strategy = KappaStrategy::kGeneral);
int edge_connectivity(const Graph& g);

/// kappa, lambda and delta from the flow oracle, with witnesses.
ConnectivityReport connectivity_report(const Graph& g,
                                       KappaStrategy strategy = KappaStrategy::kGeneral);

inline constexpr int kBruteForceMaxOrder = 16;

/// kappa and lambda by exhaustive subset search. Throws ConnectivityError
/// above kBruteForceMaxOrder vertices.
ConnectivityReport brute_force_connectivity(const Graph& g);

}  // namespace tokgraph
