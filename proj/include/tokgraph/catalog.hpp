#pragma once

#include <cstdint>
#include <vector>

#include "tokgraph/graph.hpp"

namespace tokgraph {

/// Orders up to this size have a 64-bit canonical code.
inline constexpr int kCatalogMaxOrder = 11;

/// Canonical relabelling: colour refinement, then the lexicographically
/// largest upper-triangle bit string over all cell-respecting orderings.
/// Meant for small graphs; regular graphs cost up to n! orderings.
Graph canonical_form(const Graph& g);
std::uint64_t canonical_code(const Graph& g);

/// All graphs on n vertices up to isomorphism, ordered by canonical code.
std::vector<Graph> enumerate_graphs(int n);

/// enumerate_graphs for every order 1..n_max, index i holds order i+1.
std::vector<std::vector<Graph>> enumerate_graphs_up_to(int n_max);

}  // namespace tokgraph
