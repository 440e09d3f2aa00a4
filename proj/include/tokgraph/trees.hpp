#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tokgraph/graph.hpp"

namespace tokgraph {

inline constexpr int kMaxTreeOrder = 12;

/// AHU parenthesis string of the tree rooted at its centroid (the smaller of
/// the two strings when there are two centroids). Equal iff isomorphic.
std::string tree_canonical_string(const Graph& tree);

/// Inverse of tree_canonical_string: vertices are numbered in preorder.
Graph tree_from_canonical_string(std::string_view code);

/// One representative per isomorphism class of free trees on n vertices,
/// ordered by canonical string. Each representative is the canonical relabel.
std::vector<Graph> enumerate_trees(int n);

}  // namespace tokgraph
