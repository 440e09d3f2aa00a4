#include "tokgraph/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tokgraph {

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) parts.push_back(rooted_code(t, w, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

std::vector<Vertex> centroids(const Graph& t) {
  const int n = t.order();
  std::vector<int> subtree(n, 1), parent(n, -1), order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  order.push_back(0);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int heaviest = n - subtree[v];
    for (Vertex w : t.neighbors(v)) {
      if (w != parent[v]) heaviest = std::max(heaviest, subtree[w]);
    }
    if (2 * heaviest <= n) out.push_back(v);
  }
  return out;
}

}  // namespace

std::string tree_canonical_string(const Graph& tree) {
  if (!is_tree(tree)) throw GraphError("tree_canonical_string: not a tree");
  std::string best;
  for (Vertex c : centroids(tree)) {
    std::string code = rooted_code(tree, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Graph tree_from_canonical_string(std::string_view code) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  int next = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] == '(') {
      if (!stack.empty()) edges.push_back({stack.back(), next});
      stack.push_back(next++);
    } else if (code[i] == ')') {
      if (stack.empty()) throw GraphError("unbalanced tree code");
      stack.pop_back();
      if (stack.empty() && i + 1 != code.size()) throw GraphError("tree code has several roots");
    } else {
      throw GraphError("bad character in tree code");
    }
  }
  if (!stack.empty() || next == 0) throw GraphError("unbalanced tree code");
  return Graph(next, edges);
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw std::out_of_range("enumerate_trees: n must be in 1.." + std::to_string(kMaxTreeOrder));
  }
  std::set<std::string> codes{"()"};
  for (int order = 2; order <= n; ++order) {
    std::set<std::string> grown;
    for (const auto& code : codes) {
      Graph t = tree_from_canonical_string(code);
      std::vector<Edge> edges = t.edges();
      for (Vertex v = 0; v < t.order(); ++v) {
        edges.push_back({v, order - 1});
        grown.insert(tree_canonical_string(Graph(order, edges)));
        edges.pop_back();
      }
    }
    codes = std::move(grown);
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(tree_from_canonical_string(code));
  return out;
}

}  // namespace tokgraph
