#include "tokgraph/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace tokgraph {

namespace {

std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> signature(n);
    for (Vertex v = 0; v < n; ++v) {
      signature[v].first = colour[v];
      for (Vertex w : g.neighbors(v)) signature[v].second.push_back(colour[w]);
      std::sort(signature[v].second.begin(), signature[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, value] : rank) value = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[signature[v]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

struct Search {
  const Graph& g;
  std::vector<std::vector<Vertex>> cells;
  std::vector<Vertex> at_position;
  std::uint64_t best = 0;
  std::vector<Vertex> best_order;
  bool have_best = false;

  std::uint64_t code() const {
    const int n = g.order();
    std::uint64_t out = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        out = (out << 1) | (g.adjacent(at_position[i], at_position[j]) ? 1U : 0U);
      }
    }
    return out;
  }

  void run(std::size_t cell, int position) {
    if (cell == cells.size()) {
      std::uint64_t c = code();
      if (!have_best || c > best) {
        best = c;
        best_order = at_position;
        have_best = true;
      }
      return;
    }
    std::vector<Vertex> members = cells[cell];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t i = 0; i < members.size(); ++i) at_position[position + i] = members[i];
      run(cell + 1, position + static_cast<int>(members.size()));
    } while (std::next_permutation(members.begin(), members.end()));
  }
};

Search canonical_search(const Graph& g) {
  if (g.order() > kCatalogMaxOrder) {
    throw GraphError("canonical_form supports order <= " + std::to_string(kCatalogMaxOrder));
  }
  std::vector<int> colour = refine_colours(g);
  int classes = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  Search s{g, std::vector<std::vector<Vertex>>(classes), std::vector<Vertex>(g.order()), 0, {}, false};
  for (Vertex v = 0; v < g.order(); ++v) s.cells[colour[v]].push_back(v);
  s.run(0, 0);
  return s;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonical_search(g).best; }

Graph canonical_form(const Graph& g) {
  Search s = canonical_search(g);
  std::vector<Vertex> label(g.order());
  for (int pos = 0; pos < g.order(); ++pos) label[s.best_order[pos]] = pos;
  return relabel(g, label);
}

std::vector<std::vector<Graph>> enumerate_graphs_up_to(int n_max) {
  if (n_max < 1 || n_max > kCatalogMaxOrder) {
    throw std::out_of_range("enumerate_graphs: order out of range");
  }
  std::vector<std::vector<Graph>> out;
  out.push_back({Graph(1)});
  for (int n = 2; n <= n_max; ++n) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> found;
    for (const Graph& smaller : out.back()) {
      std::vector<Edge> base = smaller.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<Edge> edges = base;
        for (int u = 0; u < n - 1; ++u) {
          if ((mask >> u) & 1U) edges.push_back({u, n - 1});
        }
        Graph candidate(n, edges);
        Search s = canonical_search(candidate);
        if (seen.insert(s.best).second) {
          std::vector<Vertex> label(n);
          for (int pos = 0; pos < n; ++pos) label[s.best_order[pos]] = pos;
          found.emplace_back(s.best, relabel(candidate, label));
        }
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> level;
    level.reserve(found.size());
    for (auto& [code, graph] : found) level.push_back(std::move(graph));
    out.push_back(std::move(level));
  }
  return out;
}

std::vector<Graph> enumerate_graphs(int n) { return enumerate_graphs_up_to(n).back(); }

}  // namespace tokgraph
