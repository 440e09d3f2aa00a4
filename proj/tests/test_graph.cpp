#include <doctest.h>

#include "oracles.hpp"
#include "tokgraph/graph.hpp"

using namespace tokgraph;

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
  Graph g(4, {{2, 1}, {0, 1}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.min_degree() == 0);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.neighbor_mask(1) == 0b101);
}

TEST_CASE("distance on P_4") {
  Graph p4 = path_graph(4);
  CHECK(distance(p4, 2, 2) == 0);
  CHECK(distance(p4, 0, 3) == 3);
  Graph two(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(distance(two, 0, 3).has_value());
  CHECK_FALSE(is_connected(two));
}

TEST_CASE("girth") {
  CHECK_FALSE(girth(path_graph(6)).has_value());
  CHECK_FALSE(girth(star_graph(4)).has_value());
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(petersen_graph()) == 5);
}

namespace {

// Shortest cycle through brute force: an edge uv plus a shortest u-v path
// avoiding that edge.
std::optional<int> girth_oracle(const Graph& g) {
  std::optional<int> best;
  for (const Edge& e : g.edges()) {
    std::vector<Edge> rest;
    for (const Edge& f : g.edges()) {
      if (!(f == e)) rest.push_back(f);
    }
    Graph h(g.order(), rest);
    if (auto d = distance(h, e.u, e.v)) {
      if (!best || *d + 1 < *best) best = *d + 1;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("girth agrees with the edge-deletion oracle on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + trial % 9;
    Graph g = oracle::random_graph(n, 0.35, rng);
    CHECK(girth(g) == girth_oracle(g));
  }
}

TEST_CASE("trees and connectivity predicates") {
  CHECK(is_tree(path_graph(1)));
  CHECK(is_tree(star_graph(3)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK_FALSE(is_tree(Graph(3, {{0, 1}})));
}

TEST_CASE("named families") {
  Graph h = bridged_cliques(4);
  CHECK(h.order() == 8);
  CHECK(h.size() == 13);
  CHECK(h.adjacent(3, 4));
  CHECK(petersen_graph().size() == 15);
  CHECK(petersen_graph().min_degree() == 3);
  CHECK(star_graph(3).degree(0) == 3);
  CHECK(complete_graph(5).size() == 10);
}

TEST_CASE("relabel") {
  Graph p3 = path_graph(3);
  std::vector<Vertex> perm{1, 0, 2};
  Graph r = relabel(p3, perm);
  CHECK(r.adjacent(1, 0));
  CHECK(r.adjacent(0, 2));
  CHECK_FALSE(r.adjacent(1, 2));
}
