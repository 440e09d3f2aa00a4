#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "tokgraph/catalog.hpp"
#include "tokgraph/trees.hpp"

using namespace tokgraph;

TEST_CASE("free tree counts match OEIS A000055") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= kMaxTreeOrder; ++n) {
    auto trees = enumerate_trees(n);
    CHECK(trees.size() == expected[n - 1]);
    for (const Graph& t : trees) CHECK(is_tree(t));
  }
  CHECK_THROWS(enumerate_trees(0));
  CHECK_THROWS(enumerate_trees(kMaxTreeOrder + 1));
}

TEST_CASE("n = 4 gives the path and the star") {
  auto trees = enumerate_trees(4);
  REQUIRE(trees.size() == 2);
  std::multiset<int> degs0, degs1;
  for (Vertex v = 0; v < 4; ++v) {
    degs0.insert(trees[0].degree(v));
    degs1.insert(trees[1].degree(v));
  }
  std::set<std::multiset<int>> seen{degs0, degs1};
  CHECK(seen.count({1, 1, 2, 2}) == 1);
  CHECK(seen.count({1, 1, 1, 3}) == 1);
}

TEST_CASE("Pruefer sequences deduplicated by canonical code agree with enumerate_trees") {
  for (int n = 3; n <= 7; ++n) {
    std::set<std::uint64_t> classes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
      classes.insert(canonical_code(oracle::pruefer_tree(seq)));
      int i = 0;
      while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
      if (i == n - 2) break;
    }
    std::set<std::uint64_t> enumerated;
    for (const Graph& t : enumerate_trees(n)) enumerated.insert(canonical_code(t));
    CHECK(classes == enumerated);
  }
}

TEST_CASE("canonical string is a relabelling invariant") {
  std::mt19937 rng(11);
  for (const Graph& t : enumerate_trees(9)) {
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(tree_canonical_string(relabel(t, perm)) == tree_canonical_string(t));
    CHECK(tree_from_canonical_string(tree_canonical_string(t)) == t);
  }
}
