#include <doctest.h>

#include "tokgraph/graph6.hpp"
#include "tokgraph/trees.hpp"
#include "tokgraph/verify.hpp"

using namespace tokgraph;

TEST_CASE("theorem sweep n <= 4") {
  auto records = cmd_theorem(4, 2);
  // 1 + 1 + 2 trees on 2, 3, 4 vertices, each with k in [1, n-1].
  CHECK(records.size() == 1 * 1 + 1 * 2 + 2 * 3);
  for (const auto& r : records) {
    CHECK(r.status == Status::kConfirmed);
    CHECK(r.kappa == r.delta);
    CHECK(r.lambda == r.delta);
  }
  CHECK_FALSE(any_violated(records));
  CHECK_THROWS_AS(cmd_theorem(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(cmd_theorem(11, 1), std::invalid_argument);
}

TEST_CASE("theorem records") {
  VerificationRecord p4 = theorem_record(path_graph(4), 2);
  CHECK(p4.delta == 1);
  CHECK(p4.kappa == 1);
  CHECK(p4.lambda == 1);
  VerificationRecord star = theorem_record(star_graph(3), 1);
  CHECK(star.delta == 1);
  CHECK(star.kappa == 1);
  CHECK(star.lambda == 1);
  auto j = to_json(p4);
  CHECK(j["graph6"] == emit_graph6(path_graph(4)));
  CHECK(j["status"] == "confirmed");
  CHECK(j["k"] == 2);
}

TEST_CASE("records are reproducible") {
  auto first = cmd_theorem(5, 3);
  auto second = cmd_theorem(5, 1);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(to_json(first[i]).dump() == to_json(second[i]).dump());
    VerificationRecord again = theorem_record(parse_graph6(first[i].graph_id), first[i].k);
    CHECK(to_json(again).dump() == to_json(first[i]).dump());
  }
}

TEST_CASE("paths sweep n <= 5") {
  auto records = cmd_paths(5, 2);
  long long pairs = 0;
  for (const auto& r : records) {
    CHECK(r.status == Status::kConfirmed);
    REQUIRE(r.paths.has_value());
    pairs += r.paths->pair_count;
    CHECK(r.paths->case1_pairs + r.paths->case2_pairs == r.paths->pair_count);
    if (r.paths->pair_count > 0) CHECK(r.paths->min_family_size >= *r.delta);
    if (r.paths->max_excess_case1) CHECK(*r.paths->max_excess_case1 <= 2);
    if (r.paths->max_excess_case2) CHECK(*r.paths->max_excess_case2 <= 1);
  }
  CHECK(pairs > 0);
  // On P_4 delta never exceeds m.
  for (const auto& r : records) {
    if (r.graph_id != emit_graph6(enumerate_trees(4)[0]) &&
        r.graph_id != emit_graph6(enumerate_trees(4)[1])) {
      continue;
    }
    if (r.paths->max_excess_case1) CHECK(*r.paths->max_excess_case1 <= 0);
    if (r.paths->max_excess_case2) CHECK(*r.paths->max_excess_case2 <= 0);
  }
  CHECK_THROWS_AS(cmd_paths(9, 1), std::invalid_argument);
}

TEST_CASE("hfamily") {
  auto records = cmd_hfamily(3, 5, 2);
  REQUIRE(records.size() == 3);
  CHECK(records[0].kappa == 2);
  CHECK(records[0].lambda == 2);
  CHECK(records[0].delta == 2);
  CHECK(records[1].kappa == 3);
  CHECK(records[1].lambda == 3);
  CHECK(records[1].delta == 4);
  CHECK(records[2].kappa == 4);
  CHECK(records[2].lambda == 4);
  CHECK(records[2].delta == 6);
  CHECK_FALSE(any_violated(records));
  CHECK_THROWS_AS(cmd_hfamily(2, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(cmd_hfamily(5, 4, 1), std::invalid_argument);
}

TEST_CASE("conjecture") {
  ConjectureOptions opts;
  auto c5 = conjecture_records(cycle_graph(5), opts);
  REQUIRE(c5.size() == 2);  // k = 2, 3
  CHECK(c5[0].k == 2);
  CHECK(c5[0].status == Status::kConfirmed);
  CHECK(c5[0].kappa == c5[0].delta);

  auto k4 = conjecture_records(complete_graph(4), opts);
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].status == Status::kSkipped);
  CHECK(k4[0].reason == "girth<5");

  auto dis = conjecture_records(Graph(6, {{0, 1}}), opts);
  CHECK(dis[0].reason == "disconnected");

  ConjectureOptions k2;
  k2.k = 2;
  auto pet = conjecture_records(petersen_graph(), k2);
  REQUIRE(pet.size() == 1);
  CHECK(pet[0].status != Status::kSkipped);
  CHECK(pet[0].delta == 4);

  ConjectureOptions all;
  all.all_k = true;
  CHECK(conjecture_records(cycle_graph(5), all).size() == 4);
  CHECK(conjecture_records(path_graph(3), opts)[0].reason == "no k in range");
}

TEST_CASE("summary table") {
  auto s = summary_table(cmd_paths(4, 1));
  CHECK(s.find("paths") != std::string::npos);
  CHECK(s.find("distance-2 pairs") != std::string::npos);
}
