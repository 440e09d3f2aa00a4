#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "tokgraph/graph6.hpp"
#include "tokgraph/proof_engine.hpp"
#include "tokgraph/trees.hpp"

using namespace tokgraph;

namespace {

TokenConfig cfg(std::initializer_list<Vertex> m) { return TokenConfig::from_members(m); }

constexpr Vertex a = 0, b = 1, c = 2, d = 3;

std::vector<std::vector<oracle::Subset>> as_subsets(const PathFamily& f) {
  std::vector<std::vector<oracle::Subset>> out;
  for (const auto& fp : f.paths) {
    std::vector<oracle::Subset> seq;
    for (TokenConfig t : fp.path.configs()) seq.push_back(t.members());
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<Provenance> labels(const PathFamily& f) {
  std::vector<Provenance> out;
  for (const auto& fp : f.paths) out.push_back(fp.label);
  return out;
}

// Builds the family and checks it against the definition of F_k.
FamilyConstruction checked(const Graph& t, int k, TokenConfig x, TokenConfig y) {
  FamilyConstruction fc = construct_disjoint_family(t, k, x, y);
  oracle::BruteTokenGraph bt = oracle::token_graph(t, k);
  CHECK(oracle::check_family(bt, x.members(), y.members(), as_subsets(fc.family)) == "");
  CHECK(static_cast<int>(fc.family.size()) >= oracle::min_degree(bt.adj));
  return fc;
}

EngineError::Kind engine_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const EngineError& e) {
    return e.kind();
  }
  FAIL("no EngineError thrown");
  return EngineError::Kind::kNotATree;
}

}  // namespace

TEST_CASE("normalize: P_4 case 1") {
  Normalized nz = normalize(path_graph(4), cfg({a, b}), cfg({a, d}));
  REQUIRE(std::holds_alternative<Case1Context>(nz.context));
  const auto& ctx = std::get<Case1Context>(nz.context);
  CHECK(nz.reduction.none());
  CHECK(ctx.x == b);
  CHECK(ctx.y == d);
  CHECK(ctx.v == c);
  CHECK(ctx.a == 0);
  CHECK(ctx.b == 0);
  CHECK(ctx.c == 1);
  CHECK(ctx.d == 0);
  CHECK(ctx.eta == 0);
  CHECK(ctx.m == 1);
}

TEST_CASE("normalize: P_4 case 2") {
  Normalized nz = normalize(path_graph(4), cfg({a, c}), cfg({b, d}));
  REQUIRE(std::holds_alternative<Case2Context>(nz.context));
  const auto& ctx = std::get<Case2Context>(nz.context);
  CHECK(nz.reduction.none());
  for (int i = 0; i < 2; ++i) {
    CHECK(ctx.a[i] == 0);
    CHECK(ctx.b[i] == 0);
    CHECK(ctx.c[i] == 0);
    CHECK(ctx.d[i] == 0);
  }
  CHECK(ctx.eta == 0);
  CHECK(ctx.m == 2);
  REQUIRE(ctx.cross_edge.has_value());
  CHECK(ctx.cross_edge->u == b);  // y1
  CHECK(ctx.cross_edge->v == c);  // x2
  CHECK(ctx.table_case == 16);
  CHECK(min_token_degree(path_graph(4), 2) == 1);
}

TEST_CASE("normalize: star K_{1,3}") {
  Graph star = star_graph(3);  // centre 0
  Normalized nz = normalize(star, cfg({1, 2}), cfg({1, 3}));
  REQUIRE(std::holds_alternative<Case1Context>(nz.context));
  CHECK(std::get<Case1Context>(nz.context).v == 0);
  CHECK(nz.reduction.none());

  // The centre inside X∩Y forces the complement.
  Normalized inside = normalize(star, cfg({0, 1}), cfg({0, 2}));
  REQUIRE(std::holds_alternative<Case1Context>(inside.context));
  REQUIRE_FALSE(inside.reduction.none());
  CHECK(inside.reduction.steps.front() == ReductionStep::kComplement);
  const auto& ctx = std::get<Case1Context>(inside.context);
  CHECK_FALSE(ctx.X.contains(ctx.v));
  CHECK_FALSE(ctx.Y.contains(ctx.v));
}

TEST_CASE("normalize: errors") {
  CHECK(engine_kind([] { normalize(cycle_graph(4), cfg({0}), cfg({2})); }) ==
        EngineError::Kind::kNotATree);
  CHECK(engine_kind([] { normalize(path_graph(4), cfg({a, b}), cfg({a, c})); }) ==
        EngineError::Kind::kNotDistanceTwo);
  CHECK(engine_kind([] { normalize(path_graph(4), cfg({a, b}), cfg({c, d})); }) ==
        EngineError::Kind::kNotDistanceTwo);
}

TEST_CASE("normalize: relabelling chains") {
  Graph t = parse_graph6("Eh_G");
  Normalized one = normalize(t, cfg({0, 1, 5}), cfg({2, 4, 5}));
  CHECK(one.reduction.steps == std::vector<ReductionStep>{ReductionStep::kComplementWithRelabel});

  Graph t2 = parse_graph6("Fh_GG");
  Normalized deep = normalize(t2, cfg({0, 2, 4, 6}), cfg({0, 3, 5, 6}));
  CHECK(deep.reduction.steps ==
        std::vector<ReductionStep>{ReductionStep::kSwapXY, ReductionStep::kSwapIndices12,
                                   ReductionStep::kComplementWithRelabel});
  CHECK(deep.reduction.describe() == "SwapXY+SwapIndices12+ComplementWithRelabel");
  const auto& ctx = std::get<Case2Context>(deep.context);
  CHECK(ctx.table_case == 8);
}

TEST_CASE("normalized contexts satisfy the case invariants") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      for (int k = 1; k < n; ++k) {
        for (TokenConfig x : all_configs(n, k)) {
          for (TokenConfig y : all_configs(n, k)) {
            if (!(x < y) || std::popcount(x.mask() ^ y.mask()) > 4) continue;
            Normalized nz;
            try {
              nz = normalize(t, x, y);
            } catch (const EngineError& e) {
              CHECK(e.kind() == EngineError::Kind::kNotDistanceTwo);
              continue;
            }
            CHECK(nz.reduction.steps.size() <= 4);
            if (const auto* c1 = std::get_if<Case1Context>(&nz.context)) {
              CHECK_FALSE(c1->X.contains(c1->v));
              CHECK_FALSE(c1->Y.contains(c1->v));
              CHECK(c1->deg_X <= c1->deg_Y);
              CHECK(c1->deg_X == c1->a + c1->b + c1->eta + 1);
              CHECK(c1->deg_Y == c1->c + c1->d + c1->eta + 1);
              CHECK(c1->deg_X == token_degree(t, c1->X));
            } else {
              const auto& c2 = std::get<Case2Context>(nz.context);
              CHECK(c2.deg_X <= c2.deg_Y);
              const int row = c2.table_case;
              CHECK((row == 2 || row == 4 || row == 6 || row == 7 || row == 8 || row == 16));
              CHECK(c2.a[0] + c2.a[1] + c2.b[0] + c2.b[1] <= c2.c[0] + c2.c[1] + c2.d[0] + c2.d[1]);
              CHECK(c2.x[0] != c2.y[1]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("case 1 step 1") {
  Graph p4 = path_graph(4);
  auto ctx = std::get<Case1Context>(normalize(p4, cfg({a, b}), cfg({a, d})).context);
  PathFamily f = build_case1_step1(p4, ctx);
  REQUIRE(f.size() == 1);
  CHECK(f.paths[0].label == Provenance::kT1);
  CHECK(f.paths[0].path.configs() ==
        std::vector<TokenConfig>{cfg({a, b}), cfg({a, c}), cfg({a, d})});
  // delta <= m leaves the family alone.
  CHECK(build_case1_step2(p4, ctx, f, 1).size() == 1);

  // A Z-W edge with w != v.
  Graph t = parse_graph6("DkC");
  FamilyConstruction fc = checked(t, 2, cfg({0, 1}), cfg({1, 4}));
  auto ls = labels(fc.normalized_family);
  CHECK(std::count(ls.begin(), ls.end(), Provenance::kT2) == 1);
  for (const auto& fp : fc.normalized_family.paths) {
    if (fp.label != Provenance::kT2) continue;
    REQUIRE(fp.conditions.size() == 2);
    CHECK(fp.conditions[1].id == TraceId::kC2_1);
  }

  // A Z-W edge ending at v.
  Graph t2 = parse_graph6("Cs");
  FamilyConstruction fc2 = checked(t2, 2, cfg({0, 1}), cfg({0, 2}));
  bool saw_c22 = false;
  for (const auto& fp : fc2.normalized_family.paths) {
    for (const auto& cond : fp.conditions) saw_c22 |= cond.id == TraceId::kC2_2;
  }
  CHECK(saw_c22);
}

TEST_CASE("case 1 step 2") {
  // b = d+1: one P path, m+1 paths in total.
  FamilyConstruction p = checked(parse_graph6("EkE?"), 3, cfg({0, 1, 5}), cfg({0, 3, 5}));
  CHECK(p.subcase == "b=d+1");
  CHECK(p.delta == p.m + 1);
  CHECK(labels(p.normalized_family).back() == Provenance::kP);
  CHECK(p.family.size() == static_cast<std::size_t>(p.m + 1));

  // b >= d+2 with delta = m+2: P and P'.
  FamilyConstruction pp =
      checked(parse_graph6("Ii_GS?@?O"), 5, cfg({0, 1, 2, 3, 4}), cfg({0, 1, 2, 3, 7}));
  CHECK(pp.subcase == "b>=d+2");
  CHECK(pp.delta - pp.m == 2);
  auto ls = labels(pp.normalized_family);
  REQUIRE(ls.size() == 3);
  CHECK(ls[1] == Provenance::kP);
  CHECK(ls[2] == Provenance::kPPrime);
  // P and P' drop disjoint pairs of Z-vertices.
  const auto& z1 = pp.normalized_family.paths[1].conditions[0].z_symbols;
  const auto& z2 = pp.normalized_family.paths[2].conditions[0].z_symbols;
  for (Vertex z : z1) CHECK(std::find(z2.begin(), z2.end(), z) == z2.end());
}

TEST_CASE("case 2 step 1") {
  Graph p4 = path_graph(4);
  auto ctx = std::get<Case2Context>(normalize(p4, cfg({a, c}), cfg({b, d})).context);
  PathFamily f = build_case2_step1(p4, ctx);
  REQUIRE(f.size() == 2);
  CHECK(f.paths[0].path.inner_configs() == std::vector<TokenConfig>{cfg({b, c})});
  CHECK(f.paths[1].path.inner_configs() == std::vector<TokenConfig>{cfg({a, d})});
  CHECK(build_case2_step2(p4, ctx, f, 2).size() == 2);

  FamilyConstruction l2 = checked(parse_graph6("Eh_G"), 3, cfg({0, 2, 4}), cfg({0, 3, 5}));
  auto ls = labels(l2.normalized_family);
  CHECK(std::count(ls.begin(), ls.end(), Provenance::kL2) == 1);
}

TEST_CASE("case 2 step 2 on tight instances") {
  Graph t = parse_graph6("Ii_GS?@?O");
  FamilyConstruction p3 = checked(t, 5, cfg({0, 1, 2, 3, 5}), cfg({1, 2, 3, 4, 7}));
  CHECK(p3.subcase == "16.2.2");
  CHECK(labels(p3.normalized_family).back() == Provenance::kP3);
  FamilyConstruction p1 = checked(t, 5, cfg({0, 1, 2, 3, 4}), cfg({1, 2, 3, 5, 7}));
  CHECK(p1.subcase == "8.2.2");
  CHECK(labels(p1.normalized_family).back() == Provenance::kP1);
}

TEST_CASE("supplemental paths are valid whenever their sub-case applies") {
  // delta is forced to m+1 (m+2) so every path construction is exercised;
  // validity, disjointness and traces do not depend on the true delta.
  std::map<Provenance, int> built;
  for (int n = 4; n <= 8; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      for (int k = 1; k < n; ++k) {
        auto configs = all_configs(n, k);
        for (std::size_t i = 0; i < configs.size(); ++i) {
          for (std::size_t j = i + 1; j < configs.size(); ++j) {
            if (std::popcount(configs[i].mask() ^ configs[j].mask()) > 4) continue;
            Normalized nz;
            try {
              nz = normalize(t, configs[i], configs[j]);
            } catch (const EngineError&) {
              continue;
            }
            if (const auto* c1 = std::get_if<Case1Context>(&nz.context)) {
              const std::string sub = case1_subcase(*c1);
              if (sub == "b<=d") continue;
              PathFamily f = build_case1_step1(t, *c1);
              const int extra = sub == "b=d+1" ? 1 : 2;
              PathFamily g = build_case1_step2(t, *c1, f, c1->m + extra);
              CHECK(g.size() == f.size() + extra);
              for (std::size_t p = f.size(); p < g.size(); ++p) ++built[g.paths[p].label];
            } else {
              const auto& c2 = std::get<Case2Context>(nz.context);
              const std::string sub = case2_subcase(c2);
              if (sub != "2.2" && sub != "6.2" && sub != "8.2.2" && sub != "16.2.2") continue;
              PathFamily f = build_case2_step1(t, c2);
              PathFamily g = build_case2_step2(t, c2, f, c2.m + 1);
              REQUIRE(g.size() == f.size() + 1);
              ++built[g.paths.back().label];
            }
          }
        }
      }
    }
  }
  for (Provenance p : {Provenance::kP, Provenance::kPPrime, Provenance::kP1, Provenance::kP2,
                       Provenance::kP3, Provenance::kP4}) {
    CHECK_MESSAGE(built[p] > 0, to_string(p));
  }
}

TEST_CASE("step 2 refuses out-of-bound requests") {
  Graph p4 = path_graph(4);
  auto c1 = std::get<Case1Context>(normalize(p4, cfg({a, b}), cfg({a, d})).context);
  PathFamily f1 = build_case1_step1(p4, c1);
  CHECK(engine_kind([&] { build_case1_step2(p4, c1, f1, c1.m + 1); }) ==
        EngineError::Kind::kClaimBound);
  CHECK(engine_kind([&] { build_case1_step2(p4, c1, f1, c1.m + 3); }) ==
        EngineError::Kind::kClaimBound);

  auto c2 = std::get<Case2Context>(normalize(p4, cfg({a, c}), cfg({b, d})).context);
  PathFamily f2 = build_case2_step1(p4, c2);
  CHECK(engine_kind([&] { build_case2_step2(p4, c2, f2, c2.m + 2); }) ==
        EngineError::Kind::kClaimBound);
  CHECK(engine_kind([&] { build_case2_step2(p4, c2, f2, c2.m + 1); }) ==
        EngineError::Kind::kNoSupplementalPath);
}

TEST_CASE("verify_family catches broken families") {
  Graph p4 = path_graph(4);
  auto ctx = std::get<Case2Context>(normalize(p4, cfg({a, c}), cfg({b, d})).context);
  PathFamily f = build_case2_step1(p4, ctx);
  PathFamily twice = f;
  twice.paths.push_back(f.paths[0]);
  CHECK(engine_kind([&] { verify_family(twice, ctx.frame()); }) == EngineError::Kind::kNotDisjoint);

  PathFamily bad_trace = f;
  bad_trace.paths[0].conditions = {{TraceId::kD1, {}, {}}};
  CHECK_NOTHROW(verify_family(bad_trace, ctx.frame()));
  // Pretend Z = {b}: the inner config {b,c} keeps it, {a,d} does not.
  TraceFrame frame{cfg({b}).mask(), 0, 0};
  bad_trace.paths[1].conditions = {{TraceId::kD1, {}, {}}};
  CHECK(engine_kind([&] { verify_family(bad_trace, frame); }) == EngineError::Kind::kTraceFailure);
}

TEST_CASE("construct_disjoint_family examples") {
  FamilyConstruction p4 = checked(path_graph(4), 2, cfg({a, b}), cfg({a, d}));
  CHECK(p4.family.size() == 1);
  CHECK(p4.delta == 1);

  Graph star = star_graph(3);
  FamilyConstruction s = checked(star, 2, cfg({1, 2}), cfg({1, 3}));
  CHECK(static_cast<int>(s.family.size()) >= min_token_degree(star, 2));

  CHECK(engine_kind([] { construct_disjoint_family(path_graph(4), 2, cfg({a, b}), cfg({a, c})); }) ==
        EngineError::Kind::kNotDistanceTwo);
  CHECK(engine_kind([] { construct_disjoint_family(cycle_graph(5), 2, cfg({0, 1}), cfg({0, 3})); }) ==
        EngineError::Kind::kNotATree);
}

TEST_CASE("families pulled back through every reduction are valid in the caller's frame") {
  std::map<std::string, int> reductions;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      for (int k = 1; k < n; ++k) {
        oracle::BruteTokenGraph bt = oracle::token_graph(t, k);
        const int delta = oracle::min_degree(bt.adj);
        for (std::size_t i = 0; i < bt.vertices.size(); ++i) {
          auto dist = oracle::bfs(bt.adj, static_cast<int>(i));
          for (std::size_t j = i + 1; j < bt.vertices.size(); ++j) {
            if (dist[j] != 2) continue;
            TokenConfig x = TokenConfig::from_members(bt.vertices[i]);
            TokenConfig y = TokenConfig::from_members(bt.vertices[j]);
            FamilyConstruction fc = construct_disjoint_family(t, k, x, y, delta);
            ++reductions[fc.normalized.reduction.describe()];
            CHECK(static_cast<int>(fc.family.size()) >= delta);
            CHECK(oracle::check_family(bt, bt.vertices[i], bt.vertices[j], as_subsets(fc.family)) ==
                  "");
          }
        }
      }
    }
  }
  CHECK(reductions.count("Complement") == 1);
  CHECK(reductions.count("SwapXY") == 1);
  CHECK(reductions.count("SwapIndices12") == 1);
  CHECK(reductions.count("ComplementWithRelabel") == 1);
}
