#include "tokgraph/proof_engine.hpp"

#include <bit>
#include <sstream>

namespace tokgraph {

namespace {

using Kind = EngineError::Kind;

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

std::uint64_t all_vertices(int n) { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

std::vector<Vertex> members(std::uint64_t mask) { return TokenConfig::from_mask(mask).members(); }

std::vector<Edge> edges_between(const Graph& T, std::uint64_t Z, std::uint64_t W) {
  std::vector<Edge> out;
  for (Vertex z : members(Z)) {
    for (Vertex w : members(T.neighbor_mask(z) & W)) out.push_back({z, w});
  }
  return out;
}

void require_tree(const Graph& T) {
  if (!is_tree(T)) throw EngineError(Kind::kNotATree, "base graph is not a tree");
  if (T.order() > 64) throw EngineError(Kind::kNotATree, "tree order exceeds 64");
}

void add_path(const Graph& T, PathFamily& family, Provenance label,
              std::initializer_list<MoveChain> chains, std::vector<TraceCondition> conditions) {
  try {
    family.paths.push_back(
        {concat(T, family.X, chains), label, std::move(conditions)});
  } catch (const PathError& e) {
    throw EngineError(Kind::kReplayFailure,
                      std::string(to_string(label)) + " path does not replay: " + e.what());
  }
}

Case2Context swapped_indices(const Graph& T, const Case2Context& ctx) {
  return make_case2_context(T, ctx.X, ctx.Y, {ctx.x[1], ctx.x[0]}, {ctx.y[1], ctx.y[0]});
}

bool cross_is(const Case2Context& ctx, Vertex first, Vertex second) {
  return ctx.cross_edge && ctx.cross_edge->u == first && ctx.cross_edge->v == second;
}

}  // namespace

std::string_view to_string(EngineError::Kind kind) {
  switch (kind) {
    case Kind::kNotATree: return "not-a-tree";
    case Kind::kNotDistanceTwo: return "not-distance-two";
    case Kind::kReplayFailure: return "replay-failure";
    case Kind::kStepOneSize: return "step-one-size";
    case Kind::kNotDisjoint: return "not-disjoint";
    case Kind::kTraceFailure: return "trace-failure";
    case Kind::kClaimBound: return "claim-bound";
    case Kind::kNoSupplementalPath: return "no-supplemental-path";
    case Kind::kUnreachableCase: return "unreachable-case";
    case Kind::kReductionDepth: return "reduction-depth";
  }
  return "?";
}

std::string_view to_string(ReductionStep step) {
  switch (step) {
    case ReductionStep::kSwapXY: return "SwapXY";
    case ReductionStep::kComplement: return "Complement";
    case ReductionStep::kSwapIndices12: return "SwapIndices12";
    case ReductionStep::kComplementWithRelabel: return "ComplementWithRelabel";
  }
  return "?";
}

std::string_view to_string(Provenance label) {
  switch (label) {
    case Provenance::kT1: return "T1";
    case Provenance::kT2: return "T2";
    case Provenance::kT3: return "T3";
    case Provenance::kT4: return "T4";
    case Provenance::kP: return "P";
    case Provenance::kPPrime: return "P'";
    case Provenance::kL1: return "L1";
    case Provenance::kL2: return "L2";
    case Provenance::kL3: return "L3";
    case Provenance::kL4: return "L4";
    case Provenance::kL3Star: return "L3*";
    case Provenance::kL4Star: return "L4*";
    case Provenance::kP1: return "P1";
    case Provenance::kP2: return "P2";
    case Provenance::kP3: return "P3";
    case Provenance::kP4: return "P4";
  }
  return "?";
}

Case1Context make_case1_context(const Graph& T, TokenConfig X, TokenConfig Y, Vertex x, Vertex y,
                                Vertex v) {
  Case1Context ctx;
  ctx.n = T.order();
  ctx.k = X.size();
  ctx.X = X;
  ctx.Y = Y;
  ctx.x = x;
  ctx.y = y;
  ctx.v = v;
  ctx.Z = X.mask() & Y.mask();
  ctx.W = all_vertices(ctx.n) & ~(X.mask() | Y.mask());
  ctx.W_circ = ctx.W & ~bit(v);
  ctx.W_x = members(T.neighbor_mask(x) & ctx.W_circ);
  ctx.W_y = members(T.neighbor_mask(y) & ctx.W_circ);
  ctx.Z_x = members(T.neighbor_mask(x) & ctx.Z);
  ctx.Z_y = members(T.neighbor_mask(y) & ctx.Z);
  ctx.a = static_cast<int>(ctx.W_x.size());
  ctx.b = static_cast<int>(ctx.Z_y.size());
  ctx.c = static_cast<int>(ctx.Z_x.size());
  ctx.d = static_cast<int>(ctx.W_y.size());
  ctx.E_ZW = edges_between(T, ctx.Z, ctx.W);
  ctx.eta = static_cast<int>(ctx.E_ZW.size());
  ctx.m_x = std::min(ctx.a, ctx.c);
  ctx.m_y = std::min(ctx.b, ctx.d);
  ctx.m = ctx.m_x + ctx.m_y + ctx.eta + 1;
  ctx.deg_X = token_degree(T, X);
  ctx.deg_Y = token_degree(T, Y);
  return ctx;
}

Case2Context make_case2_context(const Graph& T, TokenConfig X, TokenConfig Y,
                                std::array<Vertex, 2> x, std::array<Vertex, 2> y) {
  Case2Context ctx;
  ctx.n = T.order();
  ctx.k = X.size();
  ctx.X = X;
  ctx.Y = Y;
  ctx.x = x;
  ctx.y = y;
  ctx.Z = X.mask() & Y.mask();
  ctx.W = all_vertices(ctx.n) & ~(X.mask() | Y.mask());
  for (int i = 0; i < 2; ++i) {
    ctx.W_x[i] = members(T.neighbor_mask(x[i]) & ctx.W);
    ctx.W_y[i] = members(T.neighbor_mask(y[i]) & ctx.W);
    ctx.Z_x[i] = members(T.neighbor_mask(x[i]) & ctx.Z);
    ctx.Z_y[i] = members(T.neighbor_mask(y[i]) & ctx.Z);
    ctx.a[i] = static_cast<int>(ctx.W_x[i].size());
    ctx.b[i] = static_cast<int>(ctx.Z_y[i].size());
    ctx.c[i] = static_cast<int>(ctx.Z_x[i].size());
    ctx.d[i] = static_cast<int>(ctx.W_y[i].size());
    ctx.m_x[i] = std::min(ctx.a[i], ctx.c[i]);
    ctx.m_y[i] = std::min(ctx.b[i], ctx.d[i]);
  }
  ctx.E_ZW = edges_between(T, ctx.Z, ctx.W);
  ctx.eta = static_cast<int>(ctx.E_ZW.size());
  ctx.m = ctx.m_x[0] + ctx.m_x[1] + ctx.m_y[0] + ctx.m_y[1] + ctx.eta + 2;
  for (Vertex first : {x[0], y[0]}) {
    for (Vertex second : {x[1], y[1]}) {
      if (!ctx.cross_edge && T.adjacent(first, second)) ctx.cross_edge = Edge{first, second};
    }
  }
  ctx.deg_X = token_degree(T, X);
  ctx.deg_Y = token_degree(T, Y);
  ctx.table_case = order_table_case(ctx);
  return ctx;
}

int order_table_case(const Case2Context& ctx) {
  return 1 + 8 * (ctx.a[0] <= ctx.c[0]) + 4 * (ctx.a[1] <= ctx.c[1]) + 2 * (ctx.b[0] <= ctx.d[0]) +
         (ctx.b[1] <= ctx.d[1]);
}

TokenPath Reduction::pull_back(const Graph& T, const TokenPath& p) const {
  TokenPath out = p;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (*it) {
      case ReductionStep::kSwapXY: out = out.reversed(T); break;
      case ReductionStep::kComplement:
      case ReductionStep::kComplementWithRelabel: out = out.complemented(T); break;
      case ReductionStep::kSwapIndices12: break;
    }
  }
  return out;
}

std::string Reduction::describe() const {
  if (steps.empty()) return "None";
  std::string out;
  for (ReductionStep s : steps) {
    if (!out.empty()) out += "+";
    out += to_string(s);
  }
  return out;
}

Normalized normalize(const Graph& T, TokenConfig X, TokenConfig Y) {
  require_tree(T);
  Distance2Class cls;
  try {
    cls = classify_distance2(T, X, Y);
  } catch (const ClassificationError& e) {
    throw EngineError(Kind::kNotDistanceTwo, e.what());
  } catch (const TokenError& e) {
    throw EngineError(Kind::kNotDistanceTwo, e.what());
  }
  Reduction reduction;

  if (const auto* pair = std::get_if<Case1Pair>(&cls)) {
    Case1Pair p = *pair;
    if (X.contains(p.v) || Y.contains(p.v)) {
      // v sits in X∩Y, so it lies outside psi(X) ∪ psi(Y).
      X = complement_iso(X, T.order());
      Y = complement_iso(Y, T.order());
      reduction.steps.push_back(ReductionStep::kComplement);
      p = std::get<Case1Pair>(classify_distance2(T, X, Y));
    }
    Case1Context ctx = make_case1_context(T, X, Y, p.x, p.y, p.v);
    if (ctx.deg_X > ctx.deg_Y) {
      reduction.steps.push_back(ReductionStep::kSwapXY);
      ctx = make_case1_context(T, Y, X, p.y, p.x, p.v);
    }
    return {ctx, reduction};
  }

  const Case2Pair p = std::get<Case2Pair>(cls);
  Case2Context ctx = make_case2_context(T, X, Y, {p.x1, p.x2}, {p.y1, p.y2});
  if (ctx.deg_X > ctx.deg_Y) {
    reduction.steps.push_back(ReductionStep::kSwapXY);
    ctx = make_case2_context(T, Y, X, {p.y1, p.y2}, {p.x1, p.x2});
  }
  for (int depth = 0;; ++depth) {
    const int row = ctx.table_case;
    if (row == 1) {
      throw EngineError(Kind::kUnreachableCase,
                        "order table row (1) reached although deg(X) <= deg(Y)");
    }
    const bool swap_rows = row == 3 || (row >= 9 && row <= 12) || row == 15;
    const bool complement_rows = row == 5 || row == 13 || row == 14;
    if (!swap_rows && !complement_rows) break;
    if (depth == 2) {
      throw EngineError(Kind::kReductionDepth,
                        "more than two relabelings needed (row " + std::to_string(row) + ")");
    }
    if (swap_rows) {
      reduction.steps.push_back(ReductionStep::kSwapIndices12);
      ctx = swapped_indices(T, ctx);
    } else {
      reduction.steps.push_back(ReductionStep::kComplementWithRelabel);
      ctx = make_case2_context(T, complement_iso(ctx.X, T.order()),
                               complement_iso(ctx.Y, T.order()), ctx.y, ctx.x);
    }
  }
  return {ctx, reduction};
}

std::vector<TokenPath> PathFamily::token_paths() const {
  std::vector<TokenPath> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(p.path);
  return out;
}

void verify_family(const PathFamily& family, const TraceFrame& frame) {
  for (const FamilyPath& fp : family.paths) {
    if (fp.path.start() != family.X || fp.path.end() != family.Y) {
      throw EngineError(Kind::kReplayFailure, std::string(to_string(fp.label)) +
                                                  " path ends at " + to_string(fp.path.end()) +
                                                  ", expected " + to_string(family.Y));
    }
  }
  const std::vector<TokenPath> paths = family.token_paths();
  DisjointnessReport report = pairwise_internally_disjoint(paths);
  if (!report.disjoint) {
    auto [i, j] = *report.violating_pair;
    throw EngineError(Kind::kNotDisjoint, std::string(to_string(family.paths[i].label)) + " and " +
                                              std::string(to_string(family.paths[j].label)) +
                                              " paths share " + to_string(*report.shared_config));
  }
  for (const FamilyPath& fp : family.paths) {
    for (const TraceCondition& cond : fp.conditions) {
      if (!check_trace(fp.path, cond, frame)) {
        throw EngineError(Kind::kTraceFailure, std::string(to_string(fp.label)) + " path " +
                                                   to_string(fp.path) + " violates " +
                                                   std::string(trace_name(cond.id)));
      }
    }
  }
}

PathFamily build_case1_step1(const Graph& T, const Case1Context& ctx) {
  PathFamily family{ctx.X, ctx.Y, {}};
  const Vertex x = ctx.x, y = ctx.y, v = ctx.v;

  add_path(T, family, Provenance::kT1, {{x, v, y}}, {{TraceId::kC1, {}, {}}});

  for (const Edge& e : ctx.E_ZW) {
    const Vertex z = e.u, w = e.v;
    if (w != v) {
      add_path(T, family, Provenance::kT2, {{z, w}, {x, v, y}, {w, z}},
               {{TraceId::kC2, {z}, {}}, {TraceId::kC2_1, {}, {w}}});
    } else {
      add_path(T, family, Provenance::kT2, {{z, v, y}, {x, v, z}},
               {{TraceId::kC2, {z}, {}}, {TraceId::kC2_2, {}, {}}});
    }
  }

  for (int i = 0; i < ctx.m_x; ++i) {
    const Vertex w = ctx.W_x[i], z = ctx.Z_x[i];
    add_path(T, family, Provenance::kT3, {{x, w}, {z, x, v, y}, {w, x, z}},
             {{TraceId::kC3, {z}, {w}}});
  }

  for (int j = 0; j < ctx.m_y; ++j) {
    const Vertex z = ctx.Z_y[j], w = ctx.W_y[j];
    add_path(T, family, Provenance::kT4, {{z, y, w}, {x, v, y, z}, {w, y}},
             {{TraceId::kC4, {z}, {w}}});
  }

  if (static_cast<int>(family.size()) != ctx.m) {
    throw EngineError(Kind::kStepOneSize, "step-1 family has " + std::to_string(family.size()) +
                                                " paths, expected m=" + std::to_string(ctx.m));
  }
  verify_family(family, ctx.frame());
  return family;
}

std::string case1_subcase(const Case1Context& ctx) {
  if (ctx.b <= ctx.d) return "b<=d";
  if (ctx.b == ctx.d + 1) return "b=d+1";
  return "b>=d+2";
}

PathFamily build_case1_step2(const Graph& T, const Case1Context& ctx, PathFamily family,
                             int delta) {
  if (delta <= ctx.m) return family;
  const int excess = delta - ctx.m;
  const std::string where = " (delta=" + std::to_string(delta) + ", m=" + std::to_string(ctx.m) +
                            ", a,b,c,d=" + std::to_string(ctx.a) + "," + std::to_string(ctx.b) +
                            "," + std::to_string(ctx.c) + "," + std::to_string(ctx.d) + ")";
  if (excess > 2) throw EngineError(Kind::kClaimBound, "delta - m > 2" + where);
  if (ctx.b <= ctx.d) throw EngineError(Kind::kClaimBound, "delta > m with b <= d" + where);
  if (ctx.b == ctx.d + 1 && excess > 1) {
    throw EngineError(Kind::kClaimBound, "delta > m+1 with b = d+1" + where);
  }
  if (ctx.c < ctx.a + 1) throw EngineError(Kind::kClaimBound, "delta > m with c <= a" + where);

  const Vertex x = ctx.x, y = ctx.y, v = ctx.v;
  // The last elements of Z(y) and Z(x) are never indexed by T3 or T4.
  auto supplemental = [&](Provenance label, int offset) {
    const Vertex zb = ctx.Z_y[ctx.b - 1 - offset];
    const Vertex zc = ctx.Z_x[ctx.c - 1 - offset];
    add_path(T, family, label, {{zb, y}, {x, v}, {zc, x}, {y, zb}, {v, y}, {x, zc}},
             {{TraceId::kC5, {zb, zc}, {}}});
  };
  supplemental(Provenance::kP, 0);
  if (ctx.b >= ctx.d + 2) supplemental(Provenance::kPPrime, 1);

  verify_family(family, ctx.frame());
  return family;
}

PathFamily build_case2_step1(const Graph& T, const Case2Context& ctx) {
  PathFamily family{ctx.X, ctx.Y, {}};
  const Vertex x1 = ctx.x[0], y1 = ctx.y[0], x2 = ctx.x[1], y2 = ctx.y[1];

  add_path(T, family, Provenance::kL1, {{x1, y1}, {x2, y2}}, {{TraceId::kD1, {}, {}}});
  add_path(T, family, Provenance::kL1, {{x2, y2}, {x1, y1}}, {{TraceId::kD1, {}, {}}});

  for (const Edge& e : ctx.E_ZW) {
    const Vertex z = e.u, w = e.v;
    add_path(T, family, Provenance::kL2, {{z, w}, {x1, y1}, {x2, y2}, {w, z}},
             {{TraceId::kD2, {z}, {w}}});
  }
  for (int i = 0; i < ctx.m_x[0]; ++i) {
    const Vertex w = ctx.W_x[0][i], z = ctx.Z_x[0][i];
    add_path(T, family, Provenance::kL3, {{x1, w}, {z, x1, y1}, {x2, y2}, {w, x1, z}},
             {{TraceId::kD3, {z}, {w}}});
  }
  for (int j = 0; j < ctx.m_y[0]; ++j) {
    const Vertex z = ctx.Z_y[0][j], w = ctx.W_y[0][j];
    add_path(T, family, Provenance::kL4, {{z, y1, w}, {x2, y2}, {x1, y1, z}, {w, y1}},
             {{TraceId::kD4, {z}, {w}}});
  }
  for (int i = 0; i < ctx.m_x[1]; ++i) {
    const Vertex w = ctx.W_x[1][i], z = ctx.Z_x[1][i];
    add_path(T, family, Provenance::kL3Star, {{x2, w}, {z, x2, y2}, {x1, y1}, {w, x2, z}},
             {{TraceId::kD3Star, {z}, {w}}});
  }
  for (int j = 0; j < ctx.m_y[1]; ++j) {
    const Vertex z = ctx.Z_y[1][j], w = ctx.W_y[1][j];
    add_path(T, family, Provenance::kL4Star, {{z, y2, w}, {x1, y1}, {x2, y2, z}, {w, y2}},
             {{TraceId::kD4Star, {z}, {w}}});
  }

  if (static_cast<int>(family.size()) != ctx.m) {
    throw EngineError(Kind::kStepOneSize, "step-1 family has " + std::to_string(family.size()) +
                                                " paths, expected m=" + std::to_string(ctx.m));
  }
  verify_family(family, ctx.frame());
  return family;
}

std::string case2_subcase(const Case2Context& ctx) {
  const Vertex x1 = ctx.x[0], y1 = ctx.y[0], x2 = ctx.x[1], y2 = ctx.y[1];
  switch (ctx.table_case) {
    case 2:
      return cross_is(ctx, y1, x2) || cross_is(ctx, y1, y2) ? "2.2" : "2.1";
    case 4:
      return "4";
    case 6:
      return cross_is(ctx, x1, x2) || cross_is(ctx, y1, y2) ? "6.2" : "6.1";
    case 7:
      return "7";
    case 8:
      if (ctx.d[1] <= ctx.b[1] + 1) return "8.1";
      return cross_is(ctx, x1, x2) || cross_is(ctx, y1, x2) ? "8.2.2" : "8.2.1";
    case 16: {
      if (!cross_is(ctx, x1, y2) && !cross_is(ctx, y1, x2)) return "16.1";
      // Orient the cross edge as x1y2 before reading the sub-case.
      const bool flip = cross_is(ctx, y1, x2);
      const int i = flip ? 1 : 0;
      const int j = 1 - i;
      if (ctx.a[i] == ctx.c[i] && ctx.b[j] == ctx.d[j]) return "16.2.1";
      return "16.2.2";
    }
    default:
      return std::to_string(ctx.table_case);
  }
}

PathFamily build_case2_step2(const Graph& T, const Case2Context& ctx, PathFamily family,
                             int delta) {
  if (delta <= ctx.m) return family;
  const std::string sub = case2_subcase(ctx);
  const std::string where = " (row " + sub + ", delta=" + std::to_string(delta) +
                            ", m=" + std::to_string(ctx.m) + ")";
  if (delta - ctx.m > 1) throw EngineError(Kind::kClaimBound, "delta - m > 1" + where);

  // The supplemental paths are written for a cross edge x1y2; (16.2.2) may
  // need the index relabel first. Z and W do not change under it.
  const Case2Context o = (sub == "16.2.2" && ctx.cross_edge && ctx.cross_edge->u == ctx.y[0])
                             ? swapped_indices(T, ctx)
                             : ctx;
  const Vertex x1 = o.x[0], y1 = o.y[0], x2 = o.x[1], y2 = o.y[1];
  const int a1 = o.a[0], c1 = o.c[0], a2 = o.a[1], c2 = o.c[1], b2 = o.b[1], d2 = o.d[1];

  auto path1 = [&] {
    if (!(a1 > c1 && d2 > b2)) {
      throw EngineError(Kind::kNoSupplementalPath, "P1 needs a1>c1 and d2>b2" + where);
    }
    const Vertex w1 = o.W_x[0][a1 - 1], w2 = o.W_y[1][d2 - 1];
    add_path(T, family, Provenance::kP1, {{x1, w1}, {x2, y2, w2}, {w1, x1, y1}, {w2, y2}},
             {{TraceId::kE1, {}, {w1, w2}}});
  };
  auto path2 = [&] {
    if (!(a1 > c1 && c2 > a2)) {
      throw EngineError(Kind::kNoSupplementalPath, "P2 needs a1>c1 and c2>a2" + where);
    }
    const Vertex w1 = o.W_x[0][a1 - 1], z2 = o.Z_x[1][c2 - 1];
    add_path(T, family, Provenance::kP2, {{x1, w1}, {x2, y2}, {z2, x2}, {w1, x1, y1}, {x2, z2}},
             {{TraceId::kE2, {z2}, {w1}}});
  };
  auto path3 = [&] {
    if (!(c1 > a1 && T.adjacent(x1, y2))) {
      throw EngineError(Kind::kNoSupplementalPath, "P3 needs c1>a1 and x1y2 in E(T)" + where);
    }
    const Vertex z1 = o.Z_x[0][c1 - 1];
    add_path(T, family, Provenance::kP3, {{x1, y2}, {z1, x1, y1}, {y2, x1}, {x2, y2}, {x1, z1}},
             {{TraceId::kE3, {z1}, {}}});
  };
  auto path4 = [&] {
    if (!(d2 > b2 && T.adjacent(x1, y2))) {
      throw EngineError(Kind::kNoSupplementalPath, "P4 needs d2>b2 and x1y2 in E(T)" + where);
    }
    const Vertex w2 = o.W_y[1][d2 - 1];
    add_path(T, family, Provenance::kP4, {{x1, y2, w2}, {x2, y2, x1, y1}, {w2, y2}},
             {{TraceId::kE4, {}, {w2}}});
  };

  if (sub == "2.2" || sub == "8.2.2") {
    path1();
  } else if (sub == "6.2") {
    if (c2 > a2) path2(); else path1();
  } else if (sub == "16.2.2") {
    if (c1 > a1) path3(); else path4();
  } else {
    throw EngineError(Kind::kNoSupplementalPath, "delta = m+1 outside rows 2.2/6.2/8.2.2/16.2.2" +
                                                     where);
  }
  verify_family(family, o.frame());
  return family;
}

TraceFrame FamilyConstruction::frame() const {
  return std::visit([](const auto& ctx) { return ctx.frame(); }, normalized.context);
}

FamilyConstruction construct_disjoint_family(const Graph& T, int k, TokenConfig X, TokenConfig Y) {
  require_tree(T);
  return construct_disjoint_family(T, k, X, Y, min_token_degree(T, k));
}

FamilyConstruction construct_disjoint_family(const Graph& T, int k, TokenConfig X, TokenConfig Y,
                                             int delta) {
  if (X.size() != k || Y.size() != k) {
    throw EngineError(Kind::kNotDistanceTwo, "configs do not have k=" + std::to_string(k) + " tokens");
  }
  FamilyConstruction out{{X, Y, {}}, {}, normalize(T, X, Y), delta, 0, 0, {}};

  if (const auto* c1 = std::get_if<Case1Context>(&out.normalized.context)) {
    PathFamily first = build_case1_step1(T, *c1);
    out.step1_size = first.size();
    out.m = c1->m;
    out.subcase = case1_subcase(*c1);
    out.normalized_family = build_case1_step2(T, *c1, std::move(first), delta);
  } else {
    const auto& c2 = std::get<Case2Context>(out.normalized.context);
    PathFamily first = build_case2_step1(T, c2);
    out.step1_size = first.size();
    out.m = c2.m;
    out.subcase = case2_subcase(c2);
    out.normalized_family = build_case2_step2(T, c2, std::move(first), delta);
  }

  for (const FamilyPath& fp : out.normalized_family.paths) {
    try {
      out.family.paths.push_back(
          {out.normalized.reduction.pull_back(T, fp.path), fp.label, fp.conditions});
    } catch (const PathError& e) {
      throw EngineError(Kind::kReplayFailure, std::string("pullback of ") +
                                                  std::string(to_string(fp.label)) +
                                                  " failed: " + e.what());
    }
  }
  // Trace conditions live in the normalized frame; here only endpoints and
  // disjointness are re-checked.
  PathFamily bare = out.family;
  for (auto& fp : bare.paths) fp.conditions.clear();
  verify_family(bare, TraceFrame{});

  if (static_cast<int>(out.family.size()) < delta) {
    throw EngineError(Kind::kNoSupplementalPath,
                      "family has " + std::to_string(out.family.size()) + " paths, delta=" +
                          std::to_string(delta));
  }
  return out;
}

}  // namespace tokgraph
