#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tokgraph/graph.hpp"
#include "tokgraph/path_moves.hpp"
#include "tokgraph/token_graph.hpp"
#include "tokgraph/trace.hpp"

namespace tokgraph {

class EngineError : public std::logic_error {
 public:
  enum class Kind {
    kNotATree,
    kNotDistanceTwo,
    kReplayFailure,
    kStepOneSize,
    kNotDisjoint,
    kTraceFailure,
    kClaimBound,
    kNoSupplementalPath,
    kUnreachableCase,
    kReductionDepth,
  };

  EngineError(Kind kind, const std::string& what) : std::logic_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(EngineError::Kind kind);

/// Named quantities of a pair with |X∩Y| = k-1, once v lies outside X∪Y.
/// Neighbour lists are ascending; w_x^i is W_x[i-1] and so on.
struct Case1Context {
  int n = 0;
  int k = 0;
  TokenConfig X, Y;
  std::uint64_t Z = 0;       // X ∩ Y
  std::uint64_t W = 0;       // V \ (X ∪ Y)
  std::uint64_t W_circ = 0;  // W \ {v}
  Vertex x = 0, y = 0, v = 0;
  std::vector<Vertex> W_x, W_y, Z_x, Z_y;
  int a = 0, b = 0, c = 0, d = 0;  // |W_x|, |Z_y|, |Z_x|, |W_y|
  std::vector<Edge> E_ZW;          // stored as {z, w}
  int eta = 0;
  int m_x = 0, m_y = 0, m = 0;
  int deg_X = 0, deg_Y = 0;

  TraceFrame frame() const { return {Z, W, W_circ}; }
};

/// Named quantities of a pair with |X∩Y| = k-2. Index 0 holds the objects
/// subscripted 1 (x_1, a_1, ...), index 1 those subscripted 2.
struct Case2Context {
  int n = 0;
  int k = 0;
  TokenConfig X, Y;
  std::uint64_t Z = 0;
  std::uint64_t W = 0;
  std::array<Vertex, 2> x{}, y{};
  std::array<std::vector<Vertex>, 2> W_x, W_y, Z_x, Z_y;
  std::array<int, 2> a{}, b{}, c{}, d{};
  std::vector<Edge> E_ZW;
  int eta = 0;
  std::array<int, 2> m_x{}, m_y{};
  int m = 0;
  /// The unique edge with one end in {x_1, y_1} and the other in {x_2, y_2},
  /// stored with the {x_1, y_1} end first.
  std::optional<Edge> cross_edge;
  int deg_X = 0, deg_Y = 0;
  /// Row 1..16 of the order-relation table on (a_i vs c_i, b_i vs d_i).
  int table_case = 0;

  TraceFrame frame() const { return {Z, W, W}; }
};

Case1Context make_case1_context(const Graph& T, TokenConfig X, TokenConfig Y, Vertex x, Vertex y,
                                Vertex v);
Case2Context make_case2_context(const Graph& T, TokenConfig X, TokenConfig Y,
                                std::array<Vertex, 2> x, std::array<Vertex, 2> y);

/// 1 + 8[a1<=c1] + 4[a2<=c2] + 2[b1<=d1] + [b2<=d2].
int order_table_case(const Case2Context& ctx);

enum class ReductionStep {
  kSwapXY,                 // exchange the roles of X and Y
  kComplement,             // work with psi(X), psi(Y) in F_{n-k}
  kSwapIndices12,          // relabel x1<->x2, y1<->y2
  kComplementWithRelabel,  // psi plus x'_i := y_i, y'_i := x_i
};

std::string_view to_string(ReductionStep step);

/// Steps taken from the caller's (T, k, X, Y) to the normalized context, in
/// order. pull_back maps a path of the normalized frame to the caller's frame.
struct Reduction {
  std::vector<ReductionStep> steps;

  bool none() const noexcept { return steps.empty(); }
  TokenPath pull_back(const Graph& T, const TokenPath& p) const;
  std::string describe() const;
};

using DistanceTwoContext = std::variant<Case1Context, Case2Context>;

struct Normalized {
  DistanceTwoContext context;
  Reduction reduction;
};

/// Classify X, Y and apply the reductions: v outside X∪Y and deg(X) <= deg(Y)
/// in the first case; deg(X) <= deg(Y) and a table row in {2,4,6,7,8,16} in
/// the second.
Normalized normalize(const Graph& T, TokenConfig X, TokenConfig Y);

enum class Provenance {
  kT1, kT2, kT3, kT4, kP, kPPrime,
  kL1, kL2, kL3, kL4, kL3Star, kL4Star,
  kP1, kP2, kP3, kP4,
};

std::string_view to_string(Provenance label);

struct FamilyPath {
  TokenPath path;
  Provenance label;
  std::vector<TraceCondition> conditions;
};

struct PathFamily {
  TokenConfig X, Y;
  std::vector<FamilyPath> paths;

  std::size_t size() const noexcept { return paths.size(); }
  std::vector<TokenPath> token_paths() const;
};

/// Endpoints, pairwise internal disjointness and every trace condition.
/// Throws EngineError naming the first failure.
void verify_family(const PathFamily& family, const TraceFrame& frame);

PathFamily build_case1_step1(const Graph& T, const Case1Context& ctx);
PathFamily build_case1_step2(const Graph& T, const Case1Context& ctx, PathFamily family,
                             int delta);
PathFamily build_case2_step1(const Graph& T, const Case2Context& ctx);
PathFamily build_case2_step2(const Graph& T, const Case2Context& ctx, PathFamily family,
                             int delta);

/// Sub-case label of the degree bound ("2.1", "8.2.2", "16.2.2", ...).
std::string case2_subcase(const Case2Context& ctx);
/// "b<=d", "b=d+1" or "b>=d+2".
std::string case1_subcase(const Case1Context& ctx);

struct FamilyConstruction {
  PathFamily family;             // caller's frame
  PathFamily normalized_family;  // frame of `normalized`
  Normalized normalized;
  int delta = 0;
  int m = 0;
  std::size_t step1_size = 0;
  std::string subcase;

  bool is_case1() const { return std::holds_alternative<Case1Context>(normalized.context); }
  TraceFrame frame() const;
};

/// Builds at least delta(F_k(T)) pairwise internally disjoint X-Y paths for a
/// pair at distance two, re-verifying everything after the pullback.
FamilyConstruction construct_disjoint_family(const Graph& T, int k, TokenConfig X, TokenConfig Y);
/// Same, with delta(F_k(T)) supplied by the caller.
FamilyConstruction construct_disjoint_family(const Graph& T, int k, TokenConfig X, TokenConfig Y,
                                             int delta);

}  // namespace tokgraph
