#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tokgraph/graph.hpp"
#include "tokgraph/path_moves.hpp"

namespace tokgraph {

/// Inner-vertex predicates satisfied by the paths of each family in the
/// distance-two construction. C* belong to the |X∩Y| = k-1 case, D* to the
/// step-1 families of the |X∩Y| = k-2 case and E* to its supplemental paths.
enum class TraceId {
  kC1, kC2, kC2_1, kC2_2, kC3, kC4, kC5,
  kD1, kD2, kD3, kD4, kD3Star, kD4Star,
  kE1, kE2, kE3, kE4,
};

inline constexpr std::size_t kTraceRuleCount = 17;

/// A predicate instance: the rule id plus the context vertices it names.
/// z_symbols must lie in Z, w_symbols in the rule's reference W set.
struct TraceCondition {
  TraceId id;
  std::vector<Vertex> z_symbols;
  std::vector<Vertex> w_symbols;
};

/// One accepted shape of an inner config A: which Z symbols are missing from
/// A∩Z and which W symbols make up A∩W. A slot set of std::nullopt means the
/// component is unconstrained. Sets are bitmasks over symbol slots.
struct TraceShape {
  std::optional<unsigned> missing_z;
  std::optional<unsigned> held_w;
};

struct TraceRule {
  TraceId id;
  std::string_view name;
  /// C-rules are stated against W° = W \ {v}; D- and E-rules against W.
  bool uses_w_circ;
  int z_arity;
  int w_arity;
  std::vector<TraceShape> shapes;  // A satisfies the rule iff it matches one shape
};

std::span<const TraceRule> trace_rules();
const TraceRule& trace_rule(TraceId id);
std::string_view trace_name(TraceId id);

/// The sets a trace predicate is evaluated against.
struct TraceFrame {
  std::uint64_t z = 0;
  std::uint64_t w = 0;
  std::uint64_t w_circ = 0;
};

class TraceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True iff `a` matches the condition. Throws TraceError on an unresolvable
/// symbol (wrong arity, or a symbol outside its reference set).
bool config_satisfies(TokenConfig a, const TraceCondition& cond, const TraceFrame& frame);

/// True iff every inner config of `p` satisfies the condition.
bool check_trace(const TokenPath& p, const TraceCondition& cond, const TraceFrame& frame);

}  // namespace tokgraph
