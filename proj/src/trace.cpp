#include "tokgraph/trace.hpp"

#include <array>
#include <string>

namespace tokgraph {

namespace {

// "Either Z or Z\{z}, either ∅ or {w}, and at least one of the two changes".
const std::vector<TraceShape> kOneSwap = {{1U, 0U}, {0U, 1U}, {1U, 1U}};

const std::array<TraceRule, kTraceRuleCount>& table() {
  static const std::array<TraceRule, kTraceRuleCount> rules = {{
      {TraceId::kC1, "C1", true, 0, 0, {{0U, 0U}}},
      {TraceId::kC2, "C2", true, 1, 0, {{1U, std::nullopt}}},
      {TraceId::kC2_1, "C2.1", true, 0, 1, {{std::nullopt, 1U}}},
      {TraceId::kC2_2, "C2.2", true, 0, 0, {{std::nullopt, 0U}}},
      {TraceId::kC3, "C3", true, 1, 1, kOneSwap},
      {TraceId::kC4, "C4", true, 1, 1, kOneSwap},
      // Z\{z_y^b}, Z\{z_x^c} or Z\{z_y^b, z_x^c}; nothing of W°.
      {TraceId::kC5, "C5", true, 2, 0, {{1U, 0U}, {2U, 0U}, {3U, 0U}}},
      {TraceId::kD1, "D1", false, 0, 0, {{0U, 0U}}},
      {TraceId::kD2, "D2", false, 1, 1, {{1U, 1U}}},
      {TraceId::kD3, "D3", false, 1, 1, kOneSwap},
      {TraceId::kD4, "D4", false, 1, 1, kOneSwap},
      {TraceId::kD3Star, "D3*", false, 1, 1, kOneSwap},
      {TraceId::kD4Star, "D4*", false, 1, 1, kOneSwap},
      {TraceId::kE1, "E1", false, 0, 2, {{0U, 1U}, {0U, 2U}, {0U, 3U}}},
      {TraceId::kE2, "E2", false, 1, 1, kOneSwap},
      {TraceId::kE3, "E3", false, 1, 0, {{0U, 0U}, {1U, 0U}}},
      {TraceId::kE4, "E4", false, 0, 1, {{0U, 0U}, {0U, 1U}}},
  }};
  return rules;
}

std::uint64_t slots_to_mask(unsigned slots, const std::vector<Vertex>& symbols) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if ((slots >> i) & 1U) out |= std::uint64_t{1} << symbols[i];
  }
  return out;
}

void resolve(const TraceRule& rule, const TraceCondition& cond, std::uint64_t w_ref,
             const TraceFrame& frame) {
  const std::string name(rule.name);
  if (static_cast<int>(cond.z_symbols.size()) != rule.z_arity ||
      static_cast<int>(cond.w_symbols.size()) != rule.w_arity) {
    throw TraceError(name + ": expected " + std::to_string(rule.z_arity) + " Z symbol(s) and " +
                     std::to_string(rule.w_arity) + " W symbol(s)");
  }
  for (Vertex z : cond.z_symbols) {
    if (z < 0 || z >= 64 || !((frame.z >> z) & 1U)) {
      throw TraceError(name + ": symbol " + std::to_string(z) + " is not in Z");
    }
  }
  for (Vertex w : cond.w_symbols) {
    if (w < 0 || w >= 64 || !((w_ref >> w) & 1U)) {
      throw TraceError(name + ": symbol " + std::to_string(w) + " is not in the reference W set");
    }
  }
}

}  // namespace

std::span<const TraceRule> trace_rules() { return table(); }

const TraceRule& trace_rule(TraceId id) { return table()[static_cast<std::size_t>(id)]; }

std::string_view trace_name(TraceId id) { return trace_rule(id).name; }

bool config_satisfies(TokenConfig a, const TraceCondition& cond, const TraceFrame& frame) {
  const TraceRule& rule = trace_rule(cond.id);
  const std::uint64_t w_ref = rule.uses_w_circ ? frame.w_circ : frame.w;
  resolve(rule, cond, w_ref, frame);
  const std::uint64_t missing = frame.z & ~a.mask();
  const std::uint64_t held = a.mask() & w_ref;
  for (const TraceShape& shape : rule.shapes) {
    if (shape.missing_z && missing != slots_to_mask(*shape.missing_z, cond.z_symbols)) continue;
    if (shape.held_w && held != slots_to_mask(*shape.held_w, cond.w_symbols)) continue;
    return true;
  }
  return false;
}

bool check_trace(const TokenPath& p, const TraceCondition& cond, const TraceFrame& frame) {
  const TraceRule& rule = trace_rule(cond.id);
  resolve(rule, cond, rule.uses_w_circ ? frame.w_circ : frame.w, frame);
  for (TokenConfig a : p.inner_configs()) {
    if (!config_satisfies(a, cond, frame)) return false;
  }
  return true;
}

}  // namespace tokgraph
