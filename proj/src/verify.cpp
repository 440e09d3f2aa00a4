#include "tokgraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tokgraph/connectivity.hpp"
#include "tokgraph/graph6.hpp"
#include "tokgraph/proof_engine.hpp"
#include "tokgraph/token_graph.hpp"
#include "tokgraph/trees.hpp"

namespace tokgraph {

namespace {

// Runs fn(i) for i in [0, count) on `jobs` threads; results keep index order.
template <typename R>
std::vector<R> parallel_map(std::size_t count, int jobs, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(count);
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          out[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<std::pair<Graph, int>> tree_units(int n_max) {
  std::vector<std::pair<Graph, int>> units;
  for (int n = 2; n <= n_max; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      for (int k = 1; k <= n - 1; ++k) units.emplace_back(t, k);
    }
  }
  return units;
}

VerificationRecord base_record(std::string mode, const Graph& g, int k) {
  VerificationRecord r;
  r.mode = std::move(mode);
  r.graph_id = emit_graph6(g);
  r.n = g.order();
  r.k = k;
  return r;
}

bool guarded(VerificationRecord& r, int n, int k) {
  if (binomial(n, k) > TokenGraph::kMaxVertices) {
    r.status = Status::kSkipped;
    r.reason = "C(" + std::to_string(n) + "," + std::to_string(k) + ") above materialization guard";
    return true;
  }
  return false;
}

nlohmann::json config_json(TokenConfig c) { return c.members(); }

// Unordered pairs at distance two, in lexicographic config order.
std::vector<std::pair<TokenConfig, TokenConfig>> distance_two_pairs(const TokenGraph& tg) {
  const Graph& h = tg.graph();
  std::vector<std::pair<TokenConfig, TokenConfig>> out;
  std::vector<int> mark(h.order(), -1);
  for (Vertex i = 0; i < h.order(); ++i) {
    mark[i] = i;
    for (Vertex j : h.neighbors(i)) mark[j] = i;
    std::vector<Vertex> far;
    for (Vertex j : h.neighbors(i)) {
      for (Vertex l : h.neighbors(j)) {
        if (mark[l] != i) {
          mark[l] = i;
          if (l > i) far.push_back(l);
        }
      }
    }
    std::sort(far.begin(), far.end());
    for (Vertex l : far) out.emplace_back(tg.config(i), tg.config(l));
  }
  return out;
}

constexpr std::size_t kMaxDumpedInstances = 5;

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kConfirmed: return "confirmed";
    case Status::kViolated: return "violated";
    case Status::kSkipped: return "skipped";
  }
  return "?";
}

nlohmann::json to_json(const VerificationRecord& r) {
  nlohmann::json j;
  j["mode"] = r.mode;
  j["graph6"] = r.graph_id;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.m) j["m"] = *r.m;
  auto opt = [&](const char* key, const std::optional<int>& v) {
    j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  opt("delta", r.delta);
  opt("kappa", r.kappa);
  opt("lambda", r.lambda);
  j["status"] = std::string(to_string(r.status));
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.paths) {
    const PathStats& p = *r.paths;
    nlohmann::json s;
    s["pairs"] = p.pair_count;
    s["case1_pairs"] = p.case1_pairs;
    s["case2_pairs"] = p.case2_pairs;
    s["min_family_size"] = p.min_family_size;
    s["max_excess_case1"] =
        p.max_excess_case1 ? nlohmann::json(*p.max_excess_case1) : nlohmann::json(nullptr);
    s["max_excess_case2"] =
        p.max_excess_case2 ? nlohmann::json(*p.max_excess_case2) : nlohmann::json(nullptr);
    s["excess_case1"] = p.attained_case1;
    s["excess_case2"] = p.attained_case2;
    s["step1_mismatches"] = p.step1_mismatches;
    s["trace_failures"] = p.trace_failures;
    s["failures"] = p.failures;
    s["subcases"] = p.subcases;
    j["paths"] = s;
  }
  if (!r.instances.empty()) j["instances"] = r.instances;
  return j;
}

VerificationRecord theorem_record(const Graph& tree, int k) {
  VerificationRecord r = base_record("theorem", tree, k);
  if (guarded(r, tree.order(), k)) return r;
  const TokenGraph tg(tree, k);
  const Graph& h = tg.graph();
  r.delta = min_token_degree(tree, k);
  r.kappa = vertex_connectivity(h);
  r.lambda = edge_connectivity(h);
  if (*r.kappa == *r.delta && *r.lambda == *r.delta) {
    r.status = Status::kConfirmed;
  } else {
    r.status = Status::kViolated;
    r.reason = "kappa, lambda, delta differ";
  }
  return r;
}

std::vector<VerificationRecord> cmd_theorem(int n_max, int jobs) {
  if (n_max < 2 || n_max > 10) throw std::invalid_argument("theorem: n-max must lie in [2, 10]");
  const auto units = tree_units(n_max);
  return parallel_map<VerificationRecord>(
      units.size(), jobs, [&](std::size_t i) { return theorem_record(units[i].first, units[i].second); });
}

VerificationRecord paths_record(const Graph& tree, int k) {
  VerificationRecord r = base_record("paths", tree, k);
  if (guarded(r, tree.order(), k)) return r;
  const TokenGraph tg(tree, k);
  const int delta = min_token_degree(tree, k);
  r.delta = delta;
  PathStats stats;
  stats.min_family_size = -1;

  for (const auto& [X, Y] : distance_two_pairs(tg)) {
    ++stats.pair_count;
    try {
      FamilyConstruction fc = construct_disjoint_family(tree, k, X, Y, delta);
      const int excess = delta - fc.m;
      const int size = static_cast<int>(fc.family.size());
      if (stats.min_family_size < 0 || size < stats.min_family_size) stats.min_family_size = size;
      auto& max_excess = fc.is_case1() ? stats.max_excess_case1 : stats.max_excess_case2;
      max_excess = std::max(max_excess.value_or(excess), excess);
      (fc.is_case1() ? stats.attained_case1 : stats.attained_case2).insert(excess);
      ++(fc.is_case1() ? stats.case1_pairs : stats.case2_pairs);
      ++stats.subcases[(fc.is_case1() ? "1:" : "2:") + fc.subcase];
    } catch (const EngineError& e) {
      ++stats.failures;
      if (e.kind() == EngineError::Kind::kTraceFailure) ++stats.trace_failures;
      if (e.kind() == EngineError::Kind::kStepOneSize) ++stats.step1_mismatches;
      if (r.instances.size() < kMaxDumpedInstances) {
        nlohmann::json dump;
        dump["graph6"] = r.graph_id;
        dump["k"] = k;
        dump["X"] = config_json(X);
        dump["Y"] = config_json(Y);
        dump["error"] = std::string(to_string(e.kind()));
        dump["detail"] = e.what();
        r.instances.push_back(std::move(dump));
      }
    }
  }
  if (stats.min_family_size < 0) stats.min_family_size = 0;
  if (stats.failures > 0) {
    r.status = Status::kViolated;
    r.reason = std::to_string(stats.failures) + " pair(s) failed";
  } else {
    r.status = Status::kConfirmed;
  }
  r.paths = std::move(stats);
  return r;
}

std::vector<VerificationRecord> cmd_paths(int n_max, int jobs) {
  if (n_max < 2 || n_max > 8) throw std::invalid_argument("paths: n-max must lie in [2, 8]");
  const auto units = tree_units(n_max);
  return parallel_map<VerificationRecord>(
      units.size(), jobs, [&](std::size_t i) { return paths_record(units[i].first, units[i].second); });
}

VerificationRecord hfamily_record(int m) {
  const Graph h = bridged_cliques(m);
  VerificationRecord r = base_record("hfamily", h, 2);
  r.m = m;
  if (guarded(r, h.order(), 2)) return r;
  const TokenGraph tg(h, 2);
  r.delta = min_token_degree(h, 2);
  r.kappa = vertex_connectivity(tg.graph());
  r.lambda = edge_connectivity(tg.graph());
  const bool ok = *r.kappa == m - 1 && *r.lambda == m - 1 && *r.delta == 2 * (m - 2);
  r.status = ok ? Status::kConfirmed : Status::kViolated;
  if (!ok) r.reason = "expected kappa=lambda=" + std::to_string(m - 1) +
                      ", delta=" + std::to_string(2 * (m - 2));
  return r;
}

std::vector<VerificationRecord> cmd_hfamily(int m_min, int m_max, int jobs) {
  if (m_min < 3 || m_max > 6 || m_min > m_max) {
    throw std::invalid_argument("hfamily: need 3 <= m-min <= m-max <= 6");
  }
  return parallel_map<VerificationRecord>(static_cast<std::size_t>(m_max - m_min + 1), jobs,
                                          [&](std::size_t i) {
                                            return hfamily_record(m_min + static_cast<int>(i));
                                          });
}

std::vector<VerificationRecord> conjecture_records(const Graph& g, const ConjectureOptions& opts) {
  const int n = g.order();
  std::vector<VerificationRecord> out;
  auto skipped = [&](int k, std::string reason) {
    VerificationRecord r = base_record("conjecture", g, k);
    r.status = Status::kSkipped;
    r.reason = std::move(reason);
    out.push_back(std::move(r));
    return out;
  };
  if (!is_connected(g)) return skipped(0, "disconnected");
  if (auto gi = girth(g); gi && *gi < 5) return skipped(0, "girth<5");

  int k_lo = opts.all_k ? 1 : 2;
  int k_hi = opts.all_k ? n - 1 : n - 2;
  if (opts.k) k_lo = k_hi = *opts.k;
  if (opts.k && (*opts.k < 1 || *opts.k > n - 1)) return skipped(*opts.k, "k outside [1, n-1]");
  if (k_lo > k_hi) return skipped(0, "no k in range");

  for (int k = k_lo; k <= k_hi; ++k) {
    VerificationRecord r = base_record("conjecture", g, k);
    if (!guarded(r, n, k)) {
      const TokenGraph tg(g, k);
      r.delta = min_token_degree(g, k);
      r.kappa = vertex_connectivity(tg.graph());
      r.lambda = edge_connectivity(tg.graph());
      if (*r.kappa == *r.delta) {
        r.status = Status::kConfirmed;
      } else {
        r.status = Status::kViolated;
        r.reason = "kappa < delta: counterexample candidate";
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationRecord> cmd_conjecture(const std::vector<Graph>& graphs,
                                               const ConjectureOptions& opts) {
  auto per_graph = parallel_map<std::vector<VerificationRecord>>(
      graphs.size(), opts.jobs, [&](std::size_t i) { return conjecture_records(graphs[i], opts); });
  std::vector<VerificationRecord> out;
  for (auto& batch : per_graph) {
    for (auto& r : batch) out.push_back(std::move(r));
  }
  return out;
}

bool any_violated(const std::vector<VerificationRecord>& records) {
  return std::any_of(records.begin(), records.end(),
                     [](const VerificationRecord& r) { return r.status == Status::kViolated; });
}

std::string summary_table(const std::vector<VerificationRecord>& records) {
  struct Row {
    long long units = 0, confirmed = 0, violated = 0, skipped = 0;
  };
  std::map<std::pair<std::string, int>, Row> rows;
  long long pairs = 0;
  std::optional<int> max1, max2;
  std::set<int> seen1, seen2;
  for (const auto& r : records) {
    Row& row = rows[{r.mode, r.n}];
    ++row.units;
    if (r.status == Status::kConfirmed) ++row.confirmed;
    if (r.status == Status::kViolated) ++row.violated;
    if (r.status == Status::kSkipped) ++row.skipped;
    if (r.paths) {
      pairs += r.paths->pair_count;
      if (r.paths->max_excess_case1) max1 = std::max(max1.value_or(-1000), *r.paths->max_excess_case1);
      if (r.paths->max_excess_case2) max2 = std::max(max2.value_or(-1000), *r.paths->max_excess_case2);
      seen1.insert(r.paths->attained_case1.begin(), r.paths->attained_case1.end());
      seen2.insert(r.paths->attained_case2.begin(), r.paths->attained_case2.end());
    }
  }
  std::ostringstream out;
  out << std::left << std::setw(12) << "mode" << std::right << std::setw(4) << "n" << std::setw(9)
      << "units" << std::setw(11) << "confirmed" << std::setw(10) << "violated" << std::setw(9)
      << "skipped" << "\n";
  Row total;
  for (const auto& [key, row] : rows) {
    out << std::left << std::setw(12) << key.first << std::right << std::setw(4) << key.second
        << std::setw(9) << row.units << std::setw(11) << row.confirmed << std::setw(10)
        << row.violated << std::setw(9) << row.skipped << "\n";
    total.units += row.units;
    total.confirmed += row.confirmed;
    total.violated += row.violated;
    total.skipped += row.skipped;
  }
  out << std::left << std::setw(12) << "total" << std::right << std::setw(4) << "" << std::setw(9)
      << total.units << std::setw(11) << total.confirmed << std::setw(10) << total.violated
      << std::setw(9) << total.skipped << "\n";
  if (pairs > 0) {
    auto list = [](const std::set<int>& s) {
      std::string t;
      for (int v : s) t += (t.empty() ? "" : ",") + std::to_string(v);
      return "{" + t + "}";
    };
    auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    out << "distance-2 pairs: " << pairs << "\n";
    out << "case 1: max(delta-m) = " << show(max1) << ", values " << list(seen1) << "\n";
    out << "case 2: max(delta-m) = " << show(max2) << ", values " << list(seen2) << "\n";
  }
  return out.str();
}

}  // namespace tokgraph
