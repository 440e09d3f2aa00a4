#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "tokgraph/graph.hpp"

namespace tokgraph {

enum class Status { kConfirmed, kViolated, kSkipped };

std::string_view to_string(Status s);

/// Aggregate over every distance-two pair of one (tree, k) unit.
struct PathStats {
  long long pair_count = 0;
  long long case1_pairs = 0;
  long long case2_pairs = 0;
  int min_family_size = 0;
  /// Largest delta - m observed, per case; empty if the case never occurred.
  std::optional<int> max_excess_case1;
  std::optional<int> max_excess_case2;
  std::set<int> attained_case1;  // distinct values of delta - m
  std::set<int> attained_case2;
  long long step1_mismatches = 0;
  long long trace_failures = 0;
  long long failures = 0;
  std::map<std::string, long long> subcases;
};

struct VerificationRecord {
  std::string mode;      // theorem, paths, hfamily, conjecture
  std::string graph_id;  // graph6
  int n = 0;
  int k = 0;
  std::optional<int> delta, kappa, lambda;
  Status status = Status::kConfirmed;
  std::string reason;  // skip reason or violation summary
  std::optional<int> m;  // hfamily parameter
  std::optional<PathStats> paths;
  /// Reproduction data for violated path records (graph6, k, X, Y, label, error).
  std::vector<nlohmann::json> instances;
};

nlohmann::json to_json(const VerificationRecord& r);

/// Every tree with 2 <= n <= n_max and every k in [1, n-1].
std::vector<VerificationRecord> cmd_theorem(int n_max, int jobs = 1);

/// Proof-engine sweep over every distance-two pair, trees with n <= n_max.
std::vector<VerificationRecord> cmd_paths(int n_max, int jobs = 1);

/// F_2 of two K_m joined by an edge, for m in [m_min, m_max].
std::vector<VerificationRecord> cmd_hfamily(int m_min, int m_max, int jobs = 1);

struct ConjectureOptions {
  std::optional<int> k;  // a single k
  bool all_k = false;    // k in [1, n-1] instead of [2, n-2]
  int jobs = 1;
};

/// kappa(F_k(G)) against delta(F_k(G)) for connected graphs of girth >= 5.
std::vector<VerificationRecord> cmd_conjecture(const std::vector<Graph>& graphs,
                                               const ConjectureOptions& opts);

/// Single-unit entry points, used by the commands and for reproduction.
VerificationRecord theorem_record(const Graph& tree, int k);
VerificationRecord paths_record(const Graph& tree, int k);
VerificationRecord hfamily_record(int m);
std::vector<VerificationRecord> conjecture_records(const Graph& g, const ConjectureOptions& opts);

bool any_violated(const std::vector<VerificationRecord>& records);

/// Human summary of a command's records.
std::string summary_table(const std::vector<VerificationRecord>& records);

}  // namespace tokgraph
