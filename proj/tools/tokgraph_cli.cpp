// tokgraph: batch verification of connectivity in token graphs.
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "tokgraph/catalog.hpp"
#include "tokgraph/graph6.hpp"
#include "tokgraph/verify.hpp"

using namespace tokgraph;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void emit(const std::vector<VerificationRecord>& records, bool json_only) {
  for (const auto& r : records) std::cout << to_json(r).dump() << "\n";
  if (!json_only) std::cout << "\n" << summary_table(records);
  std::cout.flush();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity checks for token graphs F_k(G)"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_only = false;
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  app.add_flag("--json", json_only, "Print JSON records only");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  int theorem_n = 0;
  auto* theorem = app.add_subcommand("theorem", "kappa = lambda = delta of F_k(T) for all trees");
  theorem->add_option("--n-max", theorem_n, "Largest tree order")->required()->check(CLI::Range(2, 10));

  int paths_n = 0;
  auto* paths = app.add_subcommand("paths", "Disjoint-path construction for every distance-2 pair");
  paths->add_option("--n-max", paths_n, "Largest tree order")->required()->check(CLI::Range(2, 8));

  int m_min = 0, m_max = 0;
  auto* hfamily = app.add_subcommand("hfamily", "F_2 of two K_m joined by an edge");
  hfamily->add_option("--m-min", m_min, "Smallest m")->required()->check(CLI::Range(3, 6));
  hfamily->add_option("--m-max", m_max, "Largest m")->required()->check(CLI::Range(3, 6));

  std::string input;
  std::optional<int> conj_k;
  bool all_k = false;
  auto* conjecture = app.add_subcommand("conjecture", "kappa = delta of F_k(G) for girth >= 5");
  conjecture->add_option("--input", input, "graph6 file, one graph per line")->required();
  auto* k_opt = conjecture->add_option("--k", conj_k, "A single k");
  conjecture->add_flag("--all-k", all_k, "Use every k in [1, n-1] instead of [2, n-2]")
      ->excludes(k_opt);

  int catalog_n = 0;
  int girth_min = 0;
  bool connected_only = false;
  auto* catalog = app.add_subcommand("catalog", "Write all graphs up to isomorphism as graph6");
  catalog->add_option("--n-max", catalog_n, "Largest order")->required()->check(CLI::Range(1, 9));
  catalog->add_option("--girth-min", girth_min, "Keep graphs whose girth is at least this");
  catalog->add_flag("--connected", connected_only, "Keep connected graphs only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*theorem) {
      auto records = cmd_theorem(theorem_n, jobs);
      emit(records, json_only);
      return any_violated(records) ? kExitViolation : 0;
    }
    if (*paths) {
      auto records = cmd_paths(paths_n, jobs);
      emit(records, json_only);
      return any_violated(records) ? kExitViolation : 0;
    }
    if (*hfamily) {
      if (m_min > m_max) {
        std::cerr << "hfamily: --m-min must not exceed --m-max\n";
        return kExitUsage;
      }
      auto records = cmd_hfamily(m_min, m_max, jobs);
      emit(records, json_only);
      return any_violated(records) ? kExitViolation : 0;
    }
    if (*conjecture) {
      std::vector<Graph> graphs;
      try {
        graphs = read_graph6_file(input);
      } catch (const std::exception& e) {
        std::cerr << "conjecture: " << e.what() << "\n";
        return kExitUsage;
      }
      ConjectureOptions opts;
      opts.k = conj_k;
      opts.all_k = all_k;
      opts.jobs = jobs;
      // A violation here is a finding, not a failure.
      emit(cmd_conjecture(graphs, opts), json_only);
      return 0;
    }
    if (*catalog) {
      for (const auto& level : enumerate_graphs_up_to(catalog_n)) {
        for (const Graph& g : level) {
          if (connected_only && !is_connected(g)) continue;
          if (girth_min > 0) {
            auto gi = girth(g);
            if (gi && *gi < girth_min) continue;
          }
          std::cout << emit_graph6(g) << "\n";
        }
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
