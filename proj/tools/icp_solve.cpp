// Copyright 2026 The icp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: runs a built-in benchmark or a problem file under
// one or all propagation variants and reports search statistics.

#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icp/benchmarks.hpp"
#include "icp/search.hpp"

namespace {

using icp::Csp;
using icp::SearchConfig;
using icp::SearchResult;
using icp::Variant;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string problem;
  long n = 0;
  std::string variant = "du";
  std::string division = "weak";
  std::string schedule = "generated";
  std::string goal;
  std::string stats = "table";
  bool print_solutions = false;
  uint64_t max_nodes = 0;
  bool compare = false;
};

struct Run {
  Variant variant;
  SearchResult result;
};

Csp load_problem(const Options& opt) {
  const std::string prefix = "file:";
  if (opt.problem.rfind(prefix, 0) == 0) {
    return icp::parse_problem_file(opt.problem.substr(prefix.size()));
  }
  return icp::build_benchmark({opt.problem, opt.n});
}

json ops_json(const icp::OpCounters& ops) {
  return {{"root", ops.root},   {"exp", ops.exp},       {"div", ops.div},
          {"multI", ops.multI}, {"multF", ops.multF},   {"sum", ops.sum},
          {"q_div", ops.q_div}, {"q_sum", ops.q_sum},   {"total", ops.total()}};
}

std::string values_text(const Csp& csp, const std::vector<icp::Integer>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += csp.variables[i].name + "=" + values[i].str();
  }
  return out;
}

json report_json(const Csp& csp, const Run& run) {
  const icp::SearchStats& s = run.result.stats;
  json j = {{"variant", icp::to_string(run.variant)},
            {"nvar", s.nvar},
            {"nDRF", s.ndrf},
            {"nodes", s.nodes},
            {"solutions", s.solutions},
            {"drf_applications", s.drf_applications},
            {"percent_effective", s.percent_effective()},
            {"complete", s.complete},
            {"elapsed", s.elapsed_seconds},
            {"ops", ops_json(s.ops)}};
  if (csp.goal == icp::Goal::Maximize && run.result.best) {
    j["objective"] = run.result.incumbents.back().str();
    j["best"] = values_text(csp, *run.result.best);
  }
  return j;
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

void print_table(const std::vector<Run>& runs) {
  std::printf("%-8s %6s %6s %12s %10s %14s %7s %9s %12s %12s %12s %12s %12s %12s %12s %12s %14s\n",
              "variant", "nvar", "nDRF", "nodes", "solutions", "DRFs applied",
              "%eff", "time(s)", "root", "exp", "div", "multI", "multF", "sum",
              "q_div", "q_sum", "total ops");
  for (const Run& r : runs) {
    const icp::SearchStats& s = r.result.stats;
    std::printf(
        "%-8s %6zu %6zu %12llu %10llu %14llu %7s %9s %12llu %12llu %12llu %12llu %12llu %12llu %12llu %12llu %14llu%s\n",
        icp::to_string(r.variant), s.nvar, s.ndrf,
        static_cast<unsigned long long>(s.nodes),
        static_cast<unsigned long long>(s.solutions),
        static_cast<unsigned long long>(s.drf_applications),
        fixed(s.percent_effective(), 2).c_str(),
        fixed(s.elapsed_seconds, 3).c_str(),
        static_cast<unsigned long long>(s.ops.root),
        static_cast<unsigned long long>(s.ops.exp),
        static_cast<unsigned long long>(s.ops.div),
        static_cast<unsigned long long>(s.ops.multI),
        static_cast<unsigned long long>(s.ops.multF),
        static_cast<unsigned long long>(s.ops.sum),
        static_cast<unsigned long long>(s.ops.q_div),
        static_cast<unsigned long long>(s.ops.q_sum),
        static_cast<unsigned long long>(s.ops.total()),
        s.complete ? "" : "  (incomplete)");
  }
}

void print_csv(const std::vector<Run>& runs) {
  std::cout << "variant,nvar,nDRF,nodes,solutions,drf_applications,"
               "percent_effective,complete,elapsed,root,exp,div,multI,multF,"
               "sum,q_div,q_sum,total_ops\n";
  for (const Run& r : runs) {
    const icp::SearchStats& s = r.result.stats;
    std::cout << icp::to_string(r.variant) << ',' << s.nvar << ',' << s.ndrf
              << ',' << s.nodes << ',' << s.solutions << ','
              << s.drf_applications << ',' << fixed(s.percent_effective(), 4)
              << ',' << (s.complete ? "true" : "false") << ','
              << fixed(s.elapsed_seconds, 6) << ',' << s.ops.root << ','
              << s.ops.exp << ',' << s.ops.div << ',' << s.ops.multI << ','
              << s.ops.multF << ',' << s.ops.sum << ',' << s.ops.q_div << ','
              << s.ops.q_sum << ',' << s.ops.total() << '\n';
  }
}

int run(const Options& opt) {
  Csp csp = load_problem(opt);
  if (opt.goal == "all") {
    csp.goal = icp::Goal::All;
  } else if (opt.goal == "maximize" && csp.goal != icp::Goal::Maximize) {
    std::cerr << "error: the problem has no objective to maximize\n";
    return kExitUsage;
  }

  SearchConfig base;
  base.division = opt.division == "strong" ? icp::DivisionMode::Strong
                                           : icp::DivisionMode::Weak;
  base.schedule = opt.schedule == "cycle" ? icp::ScheduleMode::Cycle
                                          : icp::ScheduleMode::Scheduled;
  base.max_nodes = opt.max_nodes;
  base.keep_solutions = opt.print_solutions || opt.compare;

  std::vector<Variant> variants;
  if (opt.compare) {
    variants.assign(std::begin(icp::kAllVariants), std::end(icp::kAllVariants));
  } else {
    variants.push_back(*icp::parse_variant(opt.variant));
  }
  std::vector<std::future<SearchResult>> futures;
  for (Variant v : variants) {
    SearchConfig config = base;
    config.variant = v;
    futures.push_back(std::async(std::launch::async, [&csp, config] {
      return icp::solve(csp, config);
    }));
  }
  std::vector<Run> runs;
  for (size_t i = 0; i < variants.size(); ++i) {
    runs.push_back({variants[i], futures[i].get()});
  }

  if (opt.print_solutions) {
    const SearchResult& r = runs.front().result;
    if (csp.goal == icp::Goal::Maximize) {
      for (size_t i = 0; i < r.solutions.size(); ++i) {
        std::cout << "incumbent " << r.incumbents[i].str() << ": "
                  << values_text(csp, r.solutions[i]) << '\n';
      }
    } else {
      for (const auto& s : r.solutions) std::cout << values_text(csp, s) << '\n';
    }
  }

  if (opt.stats == "json") {
    json reports = json::array();
    for (const Run& r : runs) reports.push_back(report_json(csp, r));
    std::cout << (opt.compare ? reports : reports.front()).dump(2) << '\n';
  } else if (opt.stats == "csv") {
    print_csv(runs);
  } else {
    print_table(runs);
  }

  if (opt.compare) {
    auto sorted_solutions = [](SearchResult r) {
      std::sort(r.solutions.begin(), r.solutions.end());
      return r.solutions;
    };
    auto reference = sorted_solutions(runs.front().result);
    for (const Run& r : runs) {
      if (sorted_solutions(r.result) != reference) {
        std::cerr << "warning: variant " << icp::to_string(r.variant)
                  << " found a different solution set\n";
      }
    }
  }
  if (csp.goal == icp::Goal::Maximize) {
    for (const Run& r : runs) {
      if (!r.result.best && r.result.stats.complete) return kExitInfeasible;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer interval constraint propagation solver"};
  Options opt;
  std::vector<std::string> problems = icp::benchmark_names();
  app.add_option("--problem", opt.problem,
                 "cubes, opt, fractions, kyoto, sumprod or file:PATH")
      ->required()
      ->check([&](const std::string& p) -> std::string {
        if (p.rfind("file:", 0) == 0) return "";
        for (const std::string& name : problems) {
          if (p == name) return "";
        }
        return "unknown problem '" + p + "'";
      });
  app.add_option("--n", opt.n,
                 "problem size: n for sumprod, bound for cubes and opt, "
                 "largest base for kyoto")
      ->check(CLI::PositiveNumber);
  app.add_option("--variant", opt.variant, "du, do, pu, po, fm, fs or fe")
      ->check(CLI::IsMember({"du", "do", "pu", "po", "fm", "fs", "fe"}));
  app.add_option("--division", opt.division, "weak or strong")
      ->check(CLI::IsMember({"weak", "strong"}));
  app.add_option("--schedule", opt.schedule, "generated or cycle")
      ->check(CLI::IsMember({"generated", "cycle"}));
  app.add_option("--goal", opt.goal, "all or maximize (default: from the problem)")
      ->check(CLI::IsMember({"all", "maximize"}));
  app.add_option("--stats", opt.stats, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--print-solutions", opt.print_solutions, "print every solution");
  app.add_option("--max-nodes", opt.max_nodes, "stop after this many nodes");
  app.add_flag("--compare", opt.compare, "run all seven variants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return run(opt);
  } catch (const icp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
