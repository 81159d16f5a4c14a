// Copyright 2026 The gvks Authors
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

// gvks generate | solve | validate | oracle | bench
//
// Exit codes: 0 ok, 1 unreadable or malformed input, 2 validation failure,
// 3 budget exhaustion.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gvks/gvks_solver.hpp"
#include "gvks/io.hpp"
#include "gvks/oracle.hpp"
#include "gvks/validate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct Flags {
  double eps = 0.1;
  std::size_t c_max = 2;
  std::size_t sum_depth = 2;
  std::size_t budget = 0;
  bool rotations = false;
  bool oracle = false;
  std::string svg;
  std::uint64_t seed = 1;
  std::string profile = "uniform";
  std::size_t n = 6;
  std::size_t d = 1;
  std::size_t count = 10;
  std::string instance_path;
  std::string packing_path;
  std::string output;
  std::string report;
};

// Worker cap from GVKS_THREADS; hardware concurrency otherwise.
std::size_t thread_cap() {
  std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GVKS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) cap = std::min<std::size_t>(cap, static_cast<std::size_t>(v));
  }
  return cap;
}

gvks::SolverParams params_from(const Flags& f, std::size_t threads) {
  gvks::SolverParams p = gvks::SolverParams::from_eps(f.eps);
  p.c_max = f.c_max;
  p.sum_depth = f.sum_depth;
  p.config_budget = f.budget;
  p.threads = threads;
  return p;
}

gvks::KnapsackInstance load_instance(const std::string& path) {
  return gvks::io::parse_instance(gvks::io::read_file(path));
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    gvks::io::write_file(path, text);
  }
}

void print_report(const gvks::ValidityReport& report) {
  for (const gvks::Violation& v : report) std::cout << v.describe() << "\n";
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_generate(const Flags& f) {
  const gvks::KnapsackInstance inst = gvks::io::generate_instance(
      f.seed, f.n, f.d, gvks::io::parse_profile(f.profile), f.rotations);
  emit(f.output, gvks::io::instance_to_json(inst));
  return kOk;
}

int cmd_solve(const Flags& f) {
  gvks::KnapsackInstance inst = load_instance(f.instance_path);
  if (f.rotations) inst.rotations_allowed = true;

  gvks::io::RunReport report;
  report.n = inst.items.size();
  report.d = inst.d;
  report.rotations = inst.rotations_allowed;
  report.params = params_from(f, thread_cap());

  const auto start = std::chrono::steady_clock::now();
  gvks::GvksResult result = gvks::solve_gvks_detailed(inst, report.params);
  report.ms = elapsed_ms(start);
  report.solver_profit = result.packing.packed_profit;
  report.stats = result.stats;

  const gvks::ValidityReport violations =
      gvks::validate_packing(result.packing, inst);
  if (f.oracle) {
    report.oracle_profit = gvks::oracle::exact_gvks_small(inst).profit;
  }

  emit(f.output, gvks::io::packing_to_json(result.packing));
  const std::string report_text = report.to_json();
  if (!f.report.empty()) {
    gvks::io::write_file(f.report, report_text);
  } else {
    std::cerr << report_text;
  }
  if (!f.svg.empty()) {
    gvks::io::write_file(f.svg, gvks::io::render_svg(result.packing, inst));
  }
  if (!violations.empty()) {
    std::cerr << "solver produced an invalid packing:\n";
    for (const gvks::Violation& v : violations) std::cerr << v.describe() << "\n";
    return kInvalid;
  }
  return kOk;
}

int cmd_validate(const Flags& f) {
  const gvks::KnapsackInstance inst = load_instance(f.instance_path);
  const gvks::Packing packing =
      gvks::io::parse_packing(gvks::io::read_file(f.packing_path));
  gvks::ValidityReport report;
  try {
    report = gvks::validate_packing(packing, inst);
  } catch (const gvks::StructuralError& e) {
    std::cout << e.what() << "\n";
    return kInvalid;
  }
  print_report(report);
  if (!f.svg.empty()) {
    gvks::io::write_file(f.svg, gvks::io::render_svg(packing, inst));
  }
  return report.empty() ? kOk : kInvalid;
}

int cmd_oracle(const Flags& f) {
  gvks::KnapsackInstance inst = load_instance(f.instance_path);
  if (f.rotations) inst.rotations_allowed = true;
  const gvks::oracle::ExactPacking exact = gvks::oracle::exact_gvks_small(inst);
  emit(f.output, gvks::io::packing_to_json(exact.witness));
  if (!f.svg.empty()) {
    gvks::io::write_file(f.svg, gvks::io::render_svg(exact.witness, inst));
  }
  return kOk;
}

struct BenchRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double solver = 0.0;
  std::optional<double> oracle;
  std::optional<double> ratio;
  std::uint64_t explored = 0;
  double ms = 0.0;
  std::string error;
};

int cmd_bench(const Flags& f) {
  const gvks::io::Profile profile = gvks::io::parse_profile(f.profile);
  const gvks::SolverParams params = params_from(f, 1);
  std::vector<BenchRow> rows(f.count);
  std::atomic<std::size_t> next{0};

  // Seeds fan out over workers; each solve is single-threaded.
  auto work = [&] {
    while (true) {
      const std::size_t r = next.fetch_add(1);
      if (r >= rows.size()) break;
      BenchRow& row = rows[r];
      row.seed = f.seed + r;
      const gvks::KnapsackInstance inst = gvks::io::generate_instance(
          row.seed, f.n, f.d, profile, f.rotations);
      row.n = inst.items.size();
      try {
        const auto start = std::chrono::steady_clock::now();
        const gvks::GvksResult res = gvks::solve_gvks_detailed(inst, params);
        row.ms = elapsed_ms(start);
        row.solver = res.packing.packed_profit;
        row.explored = res.stats.configs_explored;
        if (f.oracle) {
          gvks::io::RunReport rep;
          rep.solver_profit = row.solver;
          rep.oracle_profit = gvks::oracle::exact_gvks_small(inst).profit;
          row.oracle = rep.oracle_profit;
          row.ratio = rep.ratio();
        }
      } catch (const gvks::ResourceError& e) {
        row.error = e.what();
      }
    }
  };
  const std::size_t workers = std::min(thread_cap(), std::max<std::size_t>(1, f.count));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();

  std::ostringstream csv;
  csv.precision(10);
  csv << "seed,n,d,rotations,solver_profit,oracle_profit,ratio,configs_explored,ms\n";
  bool exhausted = false;
  for (const BenchRow& row : rows) {
    if (!row.error.empty()) {
      exhausted = true;
      std::cerr << "seed " << row.seed << ": " << row.error << "\n";
    }
    csv << row.seed << ',' << row.n << ',' << f.d << ','
        << (f.rotations ? 1 : 0) << ',' << row.solver << ',';
    if (row.oracle) csv << *row.oracle;
    csv << ',';
    if (row.ratio) csv << *row.ratio;
    csv << ',' << row.explored << ',' << row.ms << '\n';
  }
  emit(f.output, csv.str());
  return exhausted ? kBudget : kOk;
}

void add_solver_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--eps", f.eps, "Accuracy parameter in (0, 1/2)");
  cmd->add_option("--c-max", f.c_max, "Maximum containers per configuration");
  cmd->add_option("--sum-depth", f.sum_depth,
                  "Maximum number of item sides summed into a candidate");
  cmd->add_option("--budget", f.budget,
                  "Maximum configurations evaluated (0 = all)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(2,d) geometric knapsack solver"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* gen = app.add_subcommand("generate", "Write a random instance");
  gen->add_option("--seed", f.seed, "Random seed");
  gen->add_option("-n,--n", f.n, "Number of items");
  gen->add_option("-d,--d", f.d, "Number of weight dimensions");
  gen->add_option("--profile", f.profile,
                  "uniform | skewed-wide | skewed-tall | heavy-vector");
  gen->add_flag("--rotations", f.rotations, "Allow 90 degree rotations");
  gen->add_option("-o,--output", f.output, "Output file (default stdout)");

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", f.instance_path, "Instance JSON")->required();
  add_solver_flags(solve, f);
  solve->add_flag("--rotations", f.rotations, "Allow rotations");
  solve->add_flag("--oracle", f.oracle, "Also run the exact solver");
  solve->add_option("--svg", f.svg, "Write an SVG rendering");
  solve->add_option("-o,--output", f.output, "Packing JSON (default stdout)");
  solve->add_option("--report", f.report, "Run report JSON (default stderr)");

  CLI::App* val = app.add_subcommand("validate", "Check a packing");
  val->add_option("instance", f.instance_path, "Instance JSON")->required();
  val->add_option("packing", f.packing_path, "Packing JSON")->required();
  val->add_option("--svg", f.svg, "Write an SVG rendering");

  CLI::App* orc = app.add_subcommand("oracle", "Exact solution (small n)");
  orc->add_option("instance", f.instance_path, "Instance JSON")->required();
  orc->add_flag("--rotations", f.rotations, "Allow rotations");
  orc->add_option("--svg", f.svg, "Write an SVG rendering");
  orc->add_option("-o,--output", f.output, "Packing JSON (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "CSV over a seed range");
  add_solver_flags(bench, f);
  bench->add_option("--seed", f.seed, "First seed");
  bench->add_option("--count", f.count, "Number of seeds");
  bench->add_option("-n,--n", f.n, "Items per instance");
  bench->add_option("-d,--d", f.d, "Weight dimensions");
  bench->add_option("--profile", f.profile, "Generator profile");
  bench->add_flag("--rotations", f.rotations, "Allow rotations");
  bench->add_flag("--oracle", f.oracle, "Compute the exact optimum and ratio");
  bench->add_option("-o,--output", f.output, "CSV file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(f);
    if (solve->parsed()) return cmd_solve(f);
    if (val->parsed()) return cmd_validate(f);
    if (orc->parsed()) return cmd_oracle(f);
    if (bench->parsed()) return cmd_bench(f);
  } catch (const gvks::io::ParseError& e) {
    std::cerr << "malformed JSON at line " << e.line << ", column " << e.column
              << ": " << e.what() << "\n";
    return kBadInput;
  } catch (const gvks::ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
