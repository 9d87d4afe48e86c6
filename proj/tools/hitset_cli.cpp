// hitset: solve, generate, verify and benchmark disk hitting set instances.
//
// Exit codes: 0 success, 1 verification found an unhit disk, 2 infeasible
// instance, 3 failed precondition check, 64 usage error, 65 bad input data
// or oracle size guard.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hitset/bench.hpp"
#include "hitset/error.hpp"
#include "hitset/io.hpp"
#include "hitset/oracle.hpp"
#include "hitset/solver.hpp"

namespace {

constexpr int kExitUnhit = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitValidation = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

int exit_code_for(const hitset::Error& e) {
  switch (e.code()) {
    case hitset::ErrorCode::Infeasible:
    case hitset::ErrorCode::Infeasible1D:
      return kExitInfeasible;
    case hitset::ErrorCode::PrereqViolated:
    case hitset::ErrorCode::RadiusMismatch:
      return kExitValidation;
    default:
      return kExitData;
  }
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path && *path != "-") {
    hitset::write_file(*path, text);
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hitting sets for line-constrained and line-separable disks"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file and write a solution file");
  std::string solve_input;
  std::optional<double> unit_radius;
  bool validate = false;
  std::optional<std::string> solve_output;
  solve_cmd->add_option("input,--input", solve_input, "Instance file")->required();
  solve_cmd->add_option("--unit", unit_radius, "Common disk radius; enables the envelope index");
  solve_cmd->add_flag("--validate", validate, "Check the single-intersection property first (O(m^2))");
  solve_cmd->add_option("-o,--output", solve_output, "Solution file (default: stdout)");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  hitset::GenConfig config;
  std::string kind_name = "line_constrained";
  double r_min = config.radius_range.first;
  double r_max = config.radius_range.second;
  std::optional<double> min_gap;
  std::optional<std::string> gen_out;
  gen_cmd->add_option("--n", config.n, "Number of points")->capture_default_str();
  gen_cmd->add_option("--m", config.m, "Number of disks")->capture_default_str();
  gen_cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--kind", kind_name, "line_constrained | unit_separable | separable_from_constrained")
      ->capture_default_str();
  gen_cmd->add_option("--coord-range", config.coord_range, "Coordinate half-range")->capture_default_str();
  gen_cmd->add_option("--rmin", r_min, "Smallest radius")->capture_default_str();
  gen_cmd->add_option("--rmax", r_max, "Largest radius")->capture_default_str();
  gen_cmd->add_option("--min-gap", min_gap, "Minimum spacing of x-coordinates (default 1e-6 * range)");
  gen_cmd->add_option("-o,--out", gen_out, "Instance file (default: stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check that a solution hits every disk");
  std::string verify_input;
  std::string verify_solution_path;
  verify_cmd->add_option("--input", verify_input, "Instance file")->required();
  verify_cmd->add_option("--solution", verify_solution_path, "Solution file")->required();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive search (at most 20 points)");
  std::string oracle_input;
  oracle_cmd->add_option("input,--input", oracle_input, "Instance file")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver over a grid of n = m sizes");
  std::vector<std::size_t> sizes{1000, 2000, 4000};
  std::size_t seeds = 1;
  std::size_t repeats = 3;
  std::optional<std::string> csv_path;
  bench_cmd->add_option("--sizes", sizes, "Comma-separated sizes")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--seeds", seeds, "Seeds per size")->capture_default_str();
  bench_cmd->add_option("--repeats", repeats, "Runs per cell; the median is reported")->capture_default_str();
  bench_cmd->add_option("--csv", csv_path, "CSV output (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      const hitset::RawInstance raw = hitset::parse_instance(hitset::read_file(solve_input));
      hitset::SolveOptions options;
      options.unit_radius = unit_radius;
      options.validate = validate;
      const hitset::HittingSet solution = hitset::solve_raw(raw, options);
      emit(solve_output, hitset::format_solution(solution));
      return 0;
    }
    if (*gen_cmd) {
      const auto kind = hitset::parse_gen_kind(kind_name);
      if (!kind) {
        std::cerr << "unknown kind '" << kind_name << "'\n";
        return kExitUsage;
      }
      config.kind = *kind;
      config.radius_range = {r_min, r_max};
      config.min_x_gap = min_gap;
      emit(gen_out, hitset::format_instance(hitset::generate(config)));
      return 0;
    }
    if (*verify_cmd) {
      const hitset::RawInstance raw = hitset::parse_instance(hitset::read_file(verify_input));
      const hitset::HittingSet solution = hitset::parse_solution(hitset::read_file(verify_solution_path));
      const hitset::VerifyResult result = hitset::verify_solution(raw, solution);
      if (!result.ok) {
        std::cerr << "infeasible solution: " << result.reason << '\n';
        return kExitUnhit;
      }
      std::cerr << "ok: " << solution.size() << " points hit all " << raw.disks.size() << " disks\n";
      return 0;
    }
    if (*oracle_cmd) {
      const hitset::RawInstance raw = hitset::parse_instance(hitset::read_file(oracle_input));
      const hitset::Instance instance = hitset::normalize(raw);
      const hitset::OptimumResult best = hitset::brute_optimum(instance.points, instance.disks);
      std::cout << hitset::format_solution(hitset::to_input_order(instance, best.set));
      return 0;
    }
    if (*bench_cmd) {
      const auto records = hitset::run_bench(sizes, seeds, repeats, [](const hitset::BenchRecord& r) {
        std::cerr << "n=" << r.n << " seed=" << r.seed << " total=" << static_cast<double>(r.timings.total) * 1e-9
                  << "s size=" << r.size << '\n';
      });
      emit(csv_path, hitset::to_csv(records));
      return 0;
    }
  } catch (const hitset::Error& e) {
    std::cerr << hitset::to_string(e.code()) << ": " << e.what() << '\n';
    if (e.code() == hitset::ErrorCode::Infeasible && e.index()) {
      std::cerr << "infeasible disk: " << *e.index() + 1 << '\n';
    }
    return exit_code_for(e);
  }
  return kExitUsage;
}
