// ordvi -- order-theoretic fixed points and quasi-variational inclusions on
// finite lattices and 1D grids.
//
// Subcommands: verify-order, verify-fixpoint, verify-qvip, verify-all run
// the randomized verification suites; solve computes the extremal solution
// pair of a grid instance; sweep expands a sweep file into instances;
// oracle runs the brute-force enumeration on quantized instances.
// Exit codes: 0 all checks passed, 1 an assertion failed (the first
// counterexample is serialized into the summary), 2 configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordvi/csv.hpp"
#include "ordvi/suites.hpp"

namespace fs = std::filesystem;
using namespace ordvi;

namespace {

struct CliOptions {
  std::string input;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  double tol = -1.0;
  int max_iter = -1;
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error(path.string(), "cannot open for writing");
  out << content;
}

void apply_overrides(RunSettings& settings, const CliOptions& cli) {
  if (cli.tol > 0.0) {
    settings.outer.tol = cli.tol;
    settings.outer.inner.tol = cli.tol;
  }
  if (cli.max_iter > 0) settings.outer.inner.max_iter = cli.max_iter;
}

int emit_reports(const std::vector<SuiteReport>& reports, const CliOptions& cli) {
  std::string all;
  bool ok = true;
  for (const auto& rep : reports) {
    std::cout << rep.pretty();
    all += rep.summary_csv();
    ok = ok && rep.ok();
  }
  write_file(fs::path(cli.out_dir) / "summary.csv", all);
  return ok ? 0 : 1;
}

int run_solve(const CliOptions& cli, const std::string& json_text, const std::string& stem) {
  LoadedProblem lp = problem_from_json(json_text);
  apply_overrides(lp.settings, cli);
  ExtremalResult r = solve_extremal(lp.problem, lp.settings.outer);
  write_file(fs::path(cli.out_dir) / (stem + ".csv"), extremal_csv(r, lp.problem));
  write_file(fs::path(cli.out_dir) / (stem + "_log.csv"), run_log_csv(r));
  bool ok = r.smallest.converged && r.greatest.converged && r.ordered && r.both_fixed &&
            r.smallest.monotone_ok && r.greatest.monotone_ok;
  std::cout << (ok ? "solved " : "FAILED ") << stem << ": outer iterations "
            << r.smallest.outer_iterations << "/" << r.greatest.outer_iterations
            << ", residuals " << fmt_double(r.smallest.residual) << "/"
            << fmt_double(r.greatest.residual) << "\n";
  return ok ? 0 : 1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-theoretic QVI solver and verification suites"};
  app.require_subcommand(1);

  CliOptions cli;
  app.add_option("--seed", cli.seed, "seed for the randomized suites");
  app.add_option("--tol", cli.tol, "tolerance override");
  app.add_option("--max-iter", cli.max_iter, "inner iteration cap override");
  app.add_option("--out", cli.out_dir, "output directory");

  auto* verify_order = app.add_subcommand("verify-order", "order-kernel property suite");
  auto* verify_fixpoint =
      app.add_subcommand("verify-fixpoint", "fixed-point theorem property suite");
  auto* verify_qvip = app.add_subcommand("verify-qvip", "QVIP property suite");
  auto* verify_all = app.add_subcommand("verify-all", "all verification suites");
  auto* solve = app.add_subcommand("solve", "solve a grid instance for extremal solutions");
  auto* sweep = app.add_subcommand("sweep", "solve every instance of a sweep file");
  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration of a tiny instance");
  for (auto* cmd : {solve, sweep, oracle})
    cmd->add_option("config", cli.input, "instance configuration (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    fs::create_directories(cli.out_dir);
    if (verify_order->parsed()) return emit_reports({run_order_suite(cli.seed)}, cli);
    if (verify_fixpoint->parsed()) return emit_reports({run_fixpoint_suite(cli.seed)}, cli);
    if (verify_qvip->parsed()) return emit_reports({run_qvip_suite(cli.seed)}, cli);
    if (verify_all->parsed())
      return emit_reports({run_order_suite(cli.seed), run_fixpoint_suite(cli.seed),
                           run_qvip_suite(cli.seed)},
                          cli);
    if (solve->parsed())
      return run_solve(cli, slurp(cli.input), fs::path(cli.input).stem().string());
    if (sweep->parsed()) {
      auto instances = expand_sweep(slurp(cli.input));
      int rc = 0;
      for (size_t k = 0; k < instances.size(); ++k) {
        std::string stem = fs::path(cli.input).stem().string() + "_" + std::to_string(k);
        rc = std::max(rc, run_solve(cli, instances[k], stem));
      }
      return rc;
    }
    if (oracle->parsed()) {
      LoadedProblem lp = load_problem(cli.input);
      if (lp.settings.oracle_levels.empty())
        throw config_error("oracle_levels", "required for the oracle command");
      BruteForceResult bf = brute_force_extremal(lp.problem, lp.settings.oracle_levels);
      CsvWriter w({"kind", "node", "value"});
      for (size_t s = 0; s < bf.solutions.size(); ++s)
        for (int i = 0; i < lp.problem.n(); ++i)
          w.row({"solution_" + std::to_string(s), std::to_string(i),
                 fmt_double(bf.solutions[s][i])});
      for (int i = 0; i < lp.problem.n(); ++i) {
        w.row({"min", std::to_string(i), fmt_double(bf.min_vec.empty() ? 0.0 : bf.min_vec[i])});
        w.row({"max", std::to_string(i), fmt_double(bf.max_vec.empty() ? 0.0 : bf.max_vec[i])});
      }
      write_file(fs::path(cli.out_dir) /
                     (fs::path(cli.input).stem().string() + "_oracle.csv"),
                 w.str());
      std::cout << "enumerated " << bf.solutions.size() << " solutions\n";
      return bf.solutions.empty() ? 1 : 0;
    }
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
