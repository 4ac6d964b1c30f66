#pragma once

#include "ordvi/aux_solver.hpp"
#include "ordvi/residual.hpp"

namespace ordvi {

struct OuterOptions {
  double tol = 1e-10;
  int max_outer = 200;
  SolverOptions inner;
};

struct OuterLogRow {
  int outer_iter;
  double max_update;
  double residual;      // fixed-point residual of the iterate
  int inner_iterations;
};

struct DriverResult {
  std::vector<double> u;
  std::vector<double> eta;        // best selection at (u, u)
  int outer_iterations = 0;
  double residual = 0.0;          // residual_qvip at parameter u
  bool converged = false;
  bool monotone_ok = true;        // iterates never escaped the order
  bool sandwich_ok = true;        // every inner solve sandwiched
  std::vector<OuterLogRow> log;
  std::vector<double> trace_min, trace_max;  // per-outer-step iterate extrema
};

/// Descending outer iteration from the supersolution: each step solves the
/// auxiliary problem at the current iterate with the band [sub, iterate];
/// the sandwich property forces the next iterate below the current one.
/// Requires prob.super() to verify as a discrete supersolution.
DriverResult greatest_solution(const GridProblem& prob, const OuterOptions& opts = {});

/// Ascending dual from the subsolution.
DriverResult smallest_solution(const GridProblem& prob, const OuterOptions& opts = {});

struct ExtremalResult {
  DriverResult smallest;
  DriverResult greatest;
  bool ordered = true;      // smallest <= greatest componentwise
  bool both_fixed = false;  // both residuals within tolerance
};

ExtremalResult solve_extremal(const GridProblem& prob, const OuterOptions& opts = {});

struct BruteForceResult {
  std::vector<std::vector<double>> solutions;
  std::vector<double> min_vec, max_vec;  // componentwise extrema over the set
  bool min_is_solution = false, max_is_solution = false;
};

/// Enumerates all vectors over the quantized value grid within
/// [sub, super], testing each as a solution of the full problem (parameter
/// = the vector itself) by exact nodal complementarity over the f-interval.
/// Desk-scale only: n <= 4 and at most 6 levels per node.
BruteForceResult brute_force_extremal(const GridProblem& prob,
                                      const std::vector<double>& levels, double tol = 1e-9);

}  // namespace ordvi
