#pragma once

#include "ordvi/truncation.hpp"

namespace ordvi {

struct SolverOptions {
  double tol = 1e-10;
  int max_iter = 200000;
  /// Over-relaxation factor; <= 0 picks mesh-based (p = 2) or
  /// rate-estimated (p != 2) factors. Safeguarded: the solver snapshots the
  /// best iterate and falls back to plain Gauss-Seidel if updates blow up.
  double omega = 0.0;
  double sandwich_tol = 1e-8;
  /// Coarse-to-fine initial guesses on nested grids (n = 2m+1). Degenerate
  /// exponents make flat iterates collapse only algebraically under nodal
  /// sweeps, so a near-solution start matters more than the sweep rate.
  bool nested = true;
};

struct SolverResult {
  std::vector<double> u;
  std::vector<double> eta;       // selection from the truncated interval at u
  int iterations = 0;
  double residual = 0.0;         // max nodal inclusion residual
  bool sandwich_ok = false;      // ulv - tol <= u <= olv + tol
  bool converged = false;
  std::vector<double> trace_updates;    // per-sweep max nodal update
  std::vector<double> trace_residuals;  // per-sweep residual
};

/// Solves the auxiliary inclusion 0 in (E + D + G - H + dI_C(v))(u) by
/// sweeping the nodes; every visit solves the scalar inclusion at the node
/// exactly: the solution components of 0 in T_i(s) + g_i(s) with s <=
/// psi_i are computed from the piecewise structure of g_i (T_i is strictly
/// increasing and continuous), the component nearest to the current value
/// is selected (the current value is kept when it already solves the
/// inclusion, otherwise the component midpoint is taken), and when no
/// component is feasible the node goes to the obstacle with the selection
/// clamped to the nearest interval endpoint.
///
/// Per node, at the returned u, either u_i < psi_i and the residual
/// T_i + eta_i vanishes for some eta_i in the truncated interval, or
/// u_i = psi_i and T_i + eta_i <= 0 (complementarity).
SolverResult solve_auxiliary(const GridProblem& prob, const std::vector<double>& v,
                             const AuxData& aux, const SolverOptions& opts = {});

}  // namespace ordvi
