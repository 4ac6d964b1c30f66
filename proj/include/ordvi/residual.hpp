#pragma once

#include "ordvi/truncation.hpp"

namespace ordvi {

/// Violation of the discrete variational inequality at (u, eta) for the
/// problem frozen at parameter v: the maximum over the feasible test
/// directions w = u +- delta e_i of the negative part of the inequality,
/// normalized by delta (the inequality is linear in the step, so the value
/// is step-free: h * |(E_h u + eta)_i| at free nodes and the one-sided
/// positive part at obstacle nodes). Zero means u in S(v) up to tolerance.
/// Requires eta_i in the f-interval at (u_i, v_i) and u feasible; an
/// obstacle violation raises infeasibility_error with the worst node.
double residual_qvip(const std::vector<double>& u, const std::vector<double>& eta,
                     const std::vector<double>& v, const GridProblem& prob,
                     double feas_tol = 1e-9);

/// Best-selection residual: eta_i chosen freely from the f-interval at
/// (u_i, v_i). This is what the drivers certify at their fixed points.
double residual_qvip_best(const std::vector<double>& u, const std::vector<double>& v,
                          const GridProblem& prob, std::vector<double>* eta_out = nullptr,
                          double feas_tol = 1e-9);

bool check_sandwich(const std::vector<double>& u, const AuxData& aux, double tol);

/// Discrete subsolution test. With the constraint functional searched over
/// indicators of the meet-truncated admissible set u ^ C(u) and the test
/// set {u ^ w : w in C(u)}, the inequality reduces per node to
///   (E_h u)_i + eta_i <= 0 for some eta_i in f(x_i, u_i, u_i),
/// plus feasibility u <= psi(u) needed for u to lie in the effective
/// domain of the truncated indicator.
bool verify_subsolution(const GridProblem& prob, const std::vector<double>& u,
                        std::vector<double>* eta_out = nullptr);

/// Dual test: (E_h u)_i + eta_i >= 0 at every node below the obstacle
/// (nodes at or above psi(u) are exempt, the join-truncated test set
/// cannot reach them).
bool verify_supersolution(const GridProblem& prob, const std::vector<double>& u,
                          std::vector<double>* eta_out = nullptr);

}  // namespace ordvi
