#include "ordvi/residual.hpp"

#include <algorithm>
#include <cmath>

#include "ordvi/errors.hpp"

namespace ordvi {

namespace {

void check_feasible(const std::vector<double>& u, const std::vector<double>& v,
                    const GridProblem& prob, double feas_tol) {
  int worst = -1;
  double worst_gap = feas_tol;
  for (int i = 0; i < prob.n(); ++i) {
    double gap = u[i] - prob.psi_at(i, v[i]);
    if (gap > worst_gap) {
      worst_gap = gap;
      worst = i;
    }
  }
  if (worst >= 0)
    throw infeasibility_error(worst, "obstacle violated by " + std::to_string(worst_gap) +
                                         " at node " + std::to_string(worst));
}

}  // namespace

double residual_qvip(const std::vector<double>& u, const std::vector<double>& eta,
                     const std::vector<double>& v, const GridProblem& prob, double feas_tol) {
  const int n = prob.n();
  if (u.size() != static_cast<size_t>(n) || eta.size() != static_cast<size_t>(n) ||
      v.size() != static_cast<size_t>(n))
    throw carrier_mismatch("vector length does not match grid");
  check_feasible(u, v, prob, feas_tol);
  for (int i = 0; i < n; ++i) {
    Interval iv = prob.f_interval(i, u[i], v[i]);
    double tol = 1e-9 * (1.0 + std::abs(eta[i]));
    if (eta[i] < iv.lo - tol || eta[i] > iv.hi + tol)
      throw precondition_error("eta is a selection of the f-interval",
                               "node " + std::to_string(i));
  }
  std::vector<double> e = apply_E(u, prob);
  double res = 0.0;
  const double h = prob.h();
  for (int i = 0; i < n; ++i) {
    double r = e[i] + eta[i];
    bool active = u[i] >= prob.psi_at(i, v[i]) - feas_tol;
    // downward direction always feasible; upward only off the obstacle
    double contrib = active ? std::max(0.0, r) : std::abs(r);
    res = std::max(res, h * contrib);
  }
  return res;
}

double residual_qvip_best(const std::vector<double>& u, const std::vector<double>& v,
                          const GridProblem& prob, std::vector<double>* eta_out,
                          double feas_tol) {
  const int n = prob.n();
  check_feasible(u, v, prob, feas_tol);
  std::vector<double> e = apply_E(u, prob);
  std::vector<double> eta(n);
  double res = 0.0;
  const double h = prob.h();
  for (int i = 0; i < n; ++i) {
    Interval iv = prob.f_interval(i, u[i], v[i]);
    bool active = u[i] >= prob.psi_at(i, v[i]) - feas_tol;
    eta[i] = std::clamp(-e[i], iv.lo, iv.hi);
    double r = e[i] + eta[i];
    double contrib = active ? std::max(0.0, r) : std::abs(r);
    res = std::max(res, h * contrib);
  }
  if (eta_out) *eta_out = std::move(eta);
  return res;
}

bool check_sandwich(const std::vector<double>& u, const AuxData& aux, double tol) {
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] < aux.ulv[i] - tol || u[i] > aux.olv[i] + tol) return false;
  return true;
}

bool verify_subsolution(const GridProblem& prob, const std::vector<double>& u,
                        std::vector<double>* eta_out) {
  const int n = prob.n();
  if (u.size() != static_cast<size_t>(n))
    throw carrier_mismatch("vector length does not match grid");
  for (int i = 0; i < n; ++i)
    if (u[i] > prob.psi_at(i, u[i]) + 1e-12) return false;
  std::vector<double> e = apply_E(u, prob);
  std::vector<double> eta(n);
  for (int i = 0; i < n; ++i) {
    Interval iv = prob.f_interval(i, u[i], u[i]);
    if (e[i] + iv.lo > 1e-12) return false;
    eta[i] = std::min(iv.hi, -e[i]);  // in [lo, hi] and e + eta <= 0
  }
  if (eta_out) *eta_out = std::move(eta);
  return true;
}

bool verify_supersolution(const GridProblem& prob, const std::vector<double>& u,
                          std::vector<double>* eta_out) {
  const int n = prob.n();
  if (u.size() != static_cast<size_t>(n))
    throw carrier_mismatch("vector length does not match grid");
  std::vector<double> e = apply_E(u, prob);
  std::vector<double> eta(n);
  for (int i = 0; i < n; ++i) {
    Interval iv = prob.f_interval(i, u[i], u[i]);
    bool below = u[i] < prob.psi_at(i, u[i]) - 1e-12;
    if (below && e[i] + iv.hi < -1e-12) return false;
    eta[i] = std::clamp(-e[i], iv.lo, iv.hi);
  }
  if (eta_out) *eta_out = std::move(eta);
  return true;
}

}  // namespace ordvi
