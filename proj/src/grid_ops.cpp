#include "ordvi/grid_ops.hpp"

#include <cmath>

#include "ordvi/errors.hpp"

namespace ordvi {

double flux(double xi, double p) {
  if (p == 2.0) return xi;
  if (xi == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(xi), p - 1.0), xi);
}

double apply_E_node(const std::vector<double>& u, int node, double s,
                    const GridProblem& prob) {
  const double h = prob.h();
  const double p = prob.p();
  const double left = node == 0 ? 0.0 : u[node - 1];
  const double right = node == prob.n() - 1 ? 0.0 : u[node + 1];
  return (flux((s - left) / h, p) - flux((right - s) / h, p)) / h;
}

std::vector<double> apply_E(const std::vector<double>& u, const GridProblem& prob) {
  if (u.size() != static_cast<size_t>(prob.n()))
    throw carrier_mismatch("vector length does not match grid");
  for (double x : u)
    if (!std::isfinite(x)) throw numeric_error("non-finite input to apply_E");
  std::vector<double> out(u.size());
  for (int i = 0; i < prob.n(); ++i) out[i] = apply_E_node(u, i, u[i], prob);
  return out;
}

double cutoff_d(double s, double lo_i, double hi_i, double p) {
  if (s < lo_i) return -std::pow(lo_i - s, p - 1.0);
  if (s > hi_i) return std::pow(s - hi_i, p - 1.0);
  return 0.0;
}

std::pair<double, double> coercivity_constants(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw numeric_error("p must lie in (1,inf)");
  if (p <= 2.0) return {1.0, std::pow(2.0, 2.0 - p)};
  return {std::pow(2.0, 2.0 - p), 1.0};
}

bool coercivity_bound_holds(double p, double s, double t) {
  auto [d1, d2] = coercivity_constants(p);
  double rhs = d1 * std::pow(std::abs(s), p) - d2 * std::pow(std::abs(t), p - 1.0) * std::abs(s);
  if (s <= t) {
    double lhs = -std::pow(t - s, p - 1.0) * s;
    if (lhs + 1e-12 * (1.0 + std::abs(lhs)) < rhs) return false;
  }
  if (s >= t) {
    double lhs = std::pow(s - t, p - 1.0) * s;
    if (lhs + 1e-12 * (1.0 + std::abs(lhs)) < rhs) return false;
  }
  return true;
}

std::pair<double, double> cutoff_lower_bound_constants(double p) {
  auto [d1, d2] = coercivity_constants(p);
  // Young with epsilon = d1/2: a*b <= eps a^p + C eps^{-p'/p} b^{p'} / p'-ish;
  // we use the standard constant C(eps) = (1/p') (eps p)^{-p'/p}.
  const double pc = p / (p - 1.0);
  const double eps = d1 / 2.0;
  const double ceps = (1.0 / pc) * std::pow(eps * p, -pc / p);
  const double c1 = d1 - eps;
  const double c2 = std::max(c1, ceps * std::pow(d2, pc));
  return {c1, c2};
}

double cutoff_growth_constant(double p) { return p <= 2.0 ? 1.0 : std::pow(2.0, p - 2.0); }

double lp_norm(const std::vector<double>& u, double p, double h) {
  double s = 0.0;
  for (double x : u) s += h * std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

double grad_lp_norm(const std::vector<double>& u, double p, double h) {
  double s = 0.0;
  double prev = 0.0;
  for (double x : u) {
    s += h * std::pow(std::abs((x - prev) / h), p);
    prev = x;
  }
  s += h * std::pow(std::abs((0.0 - prev) / h), p);
  return std::pow(s, 1.0 / p);
}

double linf_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace ordvi
