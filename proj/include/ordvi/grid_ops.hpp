#pragma once

#include "ordvi/grid_problem.hpp"

namespace ordvi {

/// p-Laplacian flux |xi|^{p-2} xi.
double flux(double xi, double p);

/// Discrete divergence-form operator with zero boundary values:
///   (E_h u)_i = -( phi((u_{i+1}-u_i)/h) - phi((u_i-u_{i-1})/h) ) / h.
std::vector<double> apply_E(const std::vector<double>& u, const GridProblem& prob);

/// Same stencil at a single node with the nodal value replaced by s.
double apply_E_node(const std::vector<double>& u, int node, double s, const GridProblem& prob);

/// Cut-off towards the band [lo_i, hi_i]:
///   -(lo-s)^{p-1} below, 0 inside, (s-hi)^{p-1} above.
double cutoff_d(double s, double lo_i, double hi_i, double p);

/// Constants (d1, d2) with -(t-s)^{p-1} s >= d1 |s|^p - d2 |t|^{p-1} |s|
/// for s <= t, and dually for s >= t: (1, 2^{2-p}) for p <= 2, swapped for
/// p >= 2.
std::pair<double, double> coercivity_constants(double p);

/// Verifies the displayed lower bound at one point (s <= t uses the first
/// branch, s >= t the dual one).
bool coercivity_bound_holds(double p, double s, double t);

/// Constants (c1, c2) with d(x,s)*s >= c1 |s|^p - c2 (|lo|^p + |hi|^p) per
/// node, obtained from coercivity_constants via Young's inequality.
std::pair<double, double> cutoff_lower_bound_constants(double p);

/// Growth constant d0 with |d(x,s)| <= d0 (|lo|^{p-1} + |s|^{p-1} +
/// |hi|^{p-1}); 1 for p <= 2 and 2^{p-2} above.
double cutoff_growth_constant(double p);

/// h-weighted lp norm of an interior vector.
double lp_norm(const std::vector<double>& u, double p, double h);
/// Discrete W-seminorm: lp norm of the difference quotients, boundary
/// edges included (zero boundary values).
double grad_lp_norm(const std::vector<double>& u, double p, double h);
double linf_dist(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace ordvi
