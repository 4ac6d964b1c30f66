#pragma once

#include <optional>
#include <vector>

#include "ordvi/stepfn.hpp"

namespace ordvi {

struct Interval {
  double lo, hi;
};

/// One side (lower or upper bound) of the interval bifunction:
///   side(i, s, t) = base + node_offset[i] + s_part(s) + t_part(t).
/// The s part carries the semicontinuity, the t part the monotone
/// dependence on the parameter.
struct BifunctionSide {
  double base = 0.0;
  std::vector<double> node_offset;  // empty = all zero
  StepFn s_part;
  StepFn t_part;

  double eval(int node, double s, double t) const {
    double off = node_offset.empty() ? 0.0 : node_offset[node];
    return base + off + s_part(s) + t_part(t);
  }
};

/// Interval bifunction f(x_i, s, t) = [lo, hi]: values are compact
/// intervals, upper semicontinuous in s (hi usc, lo lsc) and decreasing
/// in t.
struct IntervalBifunction {
  BifunctionSide lo, hi;

  Interval eval(int node, double s, double t) const {
    return {lo.eval(node, s, t), hi.eval(node, s, t)};
  }
  /// s-breakpoints of either side (sorted, unique).
  std::vector<double> s_breaks() const;
};

/// Unilateral upper obstacle, affine in the parameter:
///   psi(i, v) = offset_i + coeff * v_i,
/// or absent (psi = +inf). coeff >= 0 keeps v -> C(v) increasing.
struct Obstacle {
  bool present = false;
  std::vector<double> offset;  // broadcast if size 1
  double coeff = 0.0;

  double psi(int node, double v_i) const;
  bool finite() const { return present; }
};

/// Discretized 1D problem on (0,1) with zero boundary values: n interior
/// nodes, spacing h = 1/(n+1), p-Laplacian flux, interval bifunction f,
/// obstacle map, and a verified sub-supersolution pair.
class GridProblem {
 public:
  GridProblem(int n, double p, IntervalBifunction f, Obstacle obstacle,
              std::vector<double> sub, std::vector<double> super);

  int n() const { return n_; }
  double h() const { return h_; }
  double p() const { return p_; }
  double x(int node) const { return (node + 1) * h_; }

  const IntervalBifunction& f() const { return f_; }
  Interval f_interval(int node, double s, double t) const { return f_.eval(node, s, t); }
  const Obstacle& obstacle() const { return obstacle_; }
  double psi(int node, const std::vector<double>& v) const {
    return obstacle_.psi(node, v[node]);
  }
  double psi_at(int node, double v_i) const { return obstacle_.psi(node, v_i); }

  const std::vector<double>& sub() const { return sub_; }
  const std::vector<double>& super() const { return super_; }
  /// Per-node bound on |f| over [sub_i, super_i]^2 (growth condition).
  const std::vector<double>& growth_bound() const { return b4_; }

  // Exponent bookkeeping carried along from the continuous setting. In one
  // dimension the critical exponent is unbounded; q = p is used for the
  // norms appearing in the a-priori bound.
  double q() const { return p_; }
  double q_conj() const { return p_ / (p_ - 1.0); }

 private:
  int n_;
  double h_, p_;
  IntervalBifunction f_;
  Obstacle obstacle_;
  std::vector<double> sub_, super_, b4_;
};

}  // namespace ordvi
