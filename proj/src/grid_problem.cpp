#include "ordvi/grid_problem.hpp"

#include <algorithm>
#include <cmath>

#include "ordvi/errors.hpp"

namespace ordvi {

std::vector<double> IntervalBifunction::s_breaks() const {
  std::vector<double> out;
  std::merge(lo.s_part.breaks().begin(), lo.s_part.breaks().end(),
             hi.s_part.breaks().begin(), hi.s_part.breaks().end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double Obstacle::psi(int node, double v_i) const {
  if (!present) return HUGE_VAL;
  double off = offset.size() == 1 ? offset[0] : offset[static_cast<size_t>(node)];
  return off + coeff * v_i;
}

GridProblem::GridProblem(int n, double p, IntervalBifunction f, Obstacle obstacle,
                         std::vector<double> sub, std::vector<double> super)
    : n_(n),
      h_(1.0 / (n + 1)),
      p_(p),
      f_(std::move(f)),
      obstacle_(std::move(obstacle)),
      sub_(std::move(sub)),
      super_(std::move(super)) {
  if (n_ < 1) throw numeric_error("grid needs at least one interior node");
  if (!(p_ > 1.0) || !std::isfinite(p_)) throw numeric_error("p must lie in (1,inf)");
  if (sub_.size() != static_cast<size_t>(n_) || super_.size() != static_cast<size_t>(n_))
    throw carrier_mismatch("sub/supersolution vectors must have one entry per node");
  if (!f_.lo.node_offset.empty() && f_.lo.node_offset.size() != static_cast<size_t>(n_))
    throw carrier_mismatch("f.lo node offsets must have one entry per node");
  if (!f_.hi.node_offset.empty() && f_.hi.node_offset.size() != static_cast<size_t>(n_))
    throw carrier_mismatch("f.hi node offsets must have one entry per node");
  if (obstacle_.present && obstacle_.offset.size() != 1 &&
      obstacle_.offset.size() != static_cast<size_t>(n_))
    throw carrier_mismatch("obstacle offsets must be scalar or one per node");

  for (int i = 0; i < n_; ++i) {
    if (!std::isfinite(sub_[i]) || !std::isfinite(super_[i]))
      throw numeric_error("non-finite sub/supersolution entry");
    if (sub_[i] > super_[i])
      throw precondition_error("sub <= super componentwise", "node " + std::to_string(i));
  }

  // (F2)-type semicontinuity: intervals are usc in s exactly when the upper
  // bound is usc and the lower bound is lsc as scalar functions.
  if (!f_.hi.s_part.is_usc())
    throw precondition_error("f upper bound usc in s", "");
  if (!f_.lo.s_part.is_lsc())
    throw precondition_error("f lower bound lsc in s", "");
  // (F3): decreasing in the third argument.
  if (!f_.lo.t_part.is_nonincreasing() || !f_.hi.t_part.is_nonincreasing())
    throw precondition_error("f decreasing in t", "");
  // (K2): the obstacle map must be increasing in the parameter.
  if (obstacle_.present && obstacle_.coeff < 0.0)
    throw precondition_error("obstacle increasing in v", "coeff < 0");

  // lo <= hi everywhere; the parts are separable, so the minimum of hi-lo
  // splits into the minima of the parts.
  double min_gap = (f_.hi.base - f_.lo.base) + (f_.hi.s_part - f_.lo.s_part).min_all() +
                   (f_.hi.t_part - f_.lo.t_part).min_all();
  double min_off = 0.0;
  for (int i = 0; i < n_; ++i) {
    double off = (f_.hi.node_offset.empty() ? 0.0 : f_.hi.node_offset[i]) -
                 (f_.lo.node_offset.empty() ? 0.0 : f_.lo.node_offset[i]);
    min_off = i == 0 ? off : std::min(min_off, off);
  }
  if (min_gap + min_off < 0.0)
    throw precondition_error("f_lo <= f_hi pointwise", "");

  // (F4) growth bound over [sub_i, super_i]^2, computed per node.
  b4_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    double off_lo = f_.lo.node_offset.empty() ? 0.0 : f_.lo.node_offset[i];
    double off_hi = f_.hi.node_offset.empty() ? 0.0 : f_.hi.node_offset[i];
    double lo_min = f_.lo.base + off_lo + f_.lo.s_part.min_on(sub_[i], super_[i]) +
                    f_.lo.t_part.min_on(sub_[i], super_[i]);
    double hi_max = f_.hi.base + off_hi + f_.hi.s_part.max_on(sub_[i], super_[i]) +
                    f_.hi.t_part.max_on(sub_[i], super_[i]);
    b4_[i] = std::max(std::abs(lo_min), std::abs(hi_max));
  }
}

}  // namespace ordvi
