#include "ordvi/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "ordvi/errors.hpp"

namespace ordvi {

namespace {

enum class Direction { descending, ascending };

// Selection on the moving side of the band: clamping -E_h into the
// f-interval at (w_i, w_i) preserves the one-sided inequality the previous
// step established (see the driver notes in the header).
std::vector<double> clamped_selection(const GridProblem& prob, const std::vector<double>& w) {
  std::vector<double> e = apply_E(w, prob);
  std::vector<double> eta(prob.n());
  for (int i = 0; i < prob.n(); ++i) {
    Interval iv = prob.f_interval(i, w[i], w[i]);
    eta[i] = std::clamp(-e[i], iv.lo, iv.hi);
  }
  return eta;
}

// Selection on the frozen side, at the current parameter: the lower f
// bound keeps a subsolution a subsolution for any larger parameter (f is
// decreasing in t), dually the upper bound for supersolutions.
std::vector<double> frozen_selection(const GridProblem& prob, const std::vector<double>& w,
                                     const std::vector<double>& v, bool lower) {
  std::vector<double> eta(prob.n());
  for (int i = 0; i < prob.n(); ++i) {
    Interval iv = prob.f_interval(i, w[i], v[i]);
    eta[i] = lower ? iv.lo : iv.hi;
  }
  return eta;
}

DriverResult run_driver(const GridProblem& prob, const OuterOptions& opts, Direction dir) {
  const int n = prob.n();
  if (!verify_subsolution(prob, prob.sub()))
    throw precondition_error("sub verifies as a discrete subsolution", "");
  if (!verify_supersolution(prob, prob.super()))
    throw precondition_error("super verifies as a discrete supersolution", "");

  DriverResult res;
  std::vector<double> v = dir == Direction::descending ? prob.super() : prob.sub();

  for (int k = 0; k < opts.max_outer; ++k) {
    AuxData aux;
    if (dir == Direction::descending) {
      auto uleta = frozen_selection(prob, prob.sub(), v, /*lower=*/true);
      auto oleta = clamped_selection(prob, v);
      aux = make_aux_single(prob, v, prob.sub(), uleta, v, oleta);
    } else {
      auto uleta = clamped_selection(prob, v);
      auto oleta = frozen_selection(prob, prob.super(), v, /*lower=*/false);
      aux = make_aux_single(prob, v, v, uleta, prob.super(), oleta);
    }

    SolverOptions inner = opts.inner;
    SolverResult step = solve_auxiliary(prob, v, aux, inner);
    res.sandwich_ok = res.sandwich_ok && step.sandwich_ok;

    double max_update = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = dir == Direction::descending ? step.u[i] - v[i] : v[i] - step.u[i];
      if (d > opts.inner.sandwich_tol) res.monotone_ok = false;
      max_update = std::max(max_update, std::abs(step.u[i] - v[i]));
    }

    // the iterate can overhang its own (lower) obstacle until convergence
    double fp_res;
    try {
      fp_res = residual_qvip_best(step.u, step.u, prob);
    } catch (const infeasibility_error&) {
      fp_res = HUGE_VAL;
    }
    res.log.push_back({k, max_update, fp_res, step.iterations});
    res.trace_min.push_back(*std::min_element(step.u.begin(), step.u.end()));
    res.trace_max.push_back(*std::max_element(step.u.begin(), step.u.end()));

    v = step.u;
    res.outer_iterations = k + 1;
    if (max_update < opts.tol) {
      res.converged = step.converged;
      break;
    }
  }

  res.u = v;
  try {
    res.residual = residual_qvip_best(res.u, res.u, prob, &res.eta);
  } catch (const infeasibility_error&) {  // only reachable without convergence
    res.residual = HUGE_VAL;
    res.eta.assign(n, 0.0);
    res.converged = false;
  }
  return res;
}

}  // namespace

DriverResult greatest_solution(const GridProblem& prob, const OuterOptions& opts) {
  return run_driver(prob, opts, Direction::descending);
}

DriverResult smallest_solution(const GridProblem& prob, const OuterOptions& opts) {
  return run_driver(prob, opts, Direction::ascending);
}

ExtremalResult solve_extremal(const GridProblem& prob, const OuterOptions& opts) {
  ExtremalResult r;
  r.smallest = smallest_solution(prob, opts);
  r.greatest = greatest_solution(prob, opts);
  for (int i = 0; i < prob.n(); ++i)
    if (r.smallest.u[i] > r.greatest.u[i] + opts.inner.sandwich_tol) r.ordered = false;
  const double fixed_tol = 1e-8;
  r.both_fixed = r.smallest.residual <= fixed_tol && r.greatest.residual <= fixed_tol;
  return r;
}

BruteForceResult brute_force_extremal(const GridProblem& prob,
                                      const std::vector<double>& levels, double tol) {
  const int n = prob.n();
  if (n > 4 || levels.size() > 6)
    throw instance_too_large_error("brute force limited to n <= 4, 6 levels");
  std::vector<double> grid = levels;
  std::sort(grid.begin(), grid.end());

  BruteForceResult out;
  std::vector<int> idx(n, 0);
  std::vector<double> u(n);
  const int m = static_cast<int>(grid.size());
  for (;;) {
    for (int i = 0; i < n; ++i) u[i] = grid[idx[i]];
    bool in_box = true;
    for (int i = 0; i < n; ++i)
      in_box = in_box && u[i] >= prob.sub()[i] - tol && u[i] <= prob.super()[i] + tol;
    if (in_box) {
      bool feasible = true;
      for (int i = 0; i < n; ++i)
        feasible = feasible && u[i] <= prob.psi_at(i, u[i]) + tol;
      if (feasible) {
        std::vector<double> e = apply_E(u, prob);
        bool solves = true;
        for (int i = 0; i < n && solves; ++i) {
          Interval iv = prob.f_interval(i, u[i], u[i]);
          bool active = u[i] >= prob.psi_at(i, u[i]) - tol;
          if (active)
            solves = e[i] + iv.lo <= tol;
          else
            solves = e[i] + iv.lo <= tol && e[i] + iv.hi >= -tol;
        }
        if (solves) out.solutions.push_back(u);
      }
    }
    int carry = n - 1;
    while (carry >= 0 && ++idx[carry] == m) idx[carry--] = 0;
    if (carry < 0) break;
  }

  if (!out.solutions.empty()) {
    out.min_vec = out.solutions.front();
    out.max_vec = out.solutions.front();
    for (const auto& s : out.solutions)
      for (int i = 0; i < n; ++i) {
        out.min_vec[i] = std::min(out.min_vec[i], s[i]);
        out.max_vec[i] = std::max(out.max_vec[i], s[i]);
      }
    auto is_member = [&](const std::vector<double>& w) {
      for (const auto& s : out.solutions)
        if (linf_dist(s, w) < tol) return true;
      return false;
    };
    out.min_is_solution = is_member(out.min_vec);
    out.max_is_solution = is_member(out.max_vec);
  }
  return out;
}

}  // namespace ordvi
