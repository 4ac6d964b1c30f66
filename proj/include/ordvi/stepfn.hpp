#pragma once

#include <vector>

namespace ordvi {

/// Piecewise-constant function of one real variable with explicit values
/// at its breakpoints, so either semicontinuity convention can be
/// expressed. With breaks x_1 < ... < x_m, `values` holds the m+1 open
/// interval values and `at_breaks` the m values at the breakpoints.
class StepFn {
 public:
  StepFn();  // constant zero
  StepFn(std::vector<double> breaks, std::vector<double> values,
         std::vector<double> at_breaks);

  static StepFn constant(double v);
  /// Breakpoint values set to max(left,right): upper semicontinuous.
  static StepFn usc(std::vector<double> breaks, std::vector<double> values);
  /// Breakpoint values set to min(left,right): lower semicontinuous.
  static StepFn lsc(std::vector<double> breaks, std::vector<double> values);

  double operator()(double s) const;

  bool is_usc() const;
  bool is_lsc() const;
  /// Non-increasing across every breakpoint (monotone decreasing steps).
  bool is_nonincreasing() const;

  double min_on(double lo, double hi) const;
  double max_on(double lo, double hi) const;
  double min_all() const;
  double max_all() const;

  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& at_breaks() const { return at_breaks_; }

  bool is_constant() const { return breaks_.empty(); }

 private:
  std::vector<double> breaks_;
  std::vector<double> values_;
  std::vector<double> at_breaks_;
};

/// f = g + h pointwise is again a step function; used to combine parts.
StepFn operator+(const StepFn& a, const StepFn& b);
StepFn operator-(const StepFn& a, const StepFn& b);

}  // namespace ordvi
