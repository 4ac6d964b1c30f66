#include "ordvi/stepfn.hpp"

#include <algorithm>
#include <cmath>

#include "ordvi/errors.hpp"

namespace ordvi {

StepFn::StepFn() : values_{0.0} {}

StepFn::StepFn(std::vector<double> breaks, std::vector<double> values,
               std::vector<double> at_breaks)
    : breaks_(std::move(breaks)), values_(std::move(values)), at_breaks_(std::move(at_breaks)) {
  if (values_.size() != breaks_.size() + 1 || at_breaks_.size() != breaks_.size())
    throw numeric_error("step function shape mismatch");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1])) throw numeric_error("step breakpoints not increasing");
  for (double b : breaks_)
    if (!std::isfinite(b)) throw numeric_error("non-finite step breakpoint");
  for (double v : values_)
    if (!std::isfinite(v)) throw numeric_error("non-finite step value");
  for (double v : at_breaks_)
    if (!std::isfinite(v)) throw numeric_error("non-finite step value");
}

StepFn StepFn::constant(double v) { return StepFn({}, {v}, {}); }

StepFn StepFn::usc(std::vector<double> breaks, std::vector<double> values) {
  std::vector<double> at(breaks.size());
  for (size_t i = 0; i < breaks.size(); ++i) at[i] = std::max(values[i], values[i + 1]);
  return StepFn(std::move(breaks), std::move(values), std::move(at));
}

StepFn StepFn::lsc(std::vector<double> breaks, std::vector<double> values) {
  std::vector<double> at(breaks.size());
  for (size_t i = 0; i < breaks.size(); ++i) at[i] = std::min(values[i], values[i + 1]);
  return StepFn(std::move(breaks), std::move(values), std::move(at));
}

double StepFn::operator()(double s) const {
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), s);
  size_t i = static_cast<size_t>(it - breaks_.begin());
  if (it != breaks_.end() && *it == s) return at_breaks_[i];
  return values_[i];
}

bool StepFn::is_usc() const {
  for (size_t i = 0; i < breaks_.size(); ++i)
    if (at_breaks_[i] < std::max(values_[i], values_[i + 1])) return false;
  return true;
}

bool StepFn::is_lsc() const {
  for (size_t i = 0; i < breaks_.size(); ++i)
    if (at_breaks_[i] > std::min(values_[i], values_[i + 1])) return false;
  return true;
}

bool StepFn::is_nonincreasing() const {
  for (size_t i = 0; i < breaks_.size(); ++i) {
    if (values_[i] < at_breaks_[i]) return false;
    if (at_breaks_[i] < values_[i + 1]) return false;
  }
  return true;
}

double StepFn::min_on(double lo, double hi) const {
  double m = (*this)(lo);
  m = std::min(m, (*this)(hi));
  for (size_t i = 0; i < breaks_.size(); ++i)
    if (breaks_[i] > lo && breaks_[i] < hi) m = std::min(m, at_breaks_[i]);
  for (size_t i = 0; i < values_.size(); ++i) {
    double a = i == 0 ? -HUGE_VAL : breaks_[i - 1];
    double b = i == breaks_.size() ? HUGE_VAL : breaks_[i];
    if (std::max(a, lo) < std::min(b, hi)) m = std::min(m, values_[i]);
  }
  return m;
}

double StepFn::max_on(double lo, double hi) const {
  double m = (*this)(lo);
  m = std::max(m, (*this)(hi));
  for (size_t i = 0; i < breaks_.size(); ++i)
    if (breaks_[i] > lo && breaks_[i] < hi) m = std::max(m, at_breaks_[i]);
  for (size_t i = 0; i < values_.size(); ++i) {
    double a = i == 0 ? -HUGE_VAL : breaks_[i - 1];
    double b = i == breaks_.size() ? HUGE_VAL : breaks_[i];
    if (std::max(a, lo) < std::min(b, hi)) m = std::max(m, values_[i]);
  }
  return m;
}

double StepFn::min_all() const {
  double m = *std::min_element(values_.begin(), values_.end());
  for (double v : at_breaks_) m = std::min(m, v);
  return m;
}

double StepFn::max_all() const {
  double m = *std::max_element(values_.begin(), values_.end());
  for (double v : at_breaks_) m = std::max(m, v);
  return m;
}

namespace {

StepFn combine(const StepFn& a, const StepFn& b, double sign) {
  std::vector<double> breaks;
  std::merge(a.breaks().begin(), a.breaks().end(), b.breaks().begin(), b.breaks().end(),
             std::back_inserter(breaks));
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<double> values(breaks.size() + 1), at(breaks.size());
  for (size_t i = 0; i < breaks.size(); ++i) at[i] = a(breaks[i]) + sign * b(breaks[i]);
  for (size_t i = 0; i <= breaks.size(); ++i) {
    double probe;
    if (breaks.empty())
      probe = 0.0;
    else if (i == 0)
      probe = breaks.front() - 1.0;
    else if (i == breaks.size())
      probe = breaks.back() + 1.0;
    else
      probe = 0.5 * (breaks[i - 1] + breaks[i]);
    values[i] = a(probe) + sign * b(probe);
  }
  return StepFn(std::move(breaks), std::move(values), std::move(at));
}

}  // namespace

StepFn operator+(const StepFn& a, const StepFn& b) { return combine(a, b, 1.0); }
StepFn operator-(const StepFn& a, const StepFn& b) { return combine(a, b, -1.0); }

}  // namespace ordvi
