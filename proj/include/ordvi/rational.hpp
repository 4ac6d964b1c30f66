#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "ordvi/errors.hpp"

namespace ordvi {

using Rat = boost::rational<long long>;

/// Extended real value: a rational or +inf. -inf is not representable,
/// matching the convention that functionals never take the value -inf.
class ExtValue {
 public:
  ExtValue() : inf_(false), v_(0) {}
  explicit ExtValue(Rat v) : inf_(false), v_(v) {}
  ExtValue(long long num, long long den) : inf_(false), v_(num, den) {}

  static ExtValue infinity() {
    ExtValue e;
    e.inf_ = true;
    return e;
  }
  static ExtValue of(long long n) { return ExtValue(Rat(n)); }

  bool is_inf() const { return inf_; }
  bool finite() const { return !inf_; }
  const Rat& value() const {
    if (inf_) throw numeric_error("value() on +inf");
    return v_;
  }

  ExtValue operator+(const ExtValue& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtValue(v_ + o.v_);
  }

  /// a <= b with the extended-real convention: anything <= +inf,
  /// +inf <= finite is false, +inf <= +inf is true.
  friend bool ext_leq(const ExtValue& a, const ExtValue& b) {
    if (b.inf_) return true;
    if (a.inf_) return false;
    return a.v_ <= b.v_;
  }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.v_ == b.v_;
  }

  std::string str() const {
    if (inf_) return "inf";
    if (v_.denominator() == 1) return std::to_string(v_.numerator());
    return std::to_string(v_.numerator()) + "/" + std::to_string(v_.denominator());
  }

 private:
  bool inf_;
  Rat v_;
};

}  // namespace ordvi
