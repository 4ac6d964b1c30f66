#pragma once

#include <vector>

#include "ordvi/lattice.hpp"
#include "ordvi/rational.hpp"

namespace ordvi {

/// Extended-real functional on a finite carrier: one value per element,
/// each a rational or +inf. At least one value must be finite (the
/// effective domain is non-empty).
class Functional {
 public:
  explicit Functional(std::vector<ExtValue> values);

  static Functional constant(int carrier_size, ExtValue v);
  static Functional zero(int carrier_size) { return constant(carrier_size, ExtValue::of(0)); }

  /// 0 on the set, +inf off it. The set must be non-empty.
  static Functional indicator(int carrier_size, const ElemSet& xs);

  int carrier_size() const { return static_cast<int>(values_.size()); }
  const ExtValue& operator()(int u) const { return values_[u]; }
  const std::vector<ExtValue>& values() const { return values_; }

  /// Pointwise sum; returns nullopt when the sum is +inf everywhere
  /// (which would leave the class of admissible functionals).
  friend std::optional<Functional> try_add(const Functional& a, const Functional& b);

  friend bool operator==(const Functional& a, const Functional& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<ExtValue> values_;
};

/// Elements with finite value. Non-empty by the class invariant.
ElemSet effective_domain(const Functional& a);

void check_carrier(const Functional& a, const Lattice& l);

}  // namespace ordvi
