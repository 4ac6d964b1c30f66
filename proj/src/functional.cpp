#include "ordvi/functional.hpp"

#include "ordvi/errors.hpp"

namespace ordvi {

Functional::Functional(std::vector<ExtValue> values) : values_(std::move(values)) {
  bool any_finite = false;
  for (const auto& v : values_) any_finite = any_finite || v.finite();
  if (!any_finite)
    throw precondition_error("functional has non-empty effective domain", "");
}

Functional Functional::constant(int carrier_size, ExtValue v) {
  return Functional(std::vector<ExtValue>(carrier_size, v));
}

Functional Functional::indicator(int carrier_size, const ElemSet& xs) {
  std::vector<ExtValue> vals(carrier_size, ExtValue::infinity());
  for (int x : xs) {
    if (x < 0 || x >= carrier_size) throw carrier_mismatch("indicator element out of range");
    vals[x] = ExtValue::of(0);
  }
  return Functional(std::move(vals));
}

std::optional<Functional> try_add(const Functional& a, const Functional& b) {
  if (a.carrier_size() != b.carrier_size())
    throw carrier_mismatch("functional sum on different carriers");
  std::vector<ExtValue> vals(a.values_.size());
  bool any_finite = false;
  for (size_t i = 0; i < vals.size(); ++i) {
    vals[i] = a.values_[i] + b.values_[i];
    any_finite = any_finite || vals[i].finite();
  }
  if (!any_finite) return std::nullopt;
  return Functional(std::move(vals));
}

ElemSet effective_domain(const Functional& a) {
  ElemSet out;
  for (int u = 0; u < a.carrier_size(); ++u)
    if (a(u).finite()) out.push_back(u);
  return out;
}

void check_carrier(const Functional& a, const Lattice& l) {
  if (a.carrier_size() != l.size())
    throw carrier_mismatch("functional carrier does not match lattice");
}

}  // namespace ordvi
