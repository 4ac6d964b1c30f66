#pragma once

#include "ordvi/poset.hpp"

namespace ordvi {

/// Finite multifunction S between subsets of one ambient poset: defined on
/// `domain`, with all value sets contained in `codomain`. Value sets may be
/// empty unless an operation requires otherwise.
class Multifunction {
 public:
  Multifunction(Poset ambient, std::vector<ElemSet> values);
  Multifunction(Poset ambient, std::vector<ElemSet> values, ElemSet domain, ElemSet codomain);

  static Multifunction identity(const Poset& ambient);
  static Multifunction constant(const Poset& ambient, const ElemSet& value);

  const Poset& ambient() const { return ambient_; }
  const ElemSet& domain() const { return domain_; }
  const ElemSet& codomain() const { return codomain_; }
  const ElemSet& operator()(int v) const;

  Multifunction dual() const;

 private:
  Poset ambient_;
  std::vector<ElemSet> values_;  // indexed by ambient element
  ElemSet domain_, codomain_;
};

}  // namespace ordvi
