#include "ordvi/relations.hpp"

#include <array>

#include "ordvi/errors.hpp"

namespace ordvi {

bool star_leq(const ElemSet& a, const ElemSet& b, const Poset& p) {
  p.check_subset(a);
  p.check_subset(b);
  for (int x : a) {
    bool bounded = false;
    for (int y : b)
      if (p.leq(x, y)) {
        bounded = true;
        break;
      }
    if (!bounded) return false;
  }
  return true;
}

bool precsim_wrt(const Functional& a, const Functional& b, int u, int w, const Lattice& l) {
  check_carrier(a, l);
  check_carrier(b, l);
  ExtValue lhs = a(l.meet(u, w)) + b(l.join(u, w));
  ExtValue rhs = a(u) + b(w);
  return ext_leq(lhs, rhs);
}

bool precsim(const Functional& a, const Functional& b, const Lattice& l) {
  check_carrier(a, l);
  check_carrier(b, l);
  for (int u = 0; u < l.size(); ++u)
    for (int w = 0; w < l.size(); ++w)
      if (!precsim_wrt(a, b, u, w, l)) return false;
  return true;
}

bool precsim_star(const std::vector<Functional>& a, const std::vector<Functional>& b,
                  const Lattice& l) {
  for (const auto& fa : a) {
    bool dominated = false;
    for (const auto& fb : b)
      if (precsim(fa, fb, l)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

bool strong_set_order(const ElemSet& a, const ElemSet& b, const Lattice& l) {
  l.poset().check_subset(a);
  l.poset().check_subset(b);
  for (int u : a)
    for (int w : b)
      if (!set_contains(a, l.meet(u, w)) || !set_contains(b, l.join(u, w))) return false;
  return true;
}

bool is_submodular(const Functional& a, const Lattice& l) { return precsim(a, a, l); }

TransitivityResult check_modified_transitivity(const Functional& a, const Functional& b,
                                               const Functional& c, const Lattice& l) {
  if (!l.distributive()) throw precondition_error("lattice distributive", "");
  if (!precsim(a, b, l)) throw precondition_error("a ~< b", "");
  if (!precsim(b, b, l)) throw precondition_error("b ~< b", "");
  if (!precsim(b, c, l)) throw precondition_error("b ~< c", "");
  TransitivityResult r;
  r.a_prec_c = precsim(a, c, l);
  r.domains_chain = strong_set_order(effective_domain(a), effective_domain(c), l);
  return r;
}

std::optional<std::array<int, 3>> distributive_identity_witness(const Lattice& l) {
  for (int u = 0; u < l.size(); ++u)
    for (int v = 0; v < l.size(); ++v)
      for (int w = 0; w < l.size(); ++w) {
        int lhs = l.meet(l.join(u, l.meet(w, l.join(u, v))),
                         l.meet(w, l.join(u, l.meet(w, v))));
        int rhs = l.meet(w, l.join(u, v));
        if (lhs != rhs) return std::array<int, 3>{u, v, w};
      }
  return std::nullopt;
}

bool distributive_identity_holds(const Lattice& l) {
  return !distributive_identity_witness(l).has_value();
}

bool precsim_linear(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw carrier_mismatch("linear functional dimension mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] - b[i] < Rat(0)) return false;
  return true;
}

Functional linear_on_grid(const std::vector<Rat>& coeff,
                          const std::vector<std::vector<Rat>>& points) {
  std::vector<ExtValue> vals;
  vals.reserve(points.size());
  for (const auto& pt : points) {
    if (pt.size() != coeff.size())
      throw carrier_mismatch("grid point dimension mismatch");
    Rat s(0);
    for (size_t i = 0; i < coeff.size(); ++i) s += coeff[i] * pt[i];
    vals.push_back(ExtValue(s));
  }
  return Functional(std::move(vals));
}

bool is_t_monotone(const std::vector<std::vector<std::vector<Rat>>>& family,
                   const std::vector<std::vector<Rat>>& points) {
  const size_t m = points.size();
  if (family.size() != m) throw carrier_mismatch("family size does not match point count");
  for (size_t iu = 0; iu < m; ++iu)
    for (size_t iw = 0; iw < m; ++iw)
      for (const auto& a : family[iu])
        for (const auto& b : family[iw]) {
          Rat pairing(0);
          for (size_t k = 0; k < a.size(); ++k) {
            Rat diff = points[iu][k] - points[iw][k];
            Rat pos = diff > Rat(0) ? diff : Rat(0);  // s^+ = s v 0
            pairing += (a[k] - b[k]) * pos;
          }
          if (pairing < Rat(0)) return false;
        }
  return true;
}

}  // namespace ordvi
