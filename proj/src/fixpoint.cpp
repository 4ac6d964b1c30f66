#include "ordvi/fixpoint.hpp"

#include <algorithm>

#include "ordvi/errors.hpp"
#include "ordvi/relations.hpp"

namespace ordvi {

Multifunction::Multifunction(Poset ambient, std::vector<ElemSet> values)
    : Multifunction(std::move(ambient), std::move(values), {}, {}) {
  domain_ = ambient_.carrier();
  codomain_ = ambient_.carrier();
}

Multifunction::Multifunction(Poset ambient, std::vector<ElemSet> values, ElemSet domain,
                             ElemSet codomain)
    : ambient_(std::move(ambient)),
      values_(std::move(values)),
      domain_(set_normalize(std::move(domain))),
      codomain_(set_normalize(std::move(codomain))) {
  if (values_.size() != static_cast<size_t>(ambient_.size()))
    throw carrier_mismatch("value table size does not match carrier");
  ambient_.check_subset(domain_);
  ambient_.check_subset(codomain_);
  for (auto& vs : values_) {
    vs = set_normalize(std::move(vs));
    ambient_.check_subset(vs);
    if (!codomain_.empty() && !set_subset(vs, codomain_))
      throw carrier_mismatch("value set escapes the declared codomain");
  }
}

Multifunction Multifunction::identity(const Poset& ambient) {
  std::vector<ElemSet> vals(ambient.size());
  for (int v = 0; v < ambient.size(); ++v) vals[v] = {v};
  return Multifunction(ambient, std::move(vals));
}

Multifunction Multifunction::constant(const Poset& ambient, const ElemSet& value) {
  return Multifunction(ambient, std::vector<ElemSet>(ambient.size(), value));
}

const ElemSet& Multifunction::operator()(int v) const {
  ambient_.check_element(v);
  return values_[v];
}

Multifunction Multifunction::dual() const {
  return Multifunction(ambient_.dual(), values_, domain_, codomain_);
}

ElemSet subpoints(const Multifunction& s) {
  ElemSet out;
  for (int v : s.domain())
    if (set_contains(s.codomain(), v) && star_leq({v}, s(v), s.ambient())) out.push_back(v);
  return out;
}

ElemSet fixed_points(const Multifunction& s) {
  ElemSet out;
  for (int v : s.domain())
    if (set_contains(s(v), v)) out.push_back(v);
  return out;
}

bool is_increasing_upward(const Multifunction& s) {
  for (int v : s.domain())
    for (int w : s.domain())
      if (s.ambient().leq(v, w) && !star_leq(s(v), s(w), s.ambient())) return false;
  return true;
}

bool is_permanent_upward(const Multifunction& s) {
  for (int v : s.domain())
    for (int w : s.domain())
      if (s.ambient().leq(v, w) && !set_subset(s(v), s(w))) return false;
  return true;
}

CheckOutcome check_prop_meta(const Multifunction& s) {
  if (!is_increasing_upward(s))
    throw precondition_error("S increasing upward", "");
  ElemSet max_sub = maximal_elements(subpoints(s), s.ambient());
  ElemSet max_fix = maximal_elements(fixed_points(s), s.ambient());
  for (int v : max_sub)
    if (!set_contains(max_fix, v))
      return {false, "maximal subpoint " + s.ambient().name(v) + " not a maximal fixed point"};
  return {};
}

FixpointReport fixpoint_report(const Multifunction& s) {
  FixpointReport r;
  r.subpoints = subpoints(s);
  r.fixed_points = fixed_points(s);
  r.maximal_fixed_points = maximal_elements(r.fixed_points, s.ambient());
  r.greatest_fixed_point = greatest_element(r.fixed_points, s.ambient());
  return r;
}

namespace {

std::string pair_witness(const Multifunction& s, int v, int w) {
  return s.ambient().name(v) + " <= " + s.ambient().name(w);
}

void validate_gfp_hypotheses(const Multifunction& s, const Multifunction& ul_s,
                             const Lattice& d, int ul_u) {
  const Poset& p = d.poset();
  for (int v : s.domain())
    if (s(v).empty())
      throw precondition_error("values of S non-empty", p.name(v));
  for (int v : ul_s.domain())
    for (int w : ul_s.domain())
      if (p.leq(v, w) && !set_subset(ul_s(v), ul_s(w)))
        throw precondition_error("ul_S permanent upward", pair_witness(s, v, w));
  for (int v : ul_s.domain())
    if (!is_directed_upward(ul_s(v), p))
      throw precondition_error("values of ul_S directed upward", p.name(v));
  for (int v : s.domain()) {
    if (!set_subset(s(v), ul_s(v)))
      throw precondition_error("S(v) subset of ul_S(v)", p.name(v));
    if (!star_leq(ul_s(v), s(v), p))
      throw precondition_error("ul_S(v) <=* S(v)", p.name(v));
  }
  if (!star_leq({ul_u}, ul_s(ul_u), p))
    throw precondition_error("ul_u <=* ul_S(ul_u)", p.name(ul_u));
}

// From v, jump to a maximal witness w in S(v) with v <= w (ties broken by
// element index). Returns v itself when no strictly larger witness exists.
int witness_jump(const Multifunction& s, const Poset& p, int v) {
  ElemSet ups;
  for (int w : s(v))
    if (p.leq(v, w)) ups.push_back(w);
  if (ups.empty()) return v;
  ElemSet maxima = maximal_elements(ups, p);
  return maxima.front();
}

}  // namespace

GfpResult greatest_fixed_point(const Multifunction& s, const Multifunction& ul_s,
                               const Lattice& d, int ul_u) {
  d.poset().check_element(ul_u);
  validate_gfp_hypotheses(s, ul_s, d, ul_u);
  const Poset& p = d.poset();

  GfpResult res;
  int v = ul_u;
  res.ascent.push_back(v);

  // Tarski-style ascent from ul_u through sub S: jump to maximal witnesses
  // while possible. Witness jumps alone can stall strictly below the
  // greatest fixed point (the value set at v need not mention larger
  // subpoints), so on a stall we scan for a strictly larger subpoint of S;
  // when none exists, v is a maximal subpoint and hence a maximal fixed
  // point, which under the hypotheses is the greatest one. The first jump
  // from ul_u is covered by ul_u <=* ul_S(ul_u) <=* S(ul_u).
  for (;;) {
    int w = witness_jump(s, p, v);
    if (w != v) {
      v = w;
      res.ascent.push_back(v);
      continue;
    }
    // stalled: look for any strictly larger subpoint
    bool moved = false;
    for (int c = 0; c < p.size(); ++c) {
      if (!p.lt(v, c) || !set_contains(s.domain(), c) || !set_contains(s.codomain(), c))
        continue;
      if (star_leq({c}, s(c), p)) {
        v = c;
        res.ascent.push_back(v);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }

  if (!set_contains(s(v), v))
    throw precondition_error("ascent terminates in fix S", p.name(v));
  res.fixed_point = v;
  return res;
}

GfpResult smallest_fixed_point(const Multifunction& s, const Multifunction& ol_s,
                               const Lattice& d, int ol_u) {
  return greatest_fixed_point(s.dual(), ol_s.dual(), d.dual(), ol_u);
}

}  // namespace ordvi
