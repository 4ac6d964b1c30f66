#include <chrono>

#include "ordvi/catalog.hpp"
#include "ordvi/fixpoint.hpp"
#include "suite_detail.hpp"

namespace ordvi {

using namespace suite_detail;

namespace {

Multifunction random_multifunction(Rng& rng, const Poset& p, double keep = 0.4) {
  std::vector<ElemSet> vals(p.size());
  for (int v = 0; v < p.size(); ++v) vals[v] = random_subset(rng, p.size(), keep);
  return Multifunction(p, std::move(vals));
}

// Random increasing-upward multifunction: rejection first, then a repair
// pass that adds missing upper-bound witnesses until the property holds.
Multifunction random_increasing_upward(Rng& rng, const Poset& p, bool nonempty) {
  std::vector<ElemSet> vals(p.size());
  for (int v = 0; v < p.size(); ++v)
    vals[v] = random_subset(rng, p.size(), nonempty ? 0.5 : 0.4);
  if (nonempty)
    for (int v = 0; v < p.size(); ++v)
      if (vals[v].empty()) vals[v] = {rng.range(0, p.size() - 1)};
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < p.size(); ++v)
      for (int w = 0; w < p.size(); ++w) {
        if (!p.leq(v, w) || v == w) continue;
        for (int a : vals[v]) {
          bool bounded = false;
          for (int b : vals[w]) bounded = bounded || p.leq(a, b);
          if (!bounded) {
            vals[w] = set_union(vals[w], {a});
            changed = true;
          }
        }
      }
  }
  return Multifunction(p, std::move(vals));
}

ElemSet join_closure(ElemSet xs, const Lattice& l) {
  for (bool changed = true; changed;) {
    changed = false;
    ElemSet add;
    for (int a : xs)
      for (int b : xs) {
        int j = l.join(a, b);
        if (!set_contains(xs, j) && !set_contains(add, j)) add.push_back(j);
      }
    if (!add.empty()) {
      xs = set_union(xs, set_normalize(add));
      changed = true;
    }
  }
  return xs;
}

ElemSet meet_closure(ElemSet xs, const Lattice& l) {
  for (bool changed = true; changed;) {
    changed = false;
    ElemSet add;
    for (int a : xs)
      for (int b : xs) {
        int m = l.meet(a, b);
        if (!set_contains(xs, m) && !set_contains(add, m)) add.push_back(m);
      }
    if (!add.empty()) {
      xs = set_union(xs, set_normalize(add));
      changed = true;
    }
  }
  return xs;
}

// Elements listed bottom-up (by number of elements below).
std::vector<int> linear_extension(const Poset& p) {
  std::vector<int> order(p.size());
  for (int i = 0; i < p.size(); ++i) order[i] = i;
  std::vector<int> rank(p.size(), 0);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.lt(b, a)) ++rank[a];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
  return order;
}

struct GfpInstance {
  Multifunction s;
  Multifunction ul_s;
  int seed_elem;
};

// Instance satisfying the greatest-fixed-point theorem hypotheses: ul_S is
// permanent upward with join-closed values, S keeps the maximal elements
// of ul_S(v) plus a random slice, the seed is the bottom element.
GfpInstance gen_gfp_instance(Rng& rng, const Lattice& l) {
  const Poset& p = l.poset();
  std::vector<ElemSet> ul(p.size()), s(p.size());
  for (int v : linear_extension(p)) {
    ElemSet base;
    for (int w = 0; w < p.size(); ++w)
      if (p.lt(w, v)) base = set_union(base, ul[w]);
    base = set_union(base, random_subset(rng, p.size(), 0.3));
    if (v == l.bottom() && base.empty()) base = {rng.range(0, p.size() - 1)};
    ul[v] = join_closure(std::move(base), l);
  }
  for (int v = 0; v < p.size(); ++v) {
    ElemSet keep = maximal_elements(ul[v], p);
    for (int a : ul[v])
      if (rng.coin(0.3)) keep = set_union(keep, {a});
    s[v] = keep;
  }
  return {Multifunction(p, std::move(s)), Multifunction(p, std::move(ul)), l.bottom()};
}

GfpInstance gen_sfp_instance(Rng& rng, const Lattice& l) {
  const Poset& p = l.poset();
  std::vector<ElemSet> ol(p.size()), s(p.size());
  auto order = linear_extension(p);
  std::reverse(order.begin(), order.end());
  for (int v : order) {
    ElemSet base;
    for (int w = 0; w < p.size(); ++w)
      if (p.lt(v, w)) base = set_union(base, ol[w]);
    base = set_union(base, random_subset(rng, p.size(), 0.3));
    if (v == l.top() && base.empty()) base = {rng.range(0, p.size() - 1)};
    ol[v] = meet_closure(std::move(base), l);
  }
  for (int v = 0; v < p.size(); ++v) {
    ElemSet keep = minimal_elements(ol[v], p);
    for (int a : ol[v])
      if (rng.coin(0.3)) keep = set_union(keep, {a});
    s[v] = keep;
  }
  return {Multifunction(p, std::move(s)), Multifunction(p, std::move(ol)), l.top()};
}

}  // namespace

SuiteReport run_fixpoint_suite(std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(seed ^ 0xf1f901ULL);
  SuiteReport rep;
  rep.suite = "fixpoint";

  const auto& cat = catalog_lattices_leq6();

  CheckLine fix_sub{"fix S subset of sub S"};
  CheckLine meta{"maximal subpoints are maximal fixed points (increasing upward)"};
  for (const auto& [name, lat] : cat) {
    const Poset& p = lat.poset();
    for (int k = 0; k < 1000; ++k) {
      Multifunction s = random_increasing_upward(rng, p, rng.coin());
      tally(fix_sub, set_subset(fixed_points(s), subpoints(s)), name);
      auto outcome = check_prop_meta(s);
      tally(meta, outcome.ok, name + ": " + outcome.witness);
    }
  }
  rep.checks.push_back(fix_sub);
  rep.checks.push_back(meta);

  CheckLine inductive{"sub S inductive for increasing-upward S with non-empty values"};
  CheckLine nonempty{"sub S non-empty on carriers with a bottom element"};
  for (const auto& [name, lat] : cat) {
    const Poset& p = lat.poset();
    if (p.size() > 5) continue;
    for (int k = 0; k < 200; ++k) {
      Multifunction s = random_increasing_upward(rng, p, /*nonempty=*/true);
      ElemSet sub = subpoints(s);
      tally(nonempty, !sub.empty(), name);
      bool all_bounded = true;
      for (const auto& chain : chains_of(sub, p)) {
        bool bounded = false;
        for (int d : sub)
          if (star_leq(chain, {d}, p)) {
            bounded = true;
            break;
          }
        all_bounded = all_bounded && bounded;
      }
      tally(inductive, all_bounded, name);
    }
  }
  rep.checks.push_back(inductive);
  rep.checks.push_back(nonempty);

  CheckLine transport{"equivalence transport of increasing upward"};
  for (const auto& [name, lat] : cat) {
    const Poset& p = lat.poset();
    for (int k = 0; k < 300; ++k) {
      Multifunction s = random_multifunction(rng, p);
      // ul: add elements dominated by existing members; S <=* ul <=* S
      std::vector<ElemSet> ul_vals(p.size());
      for (int v = 0; v < p.size(); ++v) {
        ElemSet xs = s(v);
        for (int c = 0; c < p.size(); ++c) {
          if (!rng.coin(0.3)) continue;
          for (int a : s(v))
            if (p.leq(c, a)) {
              xs = set_union(xs, {c});
              break;
            }
        }
        ul_vals[v] = xs;
      }
      Multifunction ul(p, std::move(ul_vals));
      tally(transport, is_increasing_upward(s) == is_increasing_upward(ul), name);
    }
  }
  rep.checks.push_back(transport);

  CheckLine directed_i{"greatest fixed point exists when fix S is directed (Prop i)"};
  CheckLine directed_ii{"permanent upward + directed values give directed fix S (Prop ii)"};
  for (const auto& [name, lat] : cat) {
    const Poset& p = lat.poset();
    for (int k = 0; k < 300; ++k) {
      Multifunction s = random_multifunction(rng, p);
      ElemSet fix = fixed_points(s);
      if (!fix.empty() && is_directed_upward(fix, p))
        tally(directed_i, greatest_element(fix, p).has_value(), name);

      // permanent upward with join-closed values
      std::vector<ElemSet> vals(p.size());
      for (int v : linear_extension(p)) {
        ElemSet base = random_subset(rng, p.size(), 0.25);
        for (int w = 0; w < p.size(); ++w)
          if (p.lt(w, v)) base = set_union(base, vals[w]);
        vals[v] = join_closure(std::move(base), lat);
      }
      Multifunction perm(p, std::move(vals));
      tally(directed_ii, is_directed_upward(fixed_points(perm), p), name);
    }
  }
  rep.checks.push_back(directed_i);
  rep.checks.push_back(directed_ii);

  CheckLine gfp{"constructive greatest fixed point equals brute force"};
  CheckLine sfp{"constructive smallest fixed point equals brute force"};
  for (int k = 0; k < 200; ++k) {
    const auto& named = cat[rng.below(cat.size())];
    {
      GfpInstance inst = gen_gfp_instance(rng, named.lattice);
      GfpResult got = greatest_fixed_point(inst.s, inst.ul_s, named.lattice, inst.seed_elem);
      auto expect = greatest_element(fixed_points(inst.s), named.lattice.poset());
      bool pass = expect.has_value() && got.fixed_point == *expect &&
                  named.lattice.leq(inst.seed_elem, got.fixed_point);
      tally(gfp, pass, named.name);
    }
    {
      GfpInstance inst = gen_sfp_instance(rng, named.lattice);
      GfpResult got = smallest_fixed_point(inst.s, inst.ul_s, named.lattice, inst.seed_elem);
      auto expect = smallest_element(fixed_points(inst.s), named.lattice.poset());
      bool pass = expect.has_value() && got.fixed_point == *expect &&
                  named.lattice.leq(got.fixed_point, inst.seed_elem);
      tally(sfp, pass, named.name);
    }
  }
  rep.checks.push_back(gfp);
  rep.checks.push_back(sfp);

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace ordvi
