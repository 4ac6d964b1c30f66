#pragma once

// Internal helpers shared by the verification suites.

#include "ordvi/relations.hpp"
#include "ordvi/rng.hpp"
#include "ordvi/suites.hpp"

namespace ordvi::suite_detail {

inline void tally(CheckLine& line, bool pass, const std::string& what) {
  ++line.samples;
  if (!pass) {
    if (!line.failures) line.first_failure = what;
    ++line.failures;
  }
}

inline std::vector<ElemSet> all_subsets(int n) {
  std::vector<ElemSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ElemSet xs;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) xs.push_back(i);
    out.push_back(std::move(xs));
  }
  return out;
}

inline Functional random_functional(Rng& rng, int n) {
  for (;;) {
    std::vector<ExtValue> vals(n);
    bool any_finite = false;
    for (int i = 0; i < n; ++i) {
      if (rng.coin(0.25)) {
        vals[i] = ExtValue::infinity();
      } else {
        vals[i] = ExtValue::of(rng.range(-2, 3));
        any_finite = true;
      }
    }
    if (any_finite) return Functional(std::move(vals));
  }
}

/// Pool of functionals with a precomputed ~< relation, the backbone of the
/// hypothesis-satisfying triple/pair generators.
struct Pool {
  std::vector<Functional> fns;
  std::vector<bool> rel;  // rel[a*size+b] = (fns[a] ~< fns[b])
  std::vector<int> submodular;

  bool prec(int a, int b) const { return rel[static_cast<size_t>(a) * fns.size() + b]; }
  /// Some b with fns[a] ~< fns[b], or -1.
  int successor(int a, Rng& rng) const {
    std::vector<int> succ;
    for (size_t b = 0; b < fns.size(); ++b)
      if (prec(a, static_cast<int>(b))) succ.push_back(static_cast<int>(b));
    if (succ.empty()) return -1;
    return succ[rng.below(succ.size())];
  }
};

inline Pool build_pool(const Lattice& l, Rng& rng, int random_count) {
  Pool pool;
  for (const auto& xs : l.sublattices()) pool.fns.push_back(Functional::indicator(l.size(), xs));
  pool.fns.push_back(Functional::zero(l.size()));
  for (int k = 0; k < random_count; ++k) pool.fns.push_back(random_functional(rng, l.size()));
  const size_t m = pool.fns.size();
  pool.rel.assign(m * m, false);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      pool.rel[a * m + b] = precsim(pool.fns[a], pool.fns[b], l);
  for (size_t a = 0; a < m; ++a)
    if (pool.rel[a * m + a]) pool.submodular.push_back(static_cast<int>(a));
  return pool;
}

inline ElemSet random_subset(Rng& rng, int n, double keep = 0.5) {
  ElemSet out;
  for (int i = 0; i < n; ++i)
    if (rng.coin(keep)) out.push_back(i);
  return out;
}

}  // namespace ordvi::suite_detail
