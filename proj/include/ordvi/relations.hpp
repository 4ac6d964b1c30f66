#pragma once

#include <vector>

#include "ordvi/functional.hpp"
#include "ordvi/lattice.hpp"

namespace ordvi {

/// A <=* B : every a in A has an upper bound in B. The empty set is <=*
/// anything; a non-empty set is never <=* the empty set.
bool star_leq(const ElemSet& a, const ElemSet& b, const Poset& p);

/// a ~< b : a(u^w) + b(u v w) <= a(u) + b(w) for all pairs u,w, with
/// extended-real comparisons.
bool precsim(const Functional& a, const Functional& b, const Lattice& l);

/// The same inequality for one fixed pair (u,w).
bool precsim_wrt(const Functional& a, const Functional& b, int u, int w, const Lattice& l);

/// For all a in A there is b in B with a ~< b.
bool precsim_star(const std::vector<Functional>& a, const std::vector<Functional>& b,
                  const Lattice& l);

/// Strong set order: u^w in A and u v w in B for all u in A, w in B.
bool strong_set_order(const ElemSet& a, const ElemSet& b, const Lattice& l);

bool is_submodular(const Functional& a, const Lattice& l);

struct TransitivityResult {
  bool a_prec_c;        // a ~< c, guaranteed under the preconditions
  bool domains_chain;   // D(a) ~< D(c) in the strong set order
};

/// Modified transitivity: requires a ~< b, b ~< b, b ~< c and a
/// distributive lattice; under these, a ~< c and D(a) ~< D(c) hold.
/// Throws precondition_error naming the failed hypothesis otherwise.
TransitivityResult check_modified_transitivity(const Functional& a, const Functional& b,
                                               const Functional& c, const Lattice& l);

/// [u v (w ^ (u v v))] ^ [w ^ (u v (w ^ v))] == w ^ (u v v) for all
/// triples. Holds in every distributive lattice.
bool distributive_identity_holds(const Lattice& l);
/// First violating triple (u,v,w) if any.
std::optional<std::array<int, 3>> distributive_identity_witness(const Lattice& l);

/// Linear functionals on R^n via coefficient vectors, componentwise order:
/// a ~< b iff every component of a-b is >= 0.
bool precsim_linear(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Evaluation table of a rational linear functional on a finite grid of
/// rational points (used to cross-check precsim_linear against precsim on
/// grid sublattices of R^n).
Functional linear_on_grid(const std::vector<Rat>& coeff,
                          const std::vector<std::vector<Rat>>& points);

/// T-monotone family over grid points: for all u,w and a in A(u), b in
/// A(w): <a-b, (u-w)^+> >= 0, with s^+ = s v 0 componentwise.
bool is_t_monotone(const std::vector<std::vector<std::vector<Rat>>>& family,
                   const std::vector<std::vector<Rat>>& points);

}  // namespace ordvi
