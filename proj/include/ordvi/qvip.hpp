#pragma once

#include "ordvi/fixpoint.hpp"
#include "ordvi/functional.hpp"
#include "ordvi/relations.hpp"

namespace ordvi {

/// Finite quasi-variational inclusion instance. The functional family
/// A(u,v) is kept in additive form: a base part per (u,v) plus an optional
/// "constraint" part per v (the K_v summand and its relaxations); the full
/// family is the Minkowski sum, materialized on access. Sums that are +inf
/// everywhere are dropped (they can never witness a solution and fall
/// outside the admissible functional class).
class QvipInstance {
 public:
  QvipInstance(Lattice w, std::vector<std::vector<std::vector<Functional>>> base,
               std::vector<std::vector<ElemSet>> k_table,
               std::vector<std::vector<ElemSet>> t_table);

  const Lattice& lattice() const { return w_; }
  const Poset& params() const { return w_.poset(); }
  int size() const { return w_.size(); }

  /// A(u,v), materialized.
  std::vector<Functional> family(int u, int v) const;
  const ElemSet& admissible(int u, int v) const { return k_table_[u][v]; }
  const ElemSet& test_set(int u, int v) const { return t_table_[u][v]; }

  /// Declares the per-parameter constraint functional K_v together with a
  /// finite universe of candidate functionals used to enumerate its lower
  /// and upper relaxations.
  void declare_constraint(std::vector<Functional> k_v, std::vector<Functional> universe);
  bool has_constraint() const { return !k_v_.empty(); }
  const Functional& constraint(int v) const { return k_v_.at(v); }
  const std::vector<Functional>& universe() const { return universe_; }

  void set_k_part(std::vector<std::vector<Functional>> k_part) { k_part_ = std::move(k_part); }
  void set_k_table(std::vector<std::vector<ElemSet>> k_table) { k_table_ = std::move(k_table); }
  void set_t_table(std::vector<std::vector<ElemSet>> t_table) { t_table_ = std::move(t_table); }
  const std::vector<std::vector<std::vector<Functional>>>& base() const { return base_; }

 private:
  Lattice w_;
  std::vector<std::vector<std::vector<Functional>>> base_;  // [u][v] -> functionals
  std::vector<std::vector<Functional>> k_part_;             // [v] -> functionals, may be empty
  std::vector<std::vector<ElemSet>> k_table_, t_table_;     // [u][v]
  std::vector<Functional> k_v_;                             // designated K_v per parameter
  std::vector<Functional> universe_;
};

/// Solutions of the parameterized problem at v, with one witnessing
/// functional recorded per solution (first in declared order).
struct SolutionSet {
  int parameter;
  ElemSet solutions;
  std::vector<int> certificate_ids;        // aligned with solutions
  std::vector<Functional> certificates;    // aligned with solutions
};

/// u is a solution iff u in K(u,v) and some a in A(u,v) with a(u) finite
/// has a(w) >= a(u) for every w in T(u,v).
SolutionSet solve_parameterized(const QvipInstance& inst, int v);

/// Tabulates solve_parameterized over all parameters.
Multifunction solution_operator(const QvipInstance& inst);

/// Monotone dependence: under the hypotheses below (validated exhaustively
/// for every u in S(v); precondition_error names the failed clause)
///   A(u,v) ~<* A'(u,v2),  K(u,v) ⊆ K'(u,v2),
///   T'(u,v2) ⊆ T(u,v),    T'(u,v2) <=* {u},
/// the inclusion S(v) ⊆ S'(v2) holds; a false result indicates an
/// implementation bug and carries a witness.
CheckOutcome check_dependence(const QvipInstance& inst, const QvipInstance& inst2, int v,
                              int v2);

/// Replaces the constraint part by the lower relaxation K_v-down (all
/// universe members ~< K_v) and the test sets by u ^ D(K_v). Admissible
/// sets become the full carrier. Requires a declared constraint.
QvipInstance build_sub_operator(const QvipInstance& inst);
/// Dual: K_v-up and u v D(K_v).
QvipInstance build_super_operator(const QvipInstance& inst);

}  // namespace ordvi
