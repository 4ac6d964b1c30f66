#include "ordvi/qvip.hpp"

#include "ordvi/errors.hpp"

namespace ordvi {

QvipInstance::QvipInstance(Lattice w, std::vector<std::vector<std::vector<Functional>>> base,
                           std::vector<std::vector<ElemSet>> k_table,
                           std::vector<std::vector<ElemSet>> t_table)
    : w_(std::move(w)),
      base_(std::move(base)),
      k_table_(std::move(k_table)),
      t_table_(std::move(t_table)) {
  const size_t n = static_cast<size_t>(w_.size());
  if (base_.size() != n || k_table_.size() != n || t_table_.size() != n)
    throw carrier_mismatch("instance tables do not match carrier");
  for (size_t u = 0; u < n; ++u) {
    if (base_[u].size() != n || k_table_[u].size() != n || t_table_[u].size() != n)
      throw carrier_mismatch("instance tables do not match carrier");
    for (size_t v = 0; v < n; ++v) {
      for (const auto& a : base_[u][v]) check_carrier(a, w_);
      w_.poset().check_subset(k_table_[u][v]);
      w_.poset().check_subset(t_table_[u][v]);
    }
  }
}

std::vector<Functional> QvipInstance::family(int u, int v) const {
  w_.poset().check_element(u);
  w_.poset().check_element(v);
  if (k_part_.empty()) return base_[u][v];
  std::vector<Functional> out;
  for (const auto& a : base_[u][v])
    for (const auto& k : k_part_[v])
      if (auto sum = try_add(a, k)) out.push_back(std::move(*sum));
  return out;
}

void QvipInstance::declare_constraint(std::vector<Functional> k_v,
                                      std::vector<Functional> universe) {
  if (k_v.size() != static_cast<size_t>(w_.size()))
    throw carrier_mismatch("one constraint functional per parameter required");
  for (const auto& k : k_v) check_carrier(k, w_);
  for (const auto& k : universe) check_carrier(k, w_);
  k_v_ = std::move(k_v);
  universe_ = std::move(universe);
}

SolutionSet solve_parameterized(const QvipInstance& inst, int v) {
  inst.params().check_element(v);
  SolutionSet out;
  out.parameter = v;
  for (int u = 0; u < inst.size(); ++u) {
    if (!set_contains(inst.admissible(u, v), u)) continue;
    const auto family = inst.family(u, v);
    for (size_t ai = 0; ai < family.size(); ++ai) {
      const Functional& a = family[ai];
      if (!a(u).finite()) continue;  // a solution implicitly lies in D(a)
      bool ok = true;
      for (int w : inst.test_set(u, v))
        if (!ext_leq(a(u), a(w))) {
          ok = false;
          break;
        }
      if (ok) {
        out.solutions.push_back(u);
        out.certificate_ids.push_back(static_cast<int>(ai));
        out.certificates.push_back(a);
        break;
      }
    }
  }
  return out;
}

Multifunction solution_operator(const QvipInstance& inst) {
  std::vector<ElemSet> vals(inst.size());
  for (int v = 0; v < inst.size(); ++v) vals[v] = solve_parameterized(inst, v).solutions;
  return Multifunction(inst.params(), std::move(vals));
}

CheckOutcome check_dependence(const QvipInstance& inst, const QvipInstance& inst2, int v,
                              int v2) {
  const Lattice& l = inst.lattice();
  const Poset& p = l.poset();
  p.check_element(v);
  p.check_element(v2);
  if (inst2.size() != inst.size()) throw carrier_mismatch("instances on different carriers");
  if (!p.leq(v, v2)) throw precondition_error("v <= v2", p.name(v) + "," + p.name(v2));

  SolutionSet sv = solve_parameterized(inst, v);
  for (int u : sv.solutions) {
    if (!precsim_star(inst.family(u, v), inst2.family(u, v2), l))
      throw precondition_error("A(u,v) ~<* A'(u,v2)", p.name(u));
    if (!set_subset(inst.admissible(u, v), inst2.admissible(u, v2)))
      throw precondition_error("K(u,v) subset of K'(u,v2)", p.name(u));
    if (!set_subset(inst2.test_set(u, v2), inst.test_set(u, v)))
      throw precondition_error("T'(u,v2) subset of T(u,v)", p.name(u));
    if (!star_leq(inst2.test_set(u, v2), {u}, p))
      throw precondition_error("T'(u,v2) <=* {u}", p.name(u));
  }

  SolutionSet sv2 = solve_parameterized(inst2, v2);
  for (int u : sv.solutions)
    if (!set_contains(sv2.solutions, u))
      return {false, "solution " + p.name(u) + " of (QVIP_v) lost at v2"};
  return {};
}

namespace {

QvipInstance build_relaxed(const QvipInstance& inst, bool lower) {
  if (!inst.has_constraint())
    throw precondition_error("functional universe declared", "build_sub/super_operator");
  const Lattice& l = inst.lattice();
  const int n = inst.size();

  std::vector<std::vector<Functional>> k_part(n);
  for (int v = 0; v < n; ++v) {
    const Functional& kv = inst.constraint(v);
    for (const auto& cand : inst.universe()) {
      bool in = lower ? precsim(cand, kv, l) : precsim(kv, cand, l);
      if (in) k_part[v].push_back(cand);
    }
  }

  std::vector<std::vector<ElemSet>> k_table(n, std::vector<ElemSet>(n, l.poset().carrier()));
  std::vector<std::vector<ElemSet>> t_table(n, std::vector<ElemSet>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      ElemSet t;
      for (int w : effective_domain(inst.constraint(v)))
        t.push_back(lower ? l.meet(u, w) : l.join(u, w));
      t_table[u][v] = set_normalize(std::move(t));
    }

  QvipInstance out(l, inst.base(), std::move(k_table), std::move(t_table));
  out.set_k_part(std::move(k_part));
  std::vector<Functional> ks;
  for (int v = 0; v < n; ++v) ks.push_back(inst.constraint(v));
  out.declare_constraint(std::move(ks), inst.universe());
  return out;
}

}  // namespace

QvipInstance build_sub_operator(const QvipInstance& inst) { return build_relaxed(inst, true); }
QvipInstance build_super_operator(const QvipInstance& inst) { return build_relaxed(inst, false); }

}  // namespace ordvi
