#include "ordvi/lattice.hpp"

#include "ordvi/errors.hpp"

namespace ordvi {

namespace {

// Greatest lower bound of {a,b} under p, or -1 if none.
int glb(const Poset& p, int a, int b) {
  int best = -1;
  for (int c = 0; c < p.size(); ++c) {
    if (!p.leq(c, a) || !p.leq(c, b)) continue;
    if (best == -1 || p.leq(best, c)) best = c;
  }
  if (best == -1) return -1;
  for (int c = 0; c < p.size(); ++c)
    if (p.leq(c, a) && p.leq(c, b) && !p.leq(c, best)) return -1;
  return best;
}

}  // namespace

Lattice::Lattice(Poset poset) : poset_(std::move(poset)) {
  const int n = poset_.size();
  if (n == 0) throw precondition_error("lattice nonempty", "");
  meet_.assign(static_cast<size_t>(n) * n, -1);
  join_.assign(static_cast<size_t>(n) * n, -1);
  const Poset dual = poset_.dual();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = glb(poset_, a, b);
      int j = glb(dual, a, b);
      if (m < 0)
        throw precondition_error("lattice meet exists",
                                 poset_.name(a) + "," + poset_.name(b));
      if (j < 0)
        throw precondition_error("lattice join exists",
                                 poset_.name(a) + "," + poset_.name(b));
      meet_[static_cast<size_t>(a) * n + b] = m;
      join_[static_cast<size_t>(a) * n + b] = j;
    }
  bottom_ = *smallest_element(poset_.carrier(), poset_);
  top_ = *greatest_element(poset_.carrier(), poset_);

  distributive_ = true;
  for (int x = 0; x < n && distributive_; ++x)
    for (int y = 0; y < n && distributive_; ++y)
      for (int z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
          distributive_ = false;
          break;
        }
}

bool Lattice::is_sublattice(const ElemSet& xs) const {
  poset_.check_subset(xs);
  for (int a : xs)
    for (int b : xs)
      if (!set_contains(xs, meet(a, b)) || !set_contains(xs, join(a, b))) return false;
  return true;
}

std::vector<ElemSet> Lattice::sublattices() const {
  const int n = size();
  if (n > 20) throw instance_too_large_error("sublattice enumeration");
  std::vector<ElemSet> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    ElemSet xs;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) xs.push_back(i);
    if (is_sublattice(xs)) out.push_back(std::move(xs));
  }
  return out;
}

}  // namespace ordvi
