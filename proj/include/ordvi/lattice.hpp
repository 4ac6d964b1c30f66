#pragma once

#include "ordvi/poset.hpp"

namespace ordvi {

/// Finite lattice: a poset in which every pair has a meet and a join.
/// Meet/join tables are computed once at construction; construction fails
/// if some pair lacks a greatest lower or least upper bound. The
/// `distributive` flag is established by exhaustive check, never asserted
/// by the caller.
class Lattice {
 public:
  explicit Lattice(Poset poset);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  bool leq(int a, int b) const { return poset_.leq(a, b); }
  const std::string& name(int a) const { return poset_.name(a); }

  int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * size() + b]; }
  int join(int a, int b) const { return join_[static_cast<size_t>(a) * size() + b]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool distributive() const { return distributive_; }

  Lattice dual() const { return Lattice(poset_.dual()); }

  /// Closed under meet and join.
  bool is_sublattice(const ElemSet& xs) const;

  /// All sublattices of the carrier (nonempty subsets closed under both
  /// operations). Intended for small catalog lattices.
  std::vector<ElemSet> sublattices() const;

 private:
  Poset poset_;
  std::vector<int> meet_, join_;
  int bottom_ = -1, top_ = -1;
  bool distributive_ = false;
};

}  // namespace ordvi
