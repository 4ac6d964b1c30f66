#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ordvi {

/// Set of carrier elements, kept sorted and unique.
using ElemSet = std::vector<int>;

ElemSet set_normalize(ElemSet xs);
bool set_contains(const ElemSet& xs, int x);
bool set_subset(const ElemSet& a, const ElemSet& b);
ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_intersect(const ElemSet& a, const ElemSet& b);

/// Finite partially ordered set. Elements are indices 0..size()-1 with
/// optional names; the order is stored as a full boolean relation table.
/// Construction verifies reflexivity, antisymmetry and transitivity.
class Poset {
 public:
  Poset(int n, std::vector<bool> leq, std::vector<std::string> names = {});

  /// Builds the reflexive-transitive closure of a cover relation and
  /// verifies that the result is a partial order (no cycles).
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                           std::vector<std::string> names = {});

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * n_ + b]; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  /// All elements as a set.
  ElemSet carrier() const;

  /// Cover pairs (a,b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  /// Order-dual poset (same carrier, reversed relation).
  Poset dual() const;

  void check_element(int a) const;
  void check_subset(const ElemSet& xs) const;

  bool is_chain() const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_;
  }

 private:
  int n_;
  std::vector<bool> leq_;
  std::vector<std::string> names_;
};

/// Maximal elements of X within P (standard definition; empty X -> empty).
ElemSet maximal_elements(const ElemSet& xs, const Poset& p);
ElemSet minimal_elements(const ElemSet& xs, const Poset& p);

/// Greatest element of X if it exists (dominates all of X), else nullopt.
std::optional<int> greatest_element(const ElemSet& xs, const Poset& p);
std::optional<int> smallest_element(const ElemSet& xs, const Poset& p);

/// Every pair in X has an upper bound inside X.
bool is_directed_upward(const ElemSet& xs, const Poset& p);

/// All chains (totally ordered subsets) of X, the empty chain included.
std::vector<ElemSet> chains_of(const ElemSet& xs, const Poset& p);

}  // namespace ordvi
