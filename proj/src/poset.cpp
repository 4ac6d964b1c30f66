#include "ordvi/poset.hpp"

#include <algorithm>

#include "ordvi/errors.hpp"

namespace ordvi {

ElemSet set_normalize(ElemSet xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool set_contains(const ElemSet& xs, int x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

bool set_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet set_intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Poset::Poset(int n, std::vector<bool> leq, std::vector<std::string> names)
    : n_(n), leq_(std::move(leq)), names_(std::move(names)) {
  if (n_ < 0 || leq_.size() != static_cast<size_t>(n_) * n_)
    throw carrier_mismatch("order table size does not match element count");
  if (names_.empty()) {
    names_.reserve(n_);
    for (int i = 0; i < n_; ++i) names_.push_back("e" + std::to_string(i));
  }
  if (names_.size() != static_cast<size_t>(n_))
    throw carrier_mismatch("name list size does not match element count");
  for (int a = 0; a < n_; ++a) {
    if (!this->leq(a, a)) throw precondition_error("poset reflexivity", names_[a]);
    for (int b = 0; b < n_; ++b) {
      if (a != b && this->leq(a, b) && this->leq(b, a))
        throw precondition_error("poset antisymmetry", names_[a] + "," + names_[b]);
      for (int c = 0; c < n_; ++c)
        if (this->leq(a, b) && this->leq(b, c) && !this->leq(a, c))
          throw precondition_error("poset transitivity",
                                   names_[a] + "," + names_[b] + "," + names_[c]);
    }
  }
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                         std::vector<std::string> names) {
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  for (int a = 0; a < n; ++a) leq[static_cast<size_t>(a) * n + a] = true;
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw carrier_mismatch("cover pair out of range");
    leq[static_cast<size_t>(a) * n + b] = true;
  }
  // Warshall closure
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (leq[static_cast<size_t>(a) * n + k])
        for (int b = 0; b < n; ++b)
          if (leq[static_cast<size_t>(k) * n + b]) leq[static_cast<size_t>(a) * n + b] = true;
  return Poset(n, std::move(leq), std::move(names));
}

ElemSet Poset::carrier() const {
  ElemSet all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return all;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (!lt(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n_ && direct; ++c)
        if (lt(a, c) && lt(c, b)) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

Poset Poset::dual() const {
  std::vector<bool> rev(leq_.size());
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) rev[static_cast<size_t>(a) * n_ + b] = leq(b, a);
  return Poset(n_, std::move(rev), names_);
}

void Poset::check_element(int a) const {
  if (a < 0 || a >= n_) throw carrier_mismatch("element index " + std::to_string(a));
}

void Poset::check_subset(const ElemSet& xs) const {
  for (int x : xs) check_element(x);
}

bool Poset::is_chain() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

std::optional<int> Poset::bottom() const { return smallest_element(carrier(), *this); }
std::optional<int> Poset::top() const { return greatest_element(carrier(), *this); }

ElemSet maximal_elements(const ElemSet& xs, const Poset& p) {
  p.check_subset(xs);
  ElemSet out;
  for (int a : xs) {
    bool maximal = true;
    for (int b : xs)
      if (b != a && p.leq(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

ElemSet minimal_elements(const ElemSet& xs, const Poset& p) {
  return maximal_elements(xs, p.dual());
}

std::optional<int> greatest_element(const ElemSet& xs, const Poset& p) {
  p.check_subset(xs);
  for (int a : xs) {
    bool dominates = true;
    for (int b : xs)
      if (!p.leq(b, a)) {
        dominates = false;
        break;
      }
    if (dominates) return a;
  }
  return std::nullopt;
}

std::optional<int> smallest_element(const ElemSet& xs, const Poset& p) {
  return greatest_element(xs, p.dual());
}

bool is_directed_upward(const ElemSet& xs, const Poset& p) {
  p.check_subset(xs);
  for (int a : xs)
    for (int b : xs) {
      bool bounded = false;
      for (int c : xs)
        if (p.leq(a, c) && p.leq(b, c)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

std::vector<ElemSet> chains_of(const ElemSet& xs, const Poset& p) {
  p.check_subset(xs);
  std::vector<ElemSet> chains{{}};
  for (int x : xs) {
    size_t m = chains.size();
    for (size_t i = 0; i < m; ++i) {
      bool comparable = true;
      for (int c : chains[i])
        if (!p.leq(c, x) && !p.leq(x, c)) {
          comparable = false;
          break;
        }
      if (comparable) {
        ElemSet ext = chains[i];
        ext.push_back(x);
        chains.push_back(set_normalize(std::move(ext)));
      }
    }
  }
  return chains;
}

}  // namespace ordvi
