#include "ordvi/catalog.hpp"

namespace ordvi {

Lattice make_chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Lattice(Poset::from_covers(n, covers));
}

Lattice make_chain_product(int a, int b) {
  const int n = a * b;
  auto id = [b](int i, int j) { return i * b + j; };
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  for (int i1 = 0; i1 < a; ++i1)
    for (int j1 = 0; j1 < b; ++j1)
      for (int i2 = 0; i2 < a; ++i2)
        for (int j2 = 0; j2 < b; ++j2)
          leq[static_cast<size_t>(id(i1, j1)) * n + id(i2, j2)] = i1 <= i2 && j1 <= j2;
  return Lattice(Poset(n, std::move(leq)));
}

Lattice make_boolean(int k) {
  const int n = 1 << k;
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = (a & b) == a;
  return Lattice(Poset(n, std::move(leq)));
}

Lattice make_square() { return make_boolean(2); }

Lattice make_m3() {
  // 0 = bottom, 1,2,3 = middle antichain, 4 = top
  return Lattice(Poset::from_covers(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
      {"bot", "a", "b", "c", "top"}));
}

Lattice make_n5() {
  // 0 = bottom, chain 0<1<2<4, and 0<3<4 with 3 incomparable to 1,2
  return Lattice(Poset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                                    {"bot", "a", "c", "b", "top"}));
}

const std::vector<NamedLattice>& catalog_lattices_leq6() {
  static const std::vector<NamedLattice> cat = [] {
    std::vector<NamedLattice> v;
    for (int n = 1; n <= 6; ++n) v.push_back({"chain" + std::to_string(n), make_chain(n)});
    v.push_back({"square", make_square()});
    v.push_back({"prod2x3", make_chain_product(2, 3)});
    v.push_back({"m3", make_m3()});
    v.push_back({"n5", make_n5()});
    return v;
  }();
  return cat;
}

const std::vector<NamedLattice>& catalog_distributive_leq6() {
  static const std::vector<NamedLattice> cat = [] {
    std::vector<NamedLattice> v;
    for (const auto& nl : catalog_lattices_leq6())
      if (nl.lattice.distributive()) v.push_back(nl);
    return v;
  }();
  return cat;
}

Poset make_antichain(int n) { return Poset::from_covers(n, {}); }

Poset make_n_poset() {
  return Poset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}}, {"a", "b", "c", "d"});
}

const std::vector<NamedPoset>& catalog_posets_leq5() {
  static const std::vector<NamedPoset> cat = [] {
    std::vector<NamedPoset> v;
    for (int n = 1; n <= 5; ++n)
      v.push_back({"chain" + std::to_string(n), make_chain(n).poset()});
    v.push_back({"antichain2", make_antichain(2)});
    v.push_back({"antichain3", make_antichain(3)});
    v.push_back({"nposet", make_n_poset()});
    v.push_back({"square", make_square().poset()});
    v.push_back({"m3", make_m3().poset()});
    v.push_back({"vee", Poset::from_covers(3, {{0, 1}, {0, 2}})});
    v.push_back({"wedge", Poset::from_covers(3, {{0, 2}, {1, 2}})});
    return v;
  }();
  return cat;
}

}  // namespace ordvi
