#pragma once

#include <string>
#include <vector>

#include "ordvi/lattice.hpp"

namespace ordvi {

struct NamedLattice {
  std::string name;
  Lattice lattice;
};

struct NamedPoset {
  std::string name;
  Poset poset;
};

Lattice make_chain(int n);
/// Product of chains with a x b elements, componentwise order.
Lattice make_chain_product(int a, int b);
/// Boolean lattice {0,1}^k.
Lattice make_boolean(int k);
/// The five-element modular, non-distributive lattice M3.
Lattice make_m3();
/// The pentagon N5 (non-modular).
Lattice make_n5();
/// 2x2 product, bottom/top plus a two-element antichain ("the diamond"
/// in the examples; equals make_boolean(2)).
Lattice make_square();

/// Fixed lattice catalog with at most 6 elements: chains C1..C6, the 2x2
/// square, the 2x3 product, M3 and N5.
const std::vector<NamedLattice>& catalog_lattices_leq6();
/// The distributive members of the catalog.
const std::vector<NamedLattice>& catalog_distributive_leq6();

Poset make_antichain(int n);
/// Four elements a,b,c,d with a<c, b<c, b<d (the "N" shape).
Poset make_n_poset();

/// Poset catalog with at most 5 elements, including non-lattices.
const std::vector<NamedPoset>& catalog_posets_leq5();

}  // namespace ordvi
