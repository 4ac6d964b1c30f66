#pragma once

#include <map>
#include <string>

#include "ordvi/functional.hpp"
#include "ordvi/multifunction.hpp"

namespace ordvi {

/// Named order-theoretic objects parsed from the fixture text format.
///
/// The format is line based:
///   poset P            / lattice L        -- opens a block
///   elements a b c                        -- carrier, in index order
///   cover a b                             -- a is covered by b
///   end                                   -- closes the block
///   multifunction S over P               -- values over a declared carrier
///   map a -> b c
///   functional f over L                  -- extended-rational values
///   value a 3/2       value b inf
/// Order closure of the cover relation is computed on load; '#' starts a
/// comment. Lattice blocks are verified to actually be lattices.
struct Fixture {
  std::map<std::string, Poset> posets;      // lattice carriers included
  std::map<std::string, Lattice> lattices;
  std::map<std::string, Multifunction> multifunctions;
  std::map<std::string, Functional> functionals;
};

Fixture parse_fixture(const std::string& text);
Fixture load_fixture(const std::string& path);

std::string format_poset(const std::string& name, const Poset& p, bool as_lattice = false);
std::string format_multifunction(const std::string& name, const std::string& over,
                                 const Multifunction& s);
std::string format_functional(const std::string& name, const std::string& over,
                              const Poset& carrier, const Functional& f);

}  // namespace ordvi
