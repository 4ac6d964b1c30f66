#pragma once

#include "ordvi/lattice.hpp"
#include "ordvi/multifunction.hpp"

namespace ordvi {

/// sub S = { v in codomain ∩ domain : {v} <=* S(v) }. Elements with empty
/// value sets are excluded (the empty set admits no witness).
ElemSet subpoints(const Multifunction& s);

/// fix S = { v : v in S(v) }.
ElemSet fixed_points(const Multifunction& s);

/// v <= w implies S(v) <=* S(w), over the domain.
bool is_increasing_upward(const Multifunction& s);

/// v <= w implies S(v) ⊆ S(w), over the domain.
bool is_permanent_upward(const Multifunction& s);

struct CheckOutcome {
  bool ok = true;
  std::string witness;  // description of the first violation, if any
};

/// Every maximal subpoint of S is a maximal fixed point. Requires S
/// increasing upward; a false result indicates an implementation bug.
CheckOutcome check_prop_meta(const Multifunction& s);

struct FixpointReport {
  ElemSet subpoints;
  ElemSet fixed_points;
  ElemSet maximal_fixed_points;
  std::optional<int> greatest_fixed_point;
  std::vector<int> certificate;  // ascent path used, when a theorem ran
};

FixpointReport fixpoint_report(const Multifunction& s);

struct GfpResult {
  int fixed_point;
  std::vector<int> ascent;  // elements visited by the constructive path
};

/// Constructive version of the greatest-fixed-point theorem on a finite
/// carrier. Validates the theorem hypotheses and throws precondition_error
/// naming the failed clause with a witness:
///   (values)    every S(v) non-empty,
///   (permanent) ul_s permanent upward,
///   (directed)  all values of ul_s directed upward,
///   (between)   S(v) ⊆ ul_s(v) <=* S(v) for all v,
///   (seed)      ul_u <=* ul_s(ul_u).
/// The result is the greatest element of fix S and dominates ul_u.
GfpResult greatest_fixed_point(const Multifunction& s, const Multifunction& ul_s,
                               const Lattice& d, int ul_u);

/// Order dual of greatest_fixed_point.
GfpResult smallest_fixed_point(const Multifunction& s, const Multifunction& ol_s,
                               const Lattice& d, int ol_u);

}  // namespace ordvi
