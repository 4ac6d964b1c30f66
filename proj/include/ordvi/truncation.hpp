#pragma once

#include <string>

#include "ordvi/grid_ops.hpp"

namespace ordvi {

/// Data of the auxiliary problem: two subsolutions and two supersolutions
/// with their selections, their join/meet, and the case-combined
/// selections. All vectors are nodal.
struct AuxData {
  std::vector<double> ulv1, ulv2, olv1, olv2;
  std::vector<double> uleta1, uleta2, oleta1, oleta2;
  std::vector<double> ulv, olv;    // ulv = ulv1 v ulv2, olv = olv1 ^ olv2
  std::vector<double> uleta, oleta;
};

/// Case-combines the pairs into AuxData and validates, for parameter v:
///   sub <= ulv <= olv <= super componentwise,
///   the combined selections lie in the f-interval at (ulv_i, v_i) resp.
///   (olv_i, v_i), and the compensator inequalities hold (checked exactly
///   on the piecewise structure). Where the two subsolutions tie, the
///   combined selection takes the smaller of the two candidates (the
///   paper's first-index rule breaks the compensator inequality when the
///   selections differ on a tie); the supersolution side dually takes the
///   larger.
AuxData make_aux(const GridProblem& prob, const std::vector<double>& v,
                 const std::vector<double>& ulv1, const std::vector<double>& uleta1,
                 const std::vector<double>& ulv2, const std::vector<double>& uleta2,
                 const std::vector<double>& olv1, const std::vector<double>& oleta1,
                 const std::vector<double>& olv2, const std::vector<double>& oleta2);

/// Single sub-supersolution pair, duplicated into the two-pair form.
AuxData make_aux_single(const GridProblem& prob, const std::vector<double>& v,
                        const std::vector<double>& sub, const std::vector<double>& eta_sub,
                        const std::vector<double>& super, const std::vector<double>& eta_super);

/// Continuous piecewise linear bracket [(x1,y1) ~> (x2,y2)]: y1 left of
/// x1, y2 right of x2, linear in between. Requires x1 < x2.
double piecewise_l(double x1, double y1, double x2, double y2, double s);

/// Compensator h(i,s) = |ul_theta1| + |ul_theta2| - |ol_theta1| -
/// |ol_theta2| built from the four brackets; a degenerate bracket
/// (x1 == x2) collapses to 0.
double compensator_h(int node, double s, const AuxData& aux);

/// dh/ds where it exists (h is piecewise linear; corner points report the
/// value of the open piece containing s per the bracket evaluation).
double compensator_h_slope(int node, double s, const AuxData& aux);

/// Truncation of f at node i: {uleta_i} below the band, the f-interval at
/// (s, v_i) inside [ulv_i, olv_i], {oleta_i} above.
Interval truncate_g(int node, double s, const AuxData& aux, const GridProblem& prob,
                    const std::vector<double>& v);

/// Exact check of both compensator inequalities at one node:
///   uleta - uleta_i - h(.,s) <= 0 for s < ulv_i and
///   oleta_i - oleta + h(.,s) <= 0 for s > olv_i, i = 1,2.
/// h is piecewise linear in s, so checking breakpoints and plateaus is
/// exhaustive.
bool compensator_inequalities_hold(int node, const AuxData& aux, std::string* why = nullptr);

}  // namespace ordvi
