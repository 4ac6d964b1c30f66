#include "ordvi/truncation.hpp"

#include <algorithm>
#include <cmath>

#include "ordvi/errors.hpp"

namespace ordvi {

double piecewise_l(double x1, double y1, double x2, double y2, double s) {
  if (!(x1 < x2)) throw degenerate_bracket_error("bracket requires x1 < x2");
  if (s <= x1) return y1;
  if (s >= x2) return y2;
  return y1 + (y2 - y1) / (x2 - x1) * (s - x1);
}

namespace {

// Bracket evaluation with the degenerate collapse: x1 >= x2 yields 0.
double bracket(double x1, double y1, double x2, double y2, double s) {
  if (x1 >= x2) return 0.0;
  return piecewise_l(x1, y1, x2, y2, s);
}

double ul_theta(int i, int which, double s, const AuxData& aux) {
  const double x1 = which == 1 ? aux.ulv1[i] : aux.ulv2[i];
  const double y1 = aux.uleta[i] - (which == 1 ? aux.uleta1[i] : aux.uleta2[i]);
  return bracket(x1, y1, aux.ulv[i], 0.0, s);
}

double ol_theta(int i, int which, double s, const AuxData& aux) {
  const double x2 = which == 1 ? aux.olv1[i] : aux.olv2[i];
  const double y2 = (which == 1 ? aux.oleta1[i] : aux.oleta2[i]) - aux.oleta[i];
  return bracket(aux.olv[i], 0.0, x2, y2, s);
}

}  // namespace

double compensator_h(int node, double s, const AuxData& aux) {
  return std::abs(ul_theta(node, 1, s, aux)) + std::abs(ul_theta(node, 2, s, aux)) -
         std::abs(ol_theta(node, 1, s, aux)) - std::abs(ol_theta(node, 2, s, aux));
}

namespace {

double abs_bracket_slope(double x1, double y1, double x2, double y2, double s) {
  if (x1 >= x2 || s <= x1 || s >= x2) return 0.0;
  double slope = (y2 - y1) / (x2 - x1);
  double value = y1 + slope * (s - x1);
  return value == 0.0 ? 0.0 : (value > 0.0 ? slope : -slope);
}

}  // namespace

double compensator_h_slope(int node, double s, const AuxData& aux) {
  const int i = node;
  double d = 0.0;
  d += abs_bracket_slope(aux.ulv1[i], aux.uleta[i] - aux.uleta1[i], aux.ulv[i], 0.0, s);
  d += abs_bracket_slope(aux.ulv2[i], aux.uleta[i] - aux.uleta2[i], aux.ulv[i], 0.0, s);
  d -= abs_bracket_slope(aux.olv[i], 0.0, aux.olv1[i], aux.oleta1[i] - aux.oleta[i], s);
  d -= abs_bracket_slope(aux.olv[i], 0.0, aux.olv2[i], aux.oleta2[i] - aux.oleta[i], s);
  return d;
}

Interval truncate_g(int node, double s, const AuxData& aux, const GridProblem& prob,
                    const std::vector<double>& v) {
  if (s < aux.ulv[node]) return {aux.uleta[node], aux.uleta[node]};
  if (s > aux.olv[node]) return {aux.oleta[node], aux.oleta[node]};
  return prob.f_interval(node, s, v[node]);
}

bool compensator_inequalities_hold(int node, const AuxData& aux, std::string* why) {
  const int i = node;
  // h is continuous piecewise linear with corners at the bracket ends, so
  // its extrema over any region are attained at corners or on the outer
  // plateaus, and the open-region conditions extend to the closed regions
  // by continuity. Checking corner points, midpoints and one point on each
  // plateau is therefore exhaustive.
  std::vector<double> corners = {aux.ulv1[i], aux.ulv2[i], aux.ulv[i],
                                 aux.olv[i],  aux.olv1[i], aux.olv2[i]};
  std::sort(corners.begin(), corners.end());
  std::vector<double> samples;
  samples.push_back(corners.front() - 1.0);
  samples.push_back(corners.back() + 1.0);
  for (size_t k = 0; k < corners.size(); ++k) {
    samples.push_back(corners[k]);
    if (k + 1 < corners.size()) samples.push_back(0.5 * (corners[k] + corners[k + 1]));
  }
  const double tol = 1e-12;
  for (int which = 1; which <= 2; ++which) {
    const double ulvi = which == 1 ? aux.ulv1[i] : aux.ulv2[i];
    const double uletai = which == 1 ? aux.uleta1[i] : aux.uleta2[i];
    const double olvi = which == 1 ? aux.olv1[i] : aux.olv2[i];
    const double oletai = which == 1 ? aux.oleta1[i] : aux.oleta2[i];
    for (double s : samples) {
      if (s <= ulvi && aux.uleta[i] - uletai - compensator_h(i, s, aux) > tol) {
        if (why)
          *why = "lower compensator inequality at node " + std::to_string(i) + ", s=" +
                 std::to_string(s);
        return false;
      }
      if (s >= olvi && oletai - aux.oleta[i] + compensator_h(i, s, aux) > tol) {
        if (why)
          *why = "upper compensator inequality at node " + std::to_string(i) + ", s=" +
                 std::to_string(s);
        return false;
      }
    }
  }
  return true;
}

namespace {

void require_in_interval(double eta, Interval iv, const char* what, int node) {
  const double tol = 1e-9 * (1.0 + std::abs(eta));
  if (eta < iv.lo - tol || eta > iv.hi + tol)
    throw precondition_error(std::string(what) + " selection lies in the f-interval",
                             "node " + std::to_string(node));
}

}  // namespace

AuxData make_aux(const GridProblem& prob, const std::vector<double>& v,
                 const std::vector<double>& ulv1, const std::vector<double>& uleta1,
                 const std::vector<double>& ulv2, const std::vector<double>& uleta2,
                 const std::vector<double>& olv1, const std::vector<double>& oleta1,
                 const std::vector<double>& olv2, const std::vector<double>& oleta2) {
  const int n = prob.n();
  AuxData aux{ulv1, ulv2, olv1, olv2, uleta1, uleta2, oleta1, oleta2, {}, {}, {}, {}};
  aux.ulv.resize(n);
  aux.olv.resize(n);
  aux.uleta.resize(n);
  aux.oleta.resize(n);
  for (int i = 0; i < n; ++i) {
    aux.ulv[i] = std::max(ulv1[i], ulv2[i]);
    aux.olv[i] = std::min(olv1[i], olv2[i]);
    if (ulv1[i] > ulv2[i])
      aux.uleta[i] = uleta1[i];
    else if (ulv2[i] > ulv1[i])
      aux.uleta[i] = uleta2[i];
    else
      aux.uleta[i] = std::min(uleta1[i], uleta2[i]);  // tie rule, see header
    if (olv1[i] < olv2[i])
      aux.oleta[i] = oleta1[i];
    else if (olv2[i] < olv1[i])
      aux.oleta[i] = oleta2[i];
    else
      aux.oleta[i] = std::max(oleta1[i], oleta2[i]);

    if (prob.sub()[i] > aux.ulv[i] + 1e-12 || aux.olv[i] > prob.super()[i] + 1e-12 ||
        aux.ulv[i] > aux.olv[i] + 1e-12)
      throw precondition_error("sub <= ulv <= olv <= super", "node " + std::to_string(i));

    require_in_interval(aux.uleta[i], prob.f_interval(i, aux.ulv[i], v[i]), "lower", i);
    require_in_interval(aux.oleta[i], prob.f_interval(i, aux.olv[i], v[i]), "upper", i);

    std::string why;
    if (!compensator_inequalities_hold(i, aux, &why))
      throw precondition_error("compensator inequalities", why);
  }
  return aux;
}

AuxData make_aux_single(const GridProblem& prob, const std::vector<double>& v,
                        const std::vector<double>& sub, const std::vector<double>& eta_sub,
                        const std::vector<double>& super,
                        const std::vector<double>& eta_super) {
  return make_aux(prob, v, sub, eta_sub, sub, eta_sub, super, eta_super, super, eta_super);
}

}  // namespace ordvi
