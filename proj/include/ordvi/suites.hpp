#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordvi/config.hpp"

namespace ordvi {

struct CheckLine {
  std::string name;
  long samples = 0;
  long failures = 0;
  std::string first_failure;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> checks;
  double seconds = 0.0;

  bool ok() const {
    for (const auto& c : checks)
      if (c.failures) return false;
    return true;
  }
  std::string summary_csv() const;
  std::string pretty() const;
};

/// Order-kernel laws: <=* preorder laws and singleton extension on the
/// poset and lattice catalogs, strong-set-order/indicator equivalence,
/// the non-reflexivity witness, modified transitivity with the internal
/// lattice identity, the linear positivity characterization, and the
/// T-monotone corollary.
SuiteReport run_order_suite(std::uint64_t seed);

/// Subpoint/fixed-point laws, the maximal-subpoint proposition on random
/// increasing-upward multifunctions, inductivity of sub S, equivalence
/// transport, directedness propositions, and the constructive greatest/
/// smallest fixed point theorems against brute-force enumeration.
SuiteReport run_fixpoint_suite(std::uint64_t seed);

/// Solution-operator identities, the monotone dependence lemma on random
/// hypothesis-satisfying instance pairs, suboperator inclusion, and
/// permanent-upward transport.
SuiteReport run_qvip_suite(std::uint64_t seed);

/// Randomized sandwich suite: monotone outer iterations over generated
/// problems (p in {1.5,2,3}, n in {15,31,63,129}, step bifunctions, affine
/// quasi-obstacles); every inner solve must sandwich and satisfy the
/// parameterized residual test; compensator inequalities sampled along the
/// way, with the exact zero-on-band check.
SuiteReport run_sandwich_suite(std::uint64_t seed, int instances = 54);

/// Driver checks over the shipped presets: convergence, fixed-point
/// residuals, order between the drivers, monotone traces, and the
/// brute-force oracle comparison on instances that declare quantization
/// levels.
SuiteReport run_extremal_suite(const std::vector<LoadedProblem>& presets);

}  // namespace ordvi
