#pragma once

#include <string>
#include <vector>

#include "ordvi/extremal.hpp"
#include "ordvi/fixpoint.hpp"
#include "ordvi/qvip.hpp"

namespace ordvi {

/// Shortest-roundtrip-safe float formatting (17 significant digits).
std::string fmt_double(double x);

/// One CSV document: fixed header, rows appended in order, every float
/// printed with fmt_double, so identical inputs give identical bytes.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return buf_; }
  void save(const std::string& path) const;

 private:
  size_t width_;
  std::string buf_;
};

std::string fixpoint_report_csv(const FixpointReport& report, const Poset& carrier);
std::string solution_set_csv(const SolutionSet& sols, const Poset& carrier);

/// Columns: node, x, u_smallest, u_greatest, eta, active_obstacle_flag.
/// eta and the obstacle flag refer to the greatest solution.
std::string extremal_csv(const ExtremalResult& r, const GridProblem& prob);

/// Columns: outer_iter, max_update, residual (one block per driver,
/// smallest first, flagged by a driver column).
std::string run_log_csv(const ExtremalResult& r);

}  // namespace ordvi
