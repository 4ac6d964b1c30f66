#include "ordvi/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ordvi/errors.hpp"

namespace ordvi {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += header[i];
  }
  buf_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw numeric_error("csv row width mismatch");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += cells[i];
  }
  buf_ += '\n';
}

void CsvWriter::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error(path, "cannot open output file");
  out << buf_;
}

std::string fixpoint_report_csv(const FixpointReport& report, const Poset& carrier) {
  CsvWriter w({"element", "is_subpoint", "is_fixed_point"});
  for (int v = 0; v < carrier.size(); ++v)
    w.row({carrier.name(v), set_contains(report.subpoints, v) ? "1" : "0",
           set_contains(report.fixed_points, v) ? "1" : "0"});
  return w.str();
}

std::string solution_set_csv(const SolutionSet& sols, const Poset& carrier) {
  CsvWriter w({"v", "u", "certificate_id"});
  for (size_t k = 0; k < sols.solutions.size(); ++k)
    w.row({carrier.name(sols.parameter), carrier.name(sols.solutions[k]),
           std::to_string(sols.certificate_ids[k])});
  return w.str();
}

std::string extremal_csv(const ExtremalResult& r, const GridProblem& prob) {
  CsvWriter w({"node", "x", "u_smallest", "u_greatest", "eta", "active_obstacle_flag"});
  for (int i = 0; i < prob.n(); ++i) {
    bool active = prob.obstacle().finite() &&
                  r.greatest.u[i] >= prob.psi_at(i, r.greatest.u[i]) - 1e-9;
    w.row({std::to_string(i), fmt_double(prob.x(i)), fmt_double(r.smallest.u[i]),
           fmt_double(r.greatest.u[i]), fmt_double(r.greatest.eta[i]), active ? "1" : "0"});
  }
  return w.str();
}

std::string run_log_csv(const ExtremalResult& r) {
  CsvWriter w({"driver", "outer_iter", "max_update", "residual"});
  for (const auto& row : r.smallest.log)
    w.row({"smallest", std::to_string(row.outer_iter), fmt_double(row.max_update),
           fmt_double(row.residual)});
  for (const auto& row : r.greatest.log)
    w.row({"greatest", std::to_string(row.outer_iter), fmt_double(row.max_update),
           fmt_double(row.residual)});
  return w.str();
}

}  // namespace ordvi
