#include "ordvi/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ordvi/errors.hpp"

namespace ordvi {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw config_error(field, what);
}

double num(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

StepFn step_from_json(const json& j, const std::string& field, const std::string& def_at) {
  if (j.is_null()) return StepFn::constant(0.0);
  if (j.is_number()) return StepFn::constant(j.get<double>());
  if (!j.is_object()) fail(field, "expected a number or {breaks, values, at}");
  std::vector<double> breaks, values;
  for (const auto& b : j.value("breaks", json::array())) breaks.push_back(num(b, field));
  for (const auto& v : j.value("values", json::array())) values.push_back(num(v, field));
  if (values.size() != breaks.size() + 1)
    fail(field, "need one more value than breakpoints");
  std::string at = def_at;
  std::vector<double> at_vals;
  if (j.contains("at")) {
    if (j["at"].is_string())
      at = j["at"].get<std::string>();
    else if (j["at"].is_array())
      for (const auto& v : j["at"]) at_vals.push_back(num(v, field + ".at"));
    else
      fail(field + ".at", "expected \"usc\", \"lsc\", \"left\", \"right\" or an array");
  }
  if (!at_vals.empty()) {
    if (at_vals.size() != breaks.size()) fail(field + ".at", "one value per breakpoint");
    return StepFn(breaks, values, at_vals);
  }
  if (at == "usc") return StepFn::usc(breaks, values);
  if (at == "lsc") return StepFn::lsc(breaks, values);
  at_vals.resize(breaks.size());
  for (size_t i = 0; i < breaks.size(); ++i)
    at_vals[i] = at == "left" ? values[i] : values[i + 1];
  if (at != "left" && at != "right") fail(field + ".at", "unknown convention '" + at + "'");
  return StepFn(breaks, values, at_vals);
}

BifunctionSide side_from_json(const json& j, const std::string& field, int n,
                              const std::string& s_default) {
  BifunctionSide side;
  if (j.is_number()) {
    side.base = j.get<double>();
    return side;
  }
  if (!j.is_object()) fail(field, "expected a number or an object");
  side.base = j.value("base", 0.0);
  if (j.contains("node_offset")) {
    for (const auto& v : j["node_offset"]) side.node_offset.push_back(num(v, field));
    if (side.node_offset.size() != static_cast<size_t>(n))
      fail(field + ".node_offset", "one entry per node required");
  }
  if (j.contains("s_steps")) side.s_part = step_from_json(j["s_steps"], field + ".s_steps", s_default);
  if (j.contains("t_steps")) side.t_part = step_from_json(j["t_steps"], field + ".t_steps", "right");
  return side;
}

std::vector<double> profile_from_json(const json& j, const std::string& field, int n,
                                      double h) {
  if (j.is_number()) return std::vector<double>(n, j.get<double>());
  if (j.is_array()) {
    std::vector<double> out;
    for (const auto& v : j) out.push_back(num(v, field));
    if (out.size() != static_cast<size_t>(n)) fail(field, "one entry per node required");
    return out;
  }
  if (!j.is_object() || !j.contains("kind")) fail(field, "expected number, array or {kind}");
  const std::string kind = j["kind"].get<std::string>();
  std::vector<double> out(n);
  if (kind == "zero") {
    // already zero
  } else if (kind == "constant") {
    std::fill(out.begin(), out.end(), num(j.at("value"), field + ".value"));
  } else if (kind == "parabola") {
    double scale = num(j.at("scale"), field + ".scale");
    for (int i = 0; i < n; ++i) {
      double x = (i + 1) * h;
      out[i] = scale * x * (1.0 - x);
    }
  } else {
    fail(field + ".kind", "unknown profile kind '" + kind + "'");
  }
  return out;
}

}  // namespace

LoadedProblem problem_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail("<root>", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("<root>", "expected an object");
  if (!j.contains("n")) fail("n", "required");
  if (!j.contains("p")) fail("p", "required");
  const int n = j["n"].get<int>();
  const double p = num(j["p"], "p");
  if (n < 1) fail("n", "need at least one interior node");
  if (!(p > 1.0)) fail("p", "must lie in (1, inf)");
  const double h = 1.0 / (n + 1);

  IntervalBifunction f;
  if (!j.contains("f")) fail("f", "required");
  if (j["f"].is_number()) {
    f.lo.base = f.hi.base = j["f"].get<double>();
  } else if (j["f"].is_object()) {
    if (!j["f"].contains("lo") || !j["f"].contains("hi"))
      fail("f", "need both 'lo' and 'hi'");
    f.lo = side_from_json(j["f"]["lo"], "f.lo", n, "lsc");
    f.hi = side_from_json(j["f"]["hi"], "f.hi", n, "usc");
  } else {
    fail("f", "expected a number or {lo, hi}");
  }

  Obstacle obs;
  if (j.contains("psi") && !j["psi"].is_null()) {
    const json& jp = j["psi"];
    if (!jp.is_object() || !jp.contains("kind")) fail("psi", "expected {kind, ...}");
    const std::string kind = jp["kind"].get<std::string>();
    if (kind == "none") {
      obs.present = false;
    } else if (kind == "affine") {
      obs.present = true;
      obs.coeff = jp.value("coeff", 0.0);
      if (!jp.contains("offset")) fail("psi.offset", "required for affine obstacles");
      if (jp["offset"].is_number()) {
        obs.offset = {jp["offset"].get<double>()};
      } else {
        for (const auto& v : jp["offset"]) obs.offset.push_back(num(v, "psi.offset"));
      }
    } else {
      fail("psi.kind", "unknown kind '" + kind + "'");
    }
  }

  if (!j.contains("sub")) fail("sub", "required");
  if (!j.contains("super")) fail("super", "required");
  std::vector<double> sub = profile_from_json(j["sub"], "sub", n, h);
  std::vector<double> super = profile_from_json(j["super"], "super", n, h);

  LoadedProblem out{GridProblem(n, p, std::move(f), std::move(obs), std::move(sub),
                                std::move(super)),
                    {}};
  out.settings.outer.tol = j.value("tol", 1e-10);
  out.settings.outer.inner.tol = j.value("tol", 1e-10);
  out.settings.outer.inner.max_iter = j.value("max_iter", 200000);
  out.settings.outer.max_outer = j.value("max_outer", 200);
  if (j.contains("omega")) out.settings.outer.inner.omega = num(j["omega"], "omega");
  if (j.contains("oracle_levels"))
    for (const auto& v : j["oracle_levels"])
      out.settings.oracle_levels.push_back(num(v, "oracle_levels"));
  return out;
}

LoadedProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open config file");
  std::stringstream buf;
  buf << in.rdbuf();
  return problem_from_json(buf.str());
}

std::vector<std::string> expand_sweep(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail("<root>", std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("base")) fail("base", "required in sweep files");
  if (!j.contains("sweep") || !j["sweep"].is_array()) fail("sweep", "array required");
  std::vector<std::string> out;
  for (const auto& over : j["sweep"]) {
    json inst = j["base"];
    for (auto it = over.begin(); it != over.end(); ++it) inst[it.key()] = it.value();
    out.push_back(inst.dump());
  }
  return out;
}

}  // namespace ordvi
