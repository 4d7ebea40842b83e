#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stlplan/scenario.hpp"

namespace stlplan {

struct ScenarioDoc {
  Scenario scenario;
  PlannerConfig config;
};

namespace detail {

inline Vec3 parse_vec3(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3)
    throw SchemaError("field '" + field + "': expected an array of 3 numbers");
  for (const auto& e : j)
    if (!e.is_number())
      throw SchemaError("field '" + field + "': expected an array of 3 numbers");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

inline Box3 parse_box(const nlohmann::json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
    throw SchemaError("field '" + field + "': expected an object with 'lo' and 'hi'");
  return Box3(parse_vec3(j["lo"], field + ".lo"), parse_vec3(j["hi"], field + ".hi"));
}

}  // namespace detail

/// Parses a scenario document. Unset config fields keep their defaults.
/// Throws SchemaError on malformed input and ValidationError when a
/// scenario or config invariant is violated.
inline ScenarioDoc load_scenario(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("scenario parse failure: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("scenario document must be an object");

  ScenarioDoc doc;
  Scenario& s = doc.scenario;
  if (!j.contains("workspace")) throw SchemaError("missing field 'workspace'");
  s.workspace = detail::parse_box(j["workspace"], "workspace");

  auto parse_boxes = [&](const char* field, std::vector<Box3>& out) {
    if (!j.contains(field)) return;
    if (!j[field].is_array())
      throw SchemaError(std::string("field '") + field + "': expected an array");
    int i = 0;
    for (const auto& e : j[field])
      out.push_back(detail::parse_box(e, std::string(field) + "[" + std::to_string(i++) + "]"));
  };
  parse_boxes("obstacles", s.obstacles);
  parse_boxes("targets", s.targets);
  parse_boxes("refills", s.refills);

  if (!j.contains("fleet") || !j["fleet"].is_array())
    throw SchemaError("missing or malformed field 'fleet'");
  int d = 0;
  for (const auto& e : j["fleet"]) {
    const std::string name = "fleet[" + std::to_string(d++) + "]";
    if (!e.is_object() || !e.contains("id") || !e.contains("capacity") || !e.contains("depot"))
      throw SchemaError("field '" + name + "': expected id, capacity, depot");
    UavSpec u;
    if (!e["id"].is_string()) throw SchemaError("field '" + name + ".id': expected a string");
    u.id = e["id"].get<std::string>();
    if (!e["capacity"].is_number_integer())
      throw SchemaError("field '" + name + ".capacity': expected an integer");
    u.capacity = e["capacity"].get<int>();
    u.depot = detail::parse_vec3(e["depot"], name + ".depot");
    s.fleet.push_back(u);
  }

  if (j.contains("config")) {
    const auto& c = j["config"];
    if (!c.is_object()) throw SchemaError("field 'config': expected an object");
    auto num = [&](const char* key, double& into) {
      if (!c.contains(key)) return;
      if (!c[key].is_number())
        throw SchemaError(std::string("field 'config.") + key + "': expected a number");
      into = c[key].get<double>();
    };
    PlannerConfig& cfg = doc.config;
    num("t_N", cfg.t_N);
    num("t_ins", cfg.t_ins);
    num("t_rs", cfg.t_rs);
    num("t_rep", cfg.t_rep);
    num("T_s", cfg.T_s);
    num("Gamma", cfg.Gamma);
    num("v_max", cfg.v_max);
    num("a_max", cfg.a_max);
    num("sigma_bar", cfg.sigma_bar);
    num("lambda", cfg.lambda);
    num("eta", cfg.eta);
    num("v_star", cfg.v_star);
    if (c.contains("max_iters")) {
      if (!c["max_iters"].is_number_integer())
        throw SchemaError("field 'config.max_iters': expected an integer");
      cfg.max_iters = c["max_iters"].get<int>();
    }
    if (c.contains("seed")) {
      if (!c["seed"].is_number_unsigned() && !c["seed"].is_number_integer())
        throw SchemaError("field 'config.seed': expected an integer");
      cfg.seed = c["seed"].get<unsigned long long>();
    }
  }

  auto diags = validate_scenario(s);
  for (const auto& d2 : doc.config.diagnostics()) diags.push_back(d2);
  if (!diags.empty()) {
    std::string msg = "scenario validation failed:";
    for (const auto& dmsg : diags) msg += "\n  - " + dmsg;
    throw ValidationError(msg);
  }
  return doc;
}

inline ScenarioDoc load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

namespace detail {

inline std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline nlohmann::json box_json(const Box3& b) {
  return {{"lo", {b.lo[0], b.lo[1], b.lo[2]}}, {"hi", {b.hi[0], b.hi[1], b.hi[2]}}};
}

}  // namespace detail

/// Serializes a scenario so that load_scenario(serialize_scenario(doc))
/// reproduces it structurally.
inline std::string serialize_scenario(const ScenarioDoc& doc) {
  nlohmann::json j;
  const Scenario& s = doc.scenario;
  j["workspace"] = detail::box_json(s.workspace);
  j["obstacles"] = nlohmann::json::array();
  for (const auto& b : s.obstacles) j["obstacles"].push_back(detail::box_json(b));
  j["targets"] = nlohmann::json::array();
  for (const auto& b : s.targets) j["targets"].push_back(detail::box_json(b));
  j["refills"] = nlohmann::json::array();
  for (const auto& b : s.refills) j["refills"].push_back(detail::box_json(b));
  j["fleet"] = nlohmann::json::array();
  for (const auto& u : s.fleet) {
    j["fleet"].push_back({{"id", u.id},
                          {"capacity", u.capacity},
                          {"depot", {u.depot[0], u.depot[1], u.depot[2]}}});
  }
  const PlannerConfig& c = doc.config;
  j["config"] = {{"t_N", c.t_N},         {"t_ins", c.t_ins},
                 {"t_rs", c.t_rs},       {"t_rep", c.t_rep},
                 {"T_s", c.T_s},         {"Gamma", c.Gamma},
                 {"v_max", c.v_max},     {"a_max", c.a_max},
                 {"sigma_bar", c.sigma_bar}, {"lambda", c.lambda},
                 {"eta", c.eta},         {"v_star", c.v_star},
                 {"max_iters", c.max_iters}, {"seed", c.seed}};
  return j.dump(2) + "\n";
}

/// Writes one trajectory as delimiter-separated text: a header naming the
/// columns, then N+1 rows. The last acceleration row is padded with zeros
/// (there are only N acceleration steps).
inline std::string serialize_trajectory(const Trajectory& tr, double dt) {
  std::string out = "t p1 p2 p3 v1 v2 v3 a1 a2 a3\n";
  const int n = static_cast<int>(tr.p.rows());
  for (int k = 0; k < n; ++k) {
    out += detail::fmt_double(k * dt);
    for (int jx = 0; jx < 3; ++jx) out += " " + detail::fmt_double(tr.p(k, jx));
    for (int jx = 0; jx < 3; ++jx) out += " " + detail::fmt_double(tr.v(k, jx));
    for (int jx = 0; jx < 3; ++jx)
      out += " " + detail::fmt_double(k < tr.a.rows() ? tr.a(k, jx) : 0.0);
    out += "\n";
  }
  return out;
}

inline void write_trajectory_file(const std::string& path, const Trajectory& tr, double dt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write trajectory file '" + path + "'");
  out << serialize_trajectory(tr, dt);
}

inline Trajectory read_trajectory_file(const std::string& path, const std::string& uav_id) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open trajectory file '" + path + "'");
  std::string header;
  if (!std::getline(in, header) || header != "t p1 p2 p3 v1 v2 v3 a1 a2 a3")
    throw SchemaError("trajectory file '" + path + "': unexpected header");
  std::vector<std::array<double, 10>> rows;
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::array<double, 10> row{};
    for (int c = 0; c < 10; ++c) {
      if (!(ls >> row[c]))
        throw SchemaError("trajectory file '" + path + "' line " + std::to_string(lineno) +
                          ": expected 10 numeric columns");
    }
    rows.push_back(row);
  }
  if (rows.size() < 2)
    throw SchemaError("trajectory file '" + path + "': needs at least two samples");
  const int n = static_cast<int>(rows.size()) - 1;
  Trajectory tr;
  tr.uav_id = uav_id;
  tr.p.resize(n + 1, 3);
  tr.v.resize(n + 1, 3);
  tr.a.resize(n, 3);
  for (int k = 0; k <= n; ++k) {
    for (int jx = 0; jx < 3; ++jx) {
      tr.p(k, jx) = rows[k][1 + jx];
      tr.v(k, jx) = rows[k][4 + jx];
      if (k < n) tr.a(k, jx) = rows[k][7 + jx];
    }
  }
  return tr;
}

}  // namespace stlplan
