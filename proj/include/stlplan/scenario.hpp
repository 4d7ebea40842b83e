#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "stlplan/geometry.hpp"

namespace stlplan {

/// One fleet member: identifier, diverter payload capacity, start position.
struct UavSpec {
  std::string id;
  int capacity = 1;   // diverters carried when fully loaded
  Vec3 depot = Vec3::Zero();
};

/// Planner configuration. Times in seconds, lengths in meters.
/// Defaults are the reference mission parameter set.
struct PlannerConfig {
  double t_N = 155.0;       // mission time
  double t_ins = 5.0;       // installation dwell
  double t_rs = 12.0;       // refill dwell
  double t_rep = 10.0;      // replanning budget
  double T_s = 0.05;        // sampling period
  double Gamma = 3.0;       // mutual-distance threshold
  double v_max = 3.1;       // per-axis speed bound
  double a_max = 3.1;       // per-axis acceleration bound
  double sigma_bar = 10.0;  // max distance imbalance between vehicles
  double lambda = 10.0;     // smoothing sharpness
  double eta = 1.0;         // energy weight in [0,1]
  double v_star = 2.5;      // energetically optimal forward speed
  int max_iters = 400;      // optimizer iteration cap
  unsigned long long seed = 0;

  /// Number of time steps; the grid is t_k = k*T_s, k = 0..N.
  /// Always derived from t_N and T_s.
  int num_samples() const { return static_cast<int>(std::llround(t_N / T_s)); }

  int ins_samples() const { return static_cast<int>(std::llround(t_ins / T_s)); }
  int rs_samples() const { return static_cast<int>(std::llround(t_rs / T_s)); }

  std::vector<std::string> diagnostics() const {
    std::vector<std::string> out;
    auto req = [&](bool ok, const char* msg) {
      if (!ok) out.emplace_back(msg);
    };
    req(t_N > 0, "config: t_N must be positive");
    req(t_ins > 0, "config: t_ins must be positive");
    req(t_rs > 0, "config: t_rs must be positive");
    req(t_rep > 0, "config: t_rep must be positive");
    req(T_s > 0, "config: T_s must be positive");
    req(!(t_ins + t_rs >= t_N), "config: t_ins + t_rs must be below t_N");
    req(Gamma > 0, "config: Gamma must be positive");
    req(v_max > 0, "config: v_max must be positive");
    req(a_max > 0, "config: a_max must be positive");
    req(lambda > 0, "config: lambda must be positive");
    req(sigma_bar >= 0, "config: sigma_bar must be nonnegative");
    req(eta >= 0 && eta <= 1, "config: eta must lie in [0,1]");
    req(max_iters >= 0, "config: max_iters must be nonnegative");
    return out;
  }
};

/// World description: workspace, obstacle/target/refill regions and the fleet.
struct Scenario {
  Box3 workspace;
  std::vector<Box3> obstacles;
  std::vector<Box3> targets;
  std::vector<Box3> refills;
  std::vector<UavSpec> fleet;

  int num_targets() const { return static_cast<int>(targets.size()); }
  int num_refills() const { return static_cast<int>(refills.size()); }
  int num_uavs() const { return static_cast<int>(fleet.size()); }

  int uav_index(const std::string& id) const {
    for (int d = 0; d < num_uavs(); ++d)
      if (fleet[d].id == id) return d;
    return -1;
  }
};

/// One diagnostic per violated invariant; empty means the scenario is sound.
inline std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> out;
  auto bad_box = [&](const Box3& b, const std::string& what) {
    if (!b.well_formed())
      out.push_back(what + ": box must satisfy lo < hi on every axis");
  };
  bad_box(s.workspace, "workspace");
  for (size_t i = 0; i < s.obstacles.size(); ++i)
    bad_box(s.obstacles[i], "obstacles[" + std::to_string(i) + "]");
  for (size_t i = 0; i < s.targets.size(); ++i) {
    const std::string name = "targets[" + std::to_string(i) + "]";
    bad_box(s.targets[i], name);
    if (s.targets[i].well_formed() && !s.workspace.contains(s.targets[i]))
      out.push_back(name + ": must be contained in the workspace");
    for (size_t o = 0; o < s.obstacles.size(); ++o)
      if (s.targets[i].intersects(s.obstacles[o]))
        out.push_back(name + ": intersects obstacles[" + std::to_string(o) + "]");
  }
  for (size_t i = 0; i < s.refills.size(); ++i) {
    const std::string name = "refills[" + std::to_string(i) + "]";
    bad_box(s.refills[i], name);
    if (s.refills[i].well_formed() && !s.workspace.contains(s.refills[i]))
      out.push_back(name + ": must be contained in the workspace");
  }
  if (s.targets.empty()) out.emplace_back("scenario: needs at least one target region");
  if (s.refills.empty()) out.emplace_back("scenario: needs at least one refilling station");
  if (s.fleet.empty()) out.emplace_back("scenario: needs at least one vehicle");
  for (size_t d = 0; d < s.fleet.size(); ++d) {
    const std::string name = "fleet[" + std::to_string(d) + "]";
    if (s.fleet[d].capacity < 1)
      out.push_back(name + ": capacity must be at least 1");
    if (!s.workspace.contains(s.fleet[d].depot))
      out.push_back(name + ": depot must lie inside the workspace");
    if (s.fleet[d].id.empty())
      out.push_back(name + ": id must be nonempty");
    for (size_t e = d + 1; e < s.fleet.size(); ++e)
      if (s.fleet[d].id == s.fleet[e].id)
        out.push_back(name + ": duplicate id '" + s.fleet[d].id + "'");
  }
  return out;
}

/// Sampled per-vehicle state on the shared time grid. Positions and
/// velocities have N+1 rows, accelerations N rows.
struct Trajectory {
  std::string uav_id;
  Eigen::MatrixX3d p;
  Eigen::MatrixX3d v;
  Eigen::MatrixX3d a;

  int num_steps() const { return static_cast<int>(a.rows()); }
};

/// One trajectory per fleet member on a common grid.
struct SignalBundle {
  std::vector<Trajectory> trajectories;
  double dt = 0.05;

  int num_steps() const {
    return trajectories.empty() ? 0 : trajectories.front().num_steps();
  }
  int num_uavs() const { return static_cast<int>(trajectories.size()); }

  bool grids_consistent() const {
    for (const auto& tr : trajectories) {
      if (tr.num_steps() != num_steps()) return false;
      if (tr.p.rows() != tr.num_steps() + 1 || tr.v.rows() != tr.num_steps() + 1)
        return false;
    }
    return true;
  }
};

}  // namespace stlplan
