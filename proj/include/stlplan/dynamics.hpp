#pragma once

#include <string>
#include <vector>

#include "stlplan/scenario.hpp"

namespace stlplan {

/// Flattened acceleration decision vector: for every vehicle, per axis,
/// N zero-order-hold acceleration steps. Layout: (uav*3 + axis)*N + step.
struct DecisionVariables {
  int num_uavs = 0;
  int num_steps = 0;
  std::vector<double> a;

  static DecisionVariables zeros(int uavs, int steps) {
    DecisionVariables d;
    d.num_uavs = uavs;
    d.num_steps = steps;
    d.a.assign(static_cast<size_t>(uavs) * 3 * steps, 0.0);
    return d;
  }

  int index(int u, int j, int k) const { return (u * 3 + j) * num_steps + k; }
  double at(int u, int j, int k) const { return a[index(u, j, k)]; }
  double& at(int u, int j, int k) { return a[index(u, j, k)]; }
  int size() const { return static_cast<int>(a.size()); }
};

/// Initial position/velocity per vehicle (state at sample 0).
struct InitialStates {
  std::vector<std::string> ids;
  std::vector<Vec3> p0;
  std::vector<Vec3> v0;
};

inline InitialStates initial_states_of(const SignalBundle& sig) {
  InitialStates x0;
  for (const auto& tr : sig.trajectories) {
    x0.ids.push_back(tr.uav_id);
    x0.p0.emplace_back(tr.p.row(0));
    x0.v0.emplace_back(tr.v.row(0));
  }
  return x0;
}

inline DecisionVariables decision_from_bundle(const SignalBundle& sig) {
  DecisionVariables dec = DecisionVariables::zeros(sig.num_uavs(), sig.num_steps());
  for (int u = 0; u < sig.num_uavs(); ++u)
    for (int k = 0; k < dec.num_steps; ++k)
      for (int j = 0; j < 3; ++j) dec.at(u, j, k) = sig.trajectories[u].a(k, j);
  return dec;
}

/// Exact double-integrator rollout with zero-order-hold acceleration:
///   v[k+1] = v[k] + a[k]*dt,  p[k+1] = p[k] + v[k]*dt + a[k]*dt^2/2.
inline SignalBundle integrate_dynamics(const DecisionVariables& dec, const InitialStates& x0,
                                       double dt) {
  if (static_cast<int>(x0.p0.size()) != dec.num_uavs ||
      static_cast<int>(x0.v0.size()) != dec.num_uavs)
    throw DomainError("integrate_dynamics: initial states do not match fleet size");
  SignalBundle sig;
  sig.dt = dt;
  const int n = dec.num_steps;
  for (int u = 0; u < dec.num_uavs; ++u) {
    Trajectory tr;
    tr.uav_id = u < static_cast<int>(x0.ids.size()) ? x0.ids[u] : std::string();
    tr.p.resize(n + 1, 3);
    tr.v.resize(n + 1, 3);
    tr.a.resize(n, 3);
    tr.p.row(0) = x0.p0[u];
    tr.v.row(0) = x0.v0[u];
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < 3; ++j) {
        const double acc = dec.at(u, j, k);
        tr.a(k, j) = acc;
        tr.v(k + 1, j) = tr.v(k, j) + acc * dt;
        tr.p(k + 1, j) = tr.p(k, j) + tr.v(k, j) * dt + 0.5 * acc * dt * dt;
      }
    }
    sig.trajectories.push_back(std::move(tr));
  }
  return sig;
}

/// Largest deviation between the stored p/v sequences and a re-integration
/// of the stored accelerations; zero for a dynamically consistent bundle.
inline double dynamics_residual(const SignalBundle& sig) {
  double worst = 0.0;
  const double dt = sig.dt;
  for (const auto& tr : sig.trajectories) {
    Vec3 p = tr.p.row(0);
    Vec3 v = tr.v.row(0);
    for (int k = 0; k < tr.num_steps(); ++k) {
      const Vec3 acc = tr.a.row(k);
      p += v * dt + 0.5 * dt * dt * acc;
      v += acc * dt;
      worst = std::max(worst, (p.transpose() - tr.p.row(k + 1)).cwiseAbs().maxCoeff());
      worst = std::max(worst, (v.transpose() - tr.v.row(k + 1)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace stlplan
