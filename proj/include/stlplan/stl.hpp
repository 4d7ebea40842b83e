#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stlplan/dynamics.hpp"
#include "stlplan/geometry.hpp"
#include "stlplan/scenario.hpp"

namespace stlplan {

/// Closed range of sample indices.
struct Interval {
  int lo = 0;
  int hi = 0;
};

/// Maps a closed time interval to sample indices, rounding half up.
inline Interval interval_from_times(double t_lo, double t_hi, double dt) {
  auto idx = [&](double t) { return static_cast<int>(std::floor(t / dt + 0.5)); };
  return Interval{idx(t_lo), idx(t_hi)};
}

// ---------------------------------------------------------------------------
// Formula tree
// ---------------------------------------------------------------------------

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Expression tree over box/distance predicates with Boolean and bounded
/// temporal operators. Atomic robustness follows the margin conventions of
/// the mission semantics: InBox is the distance to the nearest face
/// (positive inside), OutBox its negation, PairDist the inter-vehicle
/// distance minus the safety threshold.
class Formula {
 public:
  enum class Kind { InBox, OutBox, PairDist, Not, And, Or, Always, Eventually, Until };

  Kind kind = Kind::InBox;
  int uav_a = -1;               // subject vehicle (InBox/OutBox/PairDist)
  int uav_b = -1;               // second vehicle (PairDist)
  Box3 box;                     // region (InBox/OutBox)
  double gamma = 0.0;           // distance threshold (PairDist)
  Interval window;              // sample window (Always/Eventually/Until)
  std::vector<FormulaPtr> children;
};

inline FormulaPtr in_box(int uav, const Box3& box) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::InBox;
  f->uav_a = uav;
  f->box = box;
  return f;
}

inline FormulaPtr out_box(int uav, const Box3& box) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::OutBox;
  f->uav_a = uav;
  f->box = box;
  return f;
}

inline FormulaPtr pair_dist(int uav_n, int uav_m, double gamma) {
  if (uav_n == uav_m) throw DomainError("pair_dist: requires two distinct vehicles");
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::PairDist;
  f->uav_a = uav_n;
  f->uav_b = uav_m;
  f->gamma = gamma;
  return f;
}

inline FormulaPtr negate(FormulaPtr phi) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Not;
  f->children = {std::move(phi)};
  return f;
}

namespace detail {
inline void check_window(const Interval& w, const char* op) {
  if (w.lo < 0 || w.lo > w.hi)
    throw DomainError(std::string(op) + ": malformed sample interval");
}
inline FormulaPtr nary(Formula::Kind kind, std::vector<FormulaPtr> cs, const char* op) {
  if (cs.empty()) throw DomainError(std::string(op) + ": needs at least one operand");
  if (cs.size() == 1) return cs.front();
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->children = std::move(cs);
  return f;
}
}  // namespace detail

inline FormulaPtr conj(std::vector<FormulaPtr> cs) {
  return detail::nary(Formula::Kind::And, std::move(cs), "conj");
}

inline FormulaPtr disj(std::vector<FormulaPtr> cs) {
  return detail::nary(Formula::Kind::Or, std::move(cs), "disj");
}

inline FormulaPtr always(Interval w, FormulaPtr phi) {
  detail::check_window(w, "always");
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Always;
  f->window = w;
  f->children = {std::move(phi)};
  return f;
}

inline FormulaPtr eventually(Interval w, FormulaPtr phi) {
  detail::check_window(w, "eventually");
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Eventually;
  f->window = w;
  f->children = {std::move(phi)};
  return f;
}

inline FormulaPtr until(Interval w, FormulaPtr phi1, FormulaPtr phi2) {
  detail::check_window(w, "until");
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Until;
  f->window = w;
  f->children = {std::move(phi1), std::move(phi2)};
  return f;
}

// ---------------------------------------------------------------------------
// Smooth min/max
// ---------------------------------------------------------------------------

/// Log-sum-exp underapproximation of min: -(1/lambda) log sum exp(-lambda x).
/// The extreme element is factored out before exponentiation, so the result
/// is finite for any value spread.
inline double smooth_min(std::span<const double> values, double lambda) {
  if (values.empty()) throw DomainError("smooth_min: empty argument list");
  if (lambda <= 0) throw DomainError("smooth_min: lambda must be positive");
  double m = values[0];
  for (double x : values) m = std::min(m, x);
  double s = 0.0;
  for (double x : values) s += std::exp(-lambda * (x - m));
  return m - std::log(s) / lambda;
}

/// Softmax-weighted average: sum x exp(lambda x) / sum exp(lambda x).
/// Never exceeds the true max.
inline double smooth_max(std::span<const double> values, double lambda) {
  if (values.empty()) throw DomainError("smooth_max: empty argument list");
  if (lambda <= 0) throw DomainError("smooth_max: lambda must be positive");
  double m = values[0];
  for (double x : values) m = std::max(m, x);
  double sw = 0.0, sx = 0.0;
  for (double x : values) {
    const double w = std::exp(lambda * (x - m));
    sw += w;
    sx += w * x;
  }
  return sx / sw;
}

inline double smooth_min(std::initializer_list<double> values, double lambda) {
  return smooth_min(std::span<const double>(values.begin(), values.size()), lambda);
}
inline double smooth_max(std::initializer_list<double> values, double lambda) {
  return smooth_max(std::span<const double>(values.begin(), values.size()), lambda);
}

// ---------------------------------------------------------------------------
// Robustness evaluation
// ---------------------------------------------------------------------------

/// Evaluates exact or smooth robustness of a formula over a signal bundle,
/// with memoization across (node, sample) pairs so that nested temporal
/// windows are shared rather than recomputed. One instance can be reused
/// across many signals of the same shape; gradient evaluation reuses the
/// forward tables. Not thread-safe per instance.
class RobustnessEvaluator {
 public:
  /// Epsilon used to regularize the pairwise-distance norm in smooth mode.
  static constexpr double kNormEps = 1e-9;

  RobustnessEvaluator(FormulaPtr root, int num_steps)
      : root_(std::move(root)), grid_steps_(num_steps) {
    flatten(*root_, -1);
    const size_t n = nodes_.size();
    val_.assign(n, std::vector<double>(grid_steps_ + 1, 0.0));
    stamp_.assign(n, std::vector<int>(grid_steps_ + 1, 0));
    adj_.assign(n, std::vector<double>(grid_steps_ + 1, 0.0));
  }

  /// Exact quantitative semantics at sample k.
  double exact(const SignalBundle& sig, int k) { return run(sig, k, false, 1.0); }

  /// Smooth semantics: every min becomes smooth_min, every max smooth_max,
  /// including the face aggregation inside box margins.
  double smooth(const SignalBundle& sig, int k, double lambda) {
    if (lambda <= 0) throw DomainError("smooth robustness: lambda must be positive");
    return run(sig, k, true, lambda);
  }

  /// Smooth value plus its gradient with respect to every position sample;
  /// grad_p is resized to one (N+1) x 3 matrix per vehicle.
  double smooth_with_gradient(const SignalBundle& sig, int k, double lambda,
                              std::vector<Eigen::MatrixX3d>& grad_p) {
    const double value = smooth(sig, k, lambda);
    grad_p.assign(sig.num_uavs(), Eigen::MatrixX3d::Zero(grid_steps_ + 1, 3));
    for (auto& row : adj_) std::fill(row.begin(), row.end(), 0.0);
    adj_[0][k] = 1.0;
    backward(grad_p);
    return value;
  }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    const Formula* f;
    std::vector<int> child;
  };

  int flatten(const Formula& f, int parent) {
    (void)parent;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{&f, {}});
    for (const auto& c : f.children) {
      const int cid = flatten(*c, id);
      nodes_[id].child.push_back(cid);
    }
    return id;
  }

  double run(const SignalBundle& sig, int k, bool smooth_mode, double lambda) {
    if (!sig.grids_consistent())
      throw DomainError("robustness: trajectories disagree on the time grid");
    if (sig.num_steps() != grid_steps_)
      throw DomainError("robustness: signal grid does not match evaluator grid");
    if (k < 0 || k > grid_steps_)
      throw HorizonError("robustness: sample index outside the time grid");
    sig_ = &sig;
    smooth_ = smooth_mode;
    lambda_ = lambda;
    ++epoch_;
    return compute(0, k);
  }

  double agg_min(std::span<const double> v) const {
    if (smooth_) return smooth_min(v, lambda_);
    double m = v[0];
    for (double x : v) m = std::min(m, x);
    return m;
  }

  double agg_max(std::span<const double> v) const {
    if (smooth_) return smooth_max(v, lambda_);
    double m = v[0];
    for (double x : v) m = std::max(m, x);
    return m;
  }

  double margin_in_box(int n, int u, int k) const {
    const Vec3 p = sig_->trajectories[u].p.row(k);
    const Box3& box = nodes_[n].f->box;
    double face[6];
    for (int j = 0; j < 3; ++j) {
      face[2 * j] = box.hi[j] - p[j];
      face[2 * j + 1] = p[j] - box.lo[j];
    }
    return agg_min(std::span<const double>(face, 6));
  }

  double pair_margin(int n, int k) const {
    const Node& node = nodes_[n];
    const Vec3 pa = sig_->trajectories[node.f->uav_a].p.row(k);
    const Vec3 pb = sig_->trajectories[node.f->uav_b].p.row(k);
    const Vec3 d = pa - pb;
    const double nrm =
        smooth_ ? std::sqrt(d.squaredNorm() + kNormEps * kNormEps) : d.norm();
    return nrm - node.f->gamma;
  }

  Interval shifted_window(int n, int k) const {
    const Interval& w = nodes_[n].f->window;
    const Interval abs{k + w.lo, k + w.hi};
    if (abs.hi > grid_steps_)
      throw HorizonError("robustness: temporal window escapes the time grid");
    return abs;
  }

  double compute(int n, int k) {
    if (stamp_[n][k] == epoch_) return val_[n][k];
    const Node& node = nodes_[n];
    double out = 0.0;
    switch (node.f->kind) {
      case Formula::Kind::InBox:
        out = margin_in_box(n, node.f->uav_a, k);
        break;
      case Formula::Kind::OutBox:
        out = -margin_in_box(n, node.f->uav_a, k);
        break;
      case Formula::Kind::PairDist:
        out = pair_margin(n, k);
        break;
      case Formula::Kind::Not:
        out = -compute(node.child[0], k);
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        std::vector<double> vals(node.child.size());
        for (size_t i = 0; i < node.child.size(); ++i) vals[i] = compute(node.child[i], k);
        out = node.f->kind == Formula::Kind::And ? agg_min(vals) : agg_max(vals);
        break;
      }
      case Formula::Kind::Always:
      case Formula::Kind::Eventually: {
        const Interval w = shifted_window(n, k);
        std::vector<double> vals(static_cast<size_t>(w.hi - w.lo) + 1);
        for (int t = w.lo; t <= w.hi; ++t) vals[t - w.lo] = compute(node.child[0], t);
        out = node.f->kind == Formula::Kind::Always ? agg_min(vals) : agg_max(vals);
        break;
      }
      case Formula::Kind::Until: {
        const Interval w = shifted_window(n, k);
        std::vector<double> pair_vals(static_cast<size_t>(w.hi - w.lo) + 1);
        for (int t = w.lo; t <= w.hi; ++t) {
          std::vector<double> prefix(static_cast<size_t>(t - k) + 1);
          for (int u = k; u <= t; ++u) prefix[u - k] = compute(node.child[0], u);
          const double pre = agg_min(prefix);
          const double two[2] = {compute(node.child[1], t), pre};
          pair_vals[t - w.lo] = agg_min(std::span<const double>(two, 2));
        }
        out = agg_max(pair_vals);
        break;
      }
    }
    val_[n][k] = out;
    stamp_[n][k] = epoch_;
    return out;
  }

  // --- reverse pass (smooth mode only) -------------------------------------

  void softmin_weights(std::span<const double> v, std::vector<double>& w) const {
    w.resize(v.size());
    double m = v[0];
    for (double x : v) m = std::min(m, x);
    double s = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
      w[i] = std::exp(-lambda_ * (v[i] - m));
      s += w[i];
    }
    for (auto& x : w) x /= s;
  }

  /// d smooth_max / d v_i = w_i * (1 + lambda * (v_i - value)).
  void softmax_weights(std::span<const double> v, double value, std::vector<double>& w) const {
    w.resize(v.size());
    double m = v[0];
    for (double x : v) m = std::max(m, x);
    double s = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
      w[i] = std::exp(lambda_ * (v[i] - m));
      s += w[i];
    }
    for (size_t i = 0; i < v.size(); ++i) w[i] = w[i] / s * (1.0 + lambda_ * (v[i] - value));
  }

  void atom_backward(int n, int k, double seed, std::vector<Eigen::MatrixX3d>& grad_p) const {
    const Node& node = nodes_[n];
    const Formula& f = *node.f;
    if (f.kind == Formula::Kind::PairDist) {
      const Vec3 pa = sig_->trajectories[f.uav_a].p.row(k);
      const Vec3 pb = sig_->trajectories[f.uav_b].p.row(k);
      const Vec3 d = pa - pb;
      const double nrm = std::sqrt(d.squaredNorm() + kNormEps * kNormEps);
      const Vec3 g = d / nrm * seed;
      grad_p[f.uav_a].row(k) += g.transpose();
      grad_p[f.uav_b].row(k) -= g.transpose();
      return;
    }
    // InBox / OutBox: distribute through the face soft-min.
    const int u = f.uav_a;
    const Vec3 p = sig_->trajectories[u].p.row(k);
    double face[6];
    for (int j = 0; j < 3; ++j) {
      face[2 * j] = f.box.hi[j] - p[j];
      face[2 * j + 1] = p[j] - f.box.lo[j];
    }
    std::vector<double> w;
    softmin_weights(std::span<const double>(face, 6), w);
    const double sign = f.kind == Formula::Kind::OutBox ? -1.0 : 1.0;
    for (int j = 0; j < 3; ++j) {
      grad_p[u](k, j) += seed * sign * (-w[2 * j] + w[2 * j + 1]);
    }
  }

  void backward(std::vector<Eigen::MatrixX3d>& grad_p) {
    std::vector<double> w, vals, prefix;
    for (int n = 0; n < static_cast<int>(nodes_.size()); ++n) {
      const Node& node = nodes_[n];
      for (int k = 0; k <= grid_steps_; ++k) {
        const double seed = adj_[n][k];
        if (seed == 0.0 || stamp_[n][k] != epoch_) continue;
        switch (node.f->kind) {
          case Formula::Kind::InBox:
          case Formula::Kind::OutBox:
          case Formula::Kind::PairDist:
            atom_backward(n, k, seed, grad_p);
            break;
          case Formula::Kind::Not:
            adj_[node.child[0]][k] -= seed;
            break;
          case Formula::Kind::And:
          case Formula::Kind::Or: {
            vals.resize(node.child.size());
            for (size_t i = 0; i < node.child.size(); ++i) vals[i] = val_[node.child[i]][k];
            if (node.f->kind == Formula::Kind::And)
              softmin_weights(vals, w);
            else
              softmax_weights(vals, val_[n][k], w);
            for (size_t i = 0; i < node.child.size(); ++i)
              adj_[node.child[i]][k] += seed * w[i];
            break;
          }
          case Formula::Kind::Always:
          case Formula::Kind::Eventually: {
            const Interval win = shifted_window(n, k);
            vals.resize(static_cast<size_t>(win.hi - win.lo) + 1);
            for (int t = win.lo; t <= win.hi; ++t) vals[t - win.lo] = val_[node.child[0]][t];
            if (node.f->kind == Formula::Kind::Always)
              softmin_weights(vals, w);
            else
              softmax_weights(vals, val_[n][k], w);
            for (int t = win.lo; t <= win.hi; ++t)
              adj_[node.child[0]][t] += seed * w[t - win.lo];
            break;
          }
          case Formula::Kind::Until:
            until_backward(n, k, seed);
            break;
        }
      }
    }
  }

  void until_backward(int n, int k, double seed) {
    const Node& node = nodes_[n];
    const Interval win = shifted_window(n, k);
    const int len = win.hi - win.lo + 1;
    std::vector<double> pair_vals(len), pre_vals(len);
    std::vector<double> prefix, w2, wpre, wout;
    for (int t = win.lo; t <= win.hi; ++t) {
      prefix.resize(static_cast<size_t>(t - k) + 1);
      for (int u = k; u <= t; ++u) prefix[u - k] = val_[node.child[0]][u];
      pre_vals[t - win.lo] = agg_min(prefix);
      const double two[2] = {val_[node.child[1]][t], pre_vals[t - win.lo]};
      pair_vals[t - win.lo] = agg_min(std::span<const double>(two, 2));
    }
    softmax_weights(pair_vals, val_[n][k], wout);
    for (int t = win.lo; t <= win.hi; ++t) {
      const double seed_t = seed * wout[t - win.lo];
      if (seed_t == 0.0) continue;
      const double two[2] = {val_[node.child[1]][t], pre_vals[t - win.lo]};
      std::vector<double> wpair;
      softmin_weights(std::span<const double>(two, 2), wpair);
      adj_[node.child[1]][t] += seed_t * wpair[0];
      const double seed_pre = seed_t * wpair[1];
      prefix.resize(static_cast<size_t>(t - k) + 1);
      for (int u = k; u <= t; ++u) prefix[u - k] = val_[node.child[0]][u];
      std::vector<double> win_w;
      softmin_weights(prefix, win_w);
      for (int u = k; u <= t; ++u) adj_[node.child[0]][u] += seed_pre * win_w[u - k];
    }
  }

  FormulaPtr root_;
  int grid_steps_;
  std::vector<Node> nodes_;
  std::vector<std::vector<double>> val_;
  std::vector<std::vector<int>> stamp_;
  std::vector<std::vector<double>> adj_;
  const SignalBundle* sig_ = nullptr;
  bool smooth_ = false;
  double lambda_ = 1.0;
  int epoch_ = 0;
};

inline double robustness_exact(const FormulaPtr& phi, const SignalBundle& sig, int k) {
  RobustnessEvaluator ev(phi, sig.num_steps());
  return ev.exact(sig, k);
}

inline double robustness_smooth(const FormulaPtr& phi, const SignalBundle& sig, int k,
                                double lambda) {
  RobustnessEvaluator ev(phi, sig.num_steps());
  return ev.smooth(sig, k, lambda);
}

/// Chains a gradient with respect to positions through the double-integrator
/// dynamics onto the acceleration decision vector:
///   dp[k]/da[m] = dt^2 (k - m - 1/2)  for m < k,  dv[k]/da[m] = dt.
inline void chain_gradient_to_accels(const std::vector<Eigen::MatrixX3d>& grad_p, double dt,
                                     DecisionVariables& out) {
  const int n = out.num_steps;
  for (int u = 0; u < out.num_uavs; ++u) {
    for (int j = 0; j < 3; ++j) {
      double s1 = 0.0, s2 = 0.0;
      for (int m = n - 1; m >= 0; --m) {
        s1 += grad_p[u](m + 1, j);
        s2 += (m + 1) * grad_p[u](m + 1, j);
        out.at(u, j, m) = dt * dt * (s2 - (m + 0.5) * s1);
      }
    }
  }
}

/// Gradient of the smooth robustness with respect to every acceleration
/// decision variable. The signal must be the dynamics rollout of the
/// decision vector (checked).
inline std::vector<double> smooth_gradient(const FormulaPtr& phi, const SignalBundle& sig,
                                           int k, double lambda,
                                           const DecisionVariables& dec) {
  if (dec.num_uavs != sig.num_uavs() || dec.num_steps != sig.num_steps())
    throw DomainError("smooth_gradient: decision vector does not match the signal shape");
  const SignalBundle check = integrate_dynamics(dec, initial_states_of(sig), sig.dt);
  for (int u = 0; u < sig.num_uavs(); ++u) {
    const double dp =
        (check.trajectories[u].p - sig.trajectories[u].p).cwiseAbs().maxCoeff();
    const double dv =
        (check.trajectories[u].v - sig.trajectories[u].v).cwiseAbs().maxCoeff();
    if (dp > 1e-6 || dv > 1e-6)
      throw DomainError("smooth_gradient: signal is not the rollout of the decision vector");
  }
  RobustnessEvaluator ev(phi, sig.num_steps());
  std::vector<Eigen::MatrixX3d> grad_p;
  ev.smooth_with_gradient(sig, k, lambda, grad_p);
  DecisionVariables g = DecisionVariables::zeros(dec.num_uavs, dec.num_steps);
  chain_gradient_to_accels(grad_p, sig.dt, g);
  return g.a;
}

// ---------------------------------------------------------------------------
// Mission formula
// ---------------------------------------------------------------------------

inline FormulaPtr build_safety_clause(int uav, const Scenario& s, int num_steps) {
  std::vector<FormulaPtr> parts;
  parts.push_back(in_box(uav, s.workspace));
  for (const auto& ob : s.obstacles) parts.push_back(out_box(uav, ob));
  return always(Interval{0, num_steps}, conj(std::move(parts)));
}

inline FormulaPtr build_pair_clause(int uav_n, int uav_m, double gamma, int num_steps) {
  return always(Interval{0, num_steps}, pair_dist(uav_n, uav_m, gamma));
}

/// "Some vehicle reaches the region and stays for the installation window":
/// Or over vehicles of Eventually[0, N-n_ins] Always[0, n_ins] InBox.
inline FormulaPtr build_target_clause(const Box3& target, int num_uavs, int num_steps,
                                      int ins_steps) {
  std::vector<FormulaPtr> per_uav;
  for (int u = 0; u < num_uavs; ++u) {
    per_uav.push_back(eventually(Interval{0, num_steps - ins_steps},
                                 always(Interval{0, ins_steps}, in_box(u, target))));
  }
  return disj(std::move(per_uav));
}

/// Vehicle parked inside some refilling station at the final sample.
inline FormulaPtr build_terminal_clause(int uav, const Scenario& s, int num_steps) {
  std::vector<FormulaPtr> in_refill;
  for (const auto& rs : s.refills) in_refill.push_back(in_box(uav, rs));
  return always(Interval{num_steps, num_steps}, disj(std::move(in_refill)));
}

/// Conjunction of, in order: per-vehicle safety clauses (workspace and
/// obstacles), pairwise-distance clauses, per-target visit clauses, and
/// per-vehicle mission-completion clauses. Payload capacity is handled by
/// the routing layer and the validator, not by a formula node.
inline FormulaPtr build_mission_formula(const Scenario& s, const PlannerConfig& cfg) {
  if (cfg.t_ins >= cfg.t_N)
    throw ConfigError("mission formula: installation dwell must be below the mission time");
  const int n = cfg.num_samples();
  const int n_ins = cfg.ins_samples();
  std::vector<FormulaPtr> clauses;
  for (int u = 0; u < s.num_uavs(); ++u) clauses.push_back(build_safety_clause(u, s, n));
  for (int a = 0; a < s.num_uavs(); ++a)
    for (int b = a + 1; b < s.num_uavs(); ++b)
      clauses.push_back(build_pair_clause(a, b, cfg.Gamma, n));
  for (const auto& target : s.targets)
    clauses.push_back(build_target_clause(target, s.num_uavs(), n, n_ins));
  for (int u = 0; u < s.num_uavs(); ++u) clauses.push_back(build_terminal_clause(u, s, n));
  return conj(std::move(clauses));
}

/// Widest aggregation (operand count or window length) anywhere in the tree;
/// bounds the gap between exact and smooth semantics by log(width)/lambda
/// per aggregation level.
inline int max_aggregation_width(const FormulaPtr& phi) {
  int w = 1;
  switch (phi->kind) {
    case Formula::Kind::InBox:
    case Formula::Kind::OutBox:
      w = 6;
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      w = static_cast<int>(phi->children.size());
      break;
    case Formula::Kind::Always:
    case Formula::Kind::Eventually:
    case Formula::Kind::Until:
      w = phi->window.hi - phi->window.lo + 1;
      break;
    default:
      break;
  }
  for (const auto& c : phi->children) w = std::max(w, max_aggregation_width(c));
  return w;
}

}  // namespace stlplan
