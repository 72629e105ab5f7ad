#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hamopt/types.hpp"

namespace hamopt {

/// First derivatives of a Hamiltonian at a point (x, lam).
struct GradH {
  Vec x;    ///< dH/dx
  Vec lam;  ///< dH/dlam
};

/// Second-derivative blocks. xlam(i, j) = d2H / dx_i dlam_j; the (lam, x)
/// mixed block is its transpose and is not stored separately.
struct HessH {
  Mat xx;
  Mat xlam;
  Mat lamlam;
};

/// One excluded tube along a coordinate axis: samples with
/// |coord - center| < halfwidth are rejected. Regularized models use this to
/// keep finite-difference probes away from their high-curvature zones.
struct AxisExclusion {
  int axis = 0;
  double center = 0.0;
  double halfwidth = 0.0;
};

/// Axis-aligned sampling region for the derivative audits.
struct SampleBox {
  Vec x_lo, x_hi;
  Vec lam_lo, lam_hi;
  std::vector<AxisExclusion> x_excl;
  std::vector<AxisExclusion> lam_excl;
};

/// Hamiltonian-level description of an optimal control problem: H with its
/// derivative blocks plus the terminal cost g. All callables must be pure
/// functions of their arguments; models may be shared and evaluated
/// concurrently from multiple threads.
struct HamiltonianModel {
  int state_dim = 0;
  std::function<double(const Vec&, const Vec&)> eval;
  std::function<GradH(const Vec&, const Vec&)> grad;
  std::function<HessH(const Vec&, const Vec&)> hess;
  std::function<double(const Vec&)> terminal;
  std::function<Vec(const Vec&)> terminal_grad;
  /// Optional; when absent, terminal_hessian() falls back to finite
  /// differences of terminal_grad (fine for cheap terminal costs).
  std::function<Mat(const Vec&)> terminal_hess;
  /// Optional closed-form minimizer alpha(x, lam) of lam.f(x,a) + h(x,a).
  std::function<Vec(const Vec&, const Vec&)> control_recovery;
};

struct ProblemSpec {
  HamiltonianModel hamiltonian;
  double horizon = 0.0;
  Vec initial_state;
  std::string label;
  SampleBox sample_box;
  /// Optional closed-form running cost L(x, beta) for 1-D problems;
  /// +infinity marks infeasible velocities. Consumed by the
  /// dynamic-programming oracle.
  std::function<double(double, double)> running_cost;

  int dim() const { return hamiltonian.state_dim; }
  /// Throws std::invalid_argument when fields are inconsistent.
  void validate() const;
};

// Checked evaluation wrappers. Each validates argument sizes, evaluates the
// model, and raises EvalFault on non-finite output.
double eval_H(const HamiltonianModel& model, const Vec& x, const Vec& lam);
GradH eval_grad_H(const HamiltonianModel& model, const Vec& x, const Vec& lam);
HessH eval_hess_H(const HamiltonianModel& model, const Vec& x, const Vec& lam);

/// Closed-form minimizing control. Throws UnsupportedOperation when the
/// model ships no control_recovery.
Vec recover_control(const HamiltonianModel& model, const Vec& x, const Vec& lam);

/// Terminal Hessian g_xx, analytic when available, otherwise by central
/// finite differences of terminal_grad with step 1e-8 * (1 + |x_i|).
Mat terminal_hessian(const HamiltonianModel& model, const Vec& x);

/// Smoothed absolute value sqrt(t^2 + delta^2) with first and second
/// derivatives. The sup-norm distance to |t| is exactly delta (attained at
/// t = 0).
struct SmoothAbs {
  double delta = 0.0;
  double value(double t) const;
  double d1(double t) const;
  double d2(double t) const;
};

/// Throws std::invalid_argument when delta <= 0.
SmoothAbs regularize_abs(double delta);

/// A problem whose dynamics and running cost depend explicitly on time,
/// described through the time-dependent Hamiltonian core
/// H(s, x, lam) (without the dual-of-time term, which augmentation adds).
struct TimeDependentModel {
  int state_dim = 0;  ///< dimension of x, excluding the time coordinate

  struct Grad {
    Vec x;
    double s = 0.0;
    Vec lam;
  };
  struct Hess {
    Mat xx;
    Vec xs;      ///< d2H / dx_i ds
    double ss = 0.0;
    Mat xlam;
    Vec slam;    ///< d2H / ds dlam_j
    Mat lamlam;
  };

  std::function<double(double, const Vec&, const Vec&)> eval;
  std::function<Grad(double, const Vec&, const Vec&)> grad;
  std::function<Hess(double, const Vec&, const Vec&)> hess;
  std::function<double(const Vec&)> terminal;        ///< g(x); no s dependence
  std::function<Vec(const Vec&)> terminal_grad;
  std::function<Mat(const Vec&)> terminal_hess;      ///< optional
  std::function<Vec(double, const Vec&, const Vec&)> control_recovery;  ///< optional
};

/// Rewrites a time-dependent problem as an autonomous one of dimension d+1.
/// The appended state coordinate carries the clock (unit drift, starts at 0)
/// and the Hamiltonian gains the additive dual-of-time term, so its gradient
/// in that dual slot is identically 1. The terminal cost ignores the clock
/// coordinate, making the corresponding terminal dual 0. The returned spec
/// has an empty sample box; callers fill it in augmented coordinates.
ProblemSpec augment_time(const TimeDependentModel& base, double horizon,
                         const Vec& x0, const std::string& label);

/// Result of the analytic-vs-finite-difference derivative audit. Relative
/// errors use the mixed denominator max(1, |analytic|, |fd|).
struct DerivativeAudit {
  double max_rel_grad = 0.0;
  double max_rel_hess = 0.0;
  double max_rel_terminal_grad = 0.0;
  double max_rel_terminal_hess = 0.0;  ///< 0 when no analytic terminal_hess
  int samples = 0;

  bool pass(double grad_tol, double hess_tol) const {
    return max_rel_grad <= grad_tol && max_rel_terminal_grad <= grad_tol &&
           max_rel_hess <= hess_tol && max_rel_terminal_hess <= hess_tol;
  }
};

/// Samples n points from the problem's sample box (deterministically, from
/// the seed) and compares analytic derivatives against central differences.
DerivativeAudit audit_derivatives(const ProblemSpec& problem, int n_samples,
                                  std::uint64_t seed);

}  // namespace hamopt
