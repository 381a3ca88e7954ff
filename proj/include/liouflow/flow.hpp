#pragma once

#include <array>
#include <string>
#include <vector>

#include "liouflow/field.hpp"

namespace liouflow {

/// One sine mode of the closed-form solution. The amplitude
/// A_m = m / (2*pi * p_m^m * lambda_m) is kept as the exact rational
/// amplitude_x2pi = m / (p_m^m * lambda_m) with the 2*pi factored out, so
/// downstream cancellations stay exact.
struct TrajectoryMode {
  unsigned index = 0;
  Rational lambda;
  Rational amplitude_x2pi;
};

/// x1(t) = r_K*t, x2(t) = t, x3(t) = sum_m A_m sin(2*pi*lambda_m*t).
struct ClosedFormTrajectory {
  unsigned base = 10;
  Rational r_K;
  std::vector<TrajectoryMode> modes;

  unsigned M() const { return static_cast<unsigned>(modes.size()); }
};

/// Integrates the field in closed form. Rejects any mode with lambda = 0
/// (the divisor of the integrated amplitude).
ClosedFormTrajectory solve_closed_form(const TruncatedField& field);

std::array<Real, 3> eval_trajectory(const ClosedFormTrajectory& traj, const Rational& t, int bits);

/// The third component alone.
Real eval_x3(const ClosedFormTrajectory& traj, const Rational& t, int bits);

/// A_m at the given precision (amplitude_x2pi / 2*pi).
Real mode_amplitude(const ClosedFormTrajectory& traj, unsigned m, int bits);

/// Fixed-step RK4 samples. Times are exact rationals i*step; states are Reals
/// at `bits`, converted exactly to rationals for each field evaluation.
struct SampleSeries {
  std::string method = "rk4";
  Rational step;
  int bits = 0;
  Rational r_K;
  std::vector<Rational> field_lambdas;
  std::vector<Rational> t;
  std::vector<std::array<Real, 3>> x;
};

/// Classical fixed-step RK4 from x(0) = 0. Records every `stride`-th step plus
/// the final state; stride = 1 records every step. step must lie in (0, 1);
/// t_end = 0 yields just the initial sample, t_end < 0 is rejected.
SampleSeries integrate_ode(const TruncatedField& field, const Rational& t_end,
                           const Rational& step, int bits, unsigned stride = 1);

/// Rigorous global-error bound for integrate_ode on [0, t_end]:
///   t_end * step^4 / 2880 * sum_m a_m * (2*pi*|lambda_m|)^4.
/// The first two field components are constants, so the phase of mode m
/// advances at exactly lambda_m along any trajectory and the third component
/// reduces to composite Simpson quadrature of sum a_m cos(2*pi*lambda_m*t).
Real integration_error_bound(const TruncatedField& field, const Rational& step,
                             const Rational& t_end, int bits);

struct ValidationReport {
  size_t samples = 0;
  Real max_error;
  Real tolerance;
  Real predicted_bound;
  bool passed = false;

  ValidationReport(size_t n, Real err, Real tol, Real bound, bool ok)
      : samples(n),
        max_error(std::move(err)),
        tolerance(std::move(tol)),
        predicted_bound(std::move(bound)),
        passed(ok) {}
};

/// Max over recorded samples of the sup-norm gap between the closed form and
/// the integrated states. The series may truncate at a smaller M than the
/// trajectory (shared modes must agree exactly); a different r_K or divergent
/// shared modes mean a different system and throw.
ValidationReport cross_validate(const ClosedFormTrajectory& traj, const SampleSeries& series,
                                const Real& tol);

/// CSV t,x1,x2,x3 at 30 significant digits.
std::string series_csv(const SampleSeries& series);
/// {M, modes: [{m, lambda: "num/den", A_times_2pi: "num/den"}]}.
std::string trajectory_json(const ClosedFormTrajectory& traj);
/// CSV of closed-form samples on a grid: t,x1,x2,x3.
std::string trajectory_csv(const ClosedFormTrajectory& traj, const std::vector<Rational>& times,
                           int bits);

}  // namespace liouflow
