#include "liouflow/analysis.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

#include "liouflow/trig.hpp"

namespace liouflow {

RotationEstimate weak_rotation_estimate(const ClosedFormTrajectory& traj, const Rational& T,
                                        int bits) {
  if (T.sgn() <= 0) throw std::invalid_argument("averaging horizon T must be positive");

  mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits) + 32;
  Real rho3 = (Real(eval_x3(traj, T, static_cast<int>(wp)), wp) / Real(T, wp)).round_to(bits);

  Rational amplitude_sum_x2pi(0);
  for (const TrajectoryMode& md : traj.modes) amplitude_sum_x2pi += md.amplitude_x2pi.abs();
  Real bound = (Real(amplitude_sum_x2pi / T, wp) / Real::pi(wp).mul_long(2) +
                Real(tail_bound(traj.M(), traj.base), wp))
                   .round_to(bits);

  return RotationEstimate(T, traj.r_K, Rational(1), std::move(rho3), std::move(bound));
}

Rational resonance_time(const Rational& lambda) {
  if (lambda.is_zero()) throw std::domain_error("resonance time of a vanishing divisor");
  return (Rational(4) * lambda).reciprocal();
}

Rational resonance_time(const ResonantMode& mode) { return resonance_time(mode.lambda); }
Rational resonance_time(const TrajectoryMode& mode) { return resonance_time(mode.lambda); }

DeviationReport deviation_at_resonance(const ClosedFormTrajectory& traj, unsigned n, int bits) {
  if (n < 1 || n > traj.M()) throw std::out_of_range("mode index n out of range");
  const TrajectoryMode& mode_n = traj.modes[n - 1];
  Rational t_n = resonance_time(mode_n);

  // the defining exact identity of the resonance time
  if (!(reduce_phase(mode_n.lambda * t_n) == Rational(1, 4)))
    throw std::logic_error("resonance phase is not a quarter turn");

  mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits) + 32;
  Real x3 = eval_x3(traj, t_n, static_cast<int>(wp)).round_to(bits);

  Rational lower_x2pi = mode_n.amplitude_x2pi.abs();  // A_n * 2pi
  for (unsigned m = 1; m < n; ++m) lower_x2pi -= traj.modes[m - 1].amplitude_x2pi.abs();
  Rational linear(0);  // modes above n obey |A sin| <= a*t
  for (unsigned m = n + 1; m <= traj.M(); ++m) {
    const TrajectoryMode& md = traj.modes[m - 1];
    linear += (md.amplitude_x2pi * md.lambda).abs();  // a_m = m * p^-m
  }
  linear += tail_bound(traj.M(), traj.base);
  Real lower =
      (Real(lower_x2pi, wp) / Real::pi(wp).mul_long(2) - Real(linear * t_n, wp)).round_to(bits);

  Real threshold =
      (Real(Rational(static_cast<long>(n), 4), wp) / Real::pi(wp)).round_to(bits);
  bool exceeds = x3 > threshold;
  return DeviationReport(n, std::move(t_n), std::move(x3), std::move(lower),
                         std::move(threshold), exceeds);
}

namespace {

// sin(2*pi*x)/(2*pi*x) for rational x != 0, exact phase reduction first.
Real sinc_2pi(const Rational& x, mpfr_prec_t wp) {
  Real s = sin_turns(reduce_phase(x), static_cast<int>(wp));
  return s / (Real::pi(wp).mul_long(2) * Real(x, wp));
}

// (1 - cos(2*pi*x))/(2*pi*x) for rational x != 0.
Real versine_over_2pi(const Rational& x, mpfr_prec_t wp) {
  Real c = cos_turns(reduce_phase(x), static_cast<int>(wp));
  return (Real(1, wp) - c) / (Real::pi(wp).mul_long(2) * Real(x, wp));
}

}  // namespace

CorrelationEstimate correlation(const ClosedFormTrajectory& traj, unsigned n, const Rational& T,
                                CorrelationKind kind, int bits) {
  if (n < 1 || n > traj.M()) throw std::out_of_range("mode index n out of range");
  if (T.sgn() <= 0) throw std::invalid_argument("averaging horizon T must be positive");

  const TrajectoryMode& mode_n = traj.modes[n - 1];
  const Rational& ln = mode_n.lambda;
  for (const TrajectoryMode& md : traj.modes)
    if (md.index != n && md.lambda.abs() == ln.abs())
      throw std::invalid_argument("divisors must be pairwise distinct in absolute value");

  mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits) + 32;
  Real two_pi = Real::pi(wp).mul_long(2);
  Real A_n = Real(mode_n.amplitude_x2pi, wp) / two_pi;

  Real value(wp);
  Real err(wp);
  if (kind == CorrelationKind::sin) {
    // A_n sin^2 term: A_n/2 - A_n*sin(4*pi*l_n*T)/(8*pi*l_n*T)
    value = A_n.div_long(2) - A_n.div_long(4) * sinc_2pi(Rational(2) * ln * T, wp).mul_long(2);
    err = (A_n / (two_pi.pow_ui(1) * Real(ln * T, wp)).abs()).div_long(4);
  } else {
    // A_n sin*cos term: A_n*(1-cos(4*pi*l_n*T))/(8*pi*l_n*T)
    value = A_n.div_long(4) * versine_over_2pi(Rational(2) * ln * T, wp).mul_long(2);
    err = (A_n / (two_pi * Real(ln * T, wp)).abs()).div_long(2);
  }

  for (const TrajectoryMode& md : traj.modes) {
    if (md.index == n) continue;
    Real A_m = Real(md.amplitude_x2pi, wp) / two_pi;
    Rational delta = (md.lambda - ln) * T;
    Rational sigma = (md.lambda + ln) * T;
    if (kind == CorrelationKind::sin) {
      // (A_m/2)[cos(2 pi (l_m-l_n)s) - cos(2 pi (l_m+l_n)s)] integrated
      value += A_m.div_long(2) * (sinc_2pi(delta, wp) - sinc_2pi(sigma, wp));
    } else {
      // (A_m/2)[sin(2 pi (l_m+l_n)s) + sin(2 pi (l_m-l_n)s)] integrated
      value += A_m.div_long(2) * (versine_over_2pi(sigma, wp) + versine_over_2pi(delta, wp));
    }
    Real cross = A_m.abs().div_long(2) *
                 (Real(1, wp) / (two_pi * Real(delta, wp)).abs() +
                  Real(1, wp) / (two_pi * Real(sigma, wp)).abs());
    err += kind == CorrelationKind::sin ? cross : cross.mul_long(2);
  }

  Real limit = kind == CorrelationKind::sin ? A_n.div_long(2) : Real(static_cast<int>(wp));
  bool within = (value - limit).abs() <= err;

  Real threshold = Real(Rational(static_cast<long>(n), 4), wp) / Real::pi(wp);
  bool exceeds = kind == CorrelationKind::cos || limit.abs() > threshold;

  return CorrelationEstimate(n, T, kind, value.round_to(bits), limit.round_to(bits),
                             err.round_to(bits), within, exceeds);
}

std::vector<ProfilePoint> deviation_profile(const ClosedFormTrajectory& traj,
                                            const std::vector<Rational>& times, int bits) {
  for (size_t i = 1; i < times.size(); ++i)
    if (!(times[i - 1] < times[i]))
      throw std::invalid_argument("profile grid must be strictly increasing");

  std::vector<ProfilePoint> profile;
  profile.reserve(times.size());
  Real sup(bits);
  for (const Rational& t : times) {
    Real x3 = eval_x3(traj, t, bits);
    Real magnitude = x3.abs();
    if (magnitude > sup) sup = magnitude;
    profile.emplace_back(t, std::move(x3), sup);
  }
  return profile;
}

std::string correlation_json(const std::vector<CorrelationEstimate>& estimates) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CorrelationEstimate& est : estimates) {
    nlohmann::json entry;
    entry["n"] = est.n;
    entry["T"] = est.T.num_den_str();
    entry["kind"] = est.kind == CorrelationKind::sin ? "sin" : "cos";
    entry["value"] = est.value.decimal(30);
    entry["limit"] = est.limit.decimal(30);
    entry["error_bound"] = est.error_bound.decimal(30);
    entry["pass"] = est.within_bound && est.limit_exceeds_n_over_4pi;
    arr.push_back(entry);
  }
  return arr.dump(2) + "\n";
}

std::string profile_csv(const std::vector<ProfilePoint>& profile) {
  std::ostringstream os;
  os << "t,x3,running_sup\n";
  for (const ProfilePoint& pt : profile)
    os << pt.t.decimal(30) << ',' << pt.x3.decimal(30) << ',' << pt.running_sup.decimal(30)
       << '\n';
  return os.str();
}

}  // namespace liouflow
