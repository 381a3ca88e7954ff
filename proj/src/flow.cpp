#include "liouflow/flow.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "liouflow/trig.hpp"

namespace liouflow {

ClosedFormTrajectory solve_closed_form(const TruncatedField& field) {
  ClosedFormTrajectory traj;
  traj.base = field.spec.base;
  traj.r_K = field.r_K;
  for (const ResonantMode& md : field.modes) {
    if (md.lambda.is_zero())
      throw std::invalid_argument("mode " + std::to_string(md.index) +
                                  " has vanishing divisor; cannot integrate");
    TrajectoryMode tm;
    tm.index = md.index;
    tm.lambda = md.lambda;
    tm.amplitude_x2pi = Rational(static_cast<long>(md.index)) /
                        (Rational(Integer::pow(md.p, md.index)) * md.lambda);
    traj.modes.push_back(std::move(tm));
  }
  return traj;
}

Real eval_x3(const ClosedFormTrajectory& traj, const Rational& t, int bits) {
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits) + 32;
  Real two_pi = Real::pi(wp).mul_long(2);
  Real acc(wp);
  for (const TrajectoryMode& md : traj.modes) {
    Rational phase = reduce_phase(md.lambda * t);
    acc += Real(md.amplitude_x2pi, wp) * sin_turns(phase, static_cast<int>(wp));
  }
  return (acc / two_pi).round_to(bits);
}

std::array<Real, 3> eval_trajectory(const ClosedFormTrajectory& traj, const Rational& t,
                                    int bits) {
  return {Real(traj.r_K * t, bits), Real(t, bits), eval_x3(traj, t, bits)};
}

Real mode_amplitude(const ClosedFormTrajectory& traj, unsigned m, int bits) {
  for (const TrajectoryMode& md : traj.modes) {
    if (md.index == m) {
      mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits) + 32;
      return (Real(md.amplitude_x2pi, wp) / Real::pi(wp).mul_long(2)).round_to(bits);
    }
  }
  throw std::out_of_range("no mode with index " + std::to_string(m));
}

namespace {

// Field evaluation memo keyed on (z1, z2); the third component of the state
// never enters the field, per its contract.
class FieldEval {
 public:
  FieldEval(const TruncatedField& field, int bits) : field_(field), bits_(bits) {}

  std::array<Real, 3> operator()(const std::array<Real, 3>& state) {
    Rational z1 = state[0].to_rational();
    Rational z2 = state[1].to_rational();
    if (cached_ && z1 == cached_->z1 && z2 == cached_->z2) return cached_->value;
    std::array<Real, 3> v = eval_field(field_, {z1, z2, Rational(0)}, bits_);
    cached_ = Entry{std::move(z1), std::move(z2), v};
    return v;
  }

 private:
  struct Entry {
    Rational z1, z2;
    std::array<Real, 3> value;
  };
  const TruncatedField& field_;
  int bits_;
  std::optional<Entry> cached_;
};

}  // namespace

SampleSeries integrate_ode(const TruncatedField& field, const Rational& t_end,
                           const Rational& step, int bits, unsigned stride) {
  if (t_end.sgn() < 0) throw std::invalid_argument("t_end must be >= 0");
  if (step.sgn() <= 0) throw std::invalid_argument("step must be positive");
  if (step >= Rational(1)) throw std::invalid_argument("step must be < 1");
  if (stride == 0) throw std::invalid_argument("stride must be >= 1");

  SampleSeries series;
  series.step = step;
  series.bits = bits;
  series.r_K = field.r_K;
  for (const ResonantMode& md : field.modes) series.field_lambdas.push_back(md.lambda);

  std::array<Real, 3> x{Real(bits), Real(bits), Real(bits)};
  Rational t(0);
  series.t.push_back(t);
  series.x.push_back(x);
  if (t_end.is_zero()) return series;

  FieldEval f(field, bits);
  const Real half(Rational(1, 2), bits);
  const Real sixth(Rational(1, 6), bits);

  unsigned long recorded_gap = 0;
  for (unsigned long n = 1; t < t_end; ++n) {
    Rational t_next = step * Rational(static_cast<long>(n));
    Rational h = t_next - t;
    if (t_next > t_end) {
      t_next = t_end;
      h = t_end - t;
    }
    Real hr(h, bits);

    std::array<Real, 3> k1 = f(x);
    std::array<Real, 3> s2, s3, s4;
    for (int i = 0; i < 3; ++i) s2[i] = x[i] + hr * half * k1[i];
    std::array<Real, 3> k2 = f(s2);
    for (int i = 0; i < 3; ++i) s3[i] = x[i] + hr * half * k2[i];
    std::array<Real, 3> k3 = f(s3);
    for (int i = 0; i < 3; ++i) s4[i] = x[i] + hr * k3[i];
    std::array<Real, 3> k4 = f(s4);
    for (int i = 0; i < 3; ++i)
      x[i] += hr * sixth * (k1[i] + (k2[i] + k3[i]).mul_long(2) + k4[i]);

    t = t_next;
    if (++recorded_gap == stride || t == t_end) {
      series.t.push_back(t);
      series.x.push_back(x);
      recorded_gap = 0;
    }
  }
  return series;
}

Real integration_error_bound(const TruncatedField& field, const Rational& step,
                             const Rational& t_end, int bits) {
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits) + 32;
  Rational rate(0);
  for (const ResonantMode& md : field.modes)
    rate += md.amplitude * md.lambda.pow_int(4);
  Rational scalar = t_end * step.pow_int(4) * rate.abs() / Rational(2880);
  Real two_pi_4 = Real::pi(wp).mul_long(2).pow_ui(4);
  return (Real(scalar, wp) * two_pi_4).round_to(bits);
}

ValidationReport cross_validate(const ClosedFormTrajectory& traj, const SampleSeries& series,
                                const Real& tol) {
  if (!(traj.r_K == series.r_K))
    throw std::invalid_argument("cross-validation of different systems (r_K mismatch)");
  size_t shared = std::min(traj.modes.size(), series.field_lambdas.size());
  for (size_t i = 0; i < shared; ++i)
    if (!(traj.modes[i].lambda == series.field_lambdas[i]))
      throw std::invalid_argument("cross-validation of different systems (mode mismatch)");

  // evaluate the closed form well above the series precision so the measured
  // gap is the integrator's
  int cmp_bits = series.bits + 64;
  Real max_err(cmp_bits);
  for (size_t i = 0; i < series.t.size(); ++i) {
    std::array<Real, 3> ref = eval_trajectory(traj, series.t[i], cmp_bits);
    for (int c = 0; c < 3; ++c) {
      Real err = (ref[c] - series.x[i][c]).abs();
      if (err > max_err) max_err = err;
    }
  }

  // predicted integrator bound, from the shared modes (a_m = A_m*2pi*lambda)
  Rational t_total = series.t.empty() ? Rational(0) : series.t.back();
  Rational rate(0);
  for (size_t i = 0; i < shared; ++i) {
    const TrajectoryMode& tm = traj.modes[i];
    Rational amplitude = tm.amplitude_x2pi * tm.lambda;  // m * p^-m
    rate += amplitude * tm.lambda.pow_int(4);
  }
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(series.bits) + 32;
  Rational scalar = t_total * series.step.pow_int(4) * rate.abs() / Rational(2880);
  Real bound = (Real(scalar, wp) * Real::pi(wp).mul_long(2).pow_ui(4)).round_to(series.bits);

  bool ok = max_err <= tol;
  return ValidationReport(series.t.size(), max_err.round_to(series.bits), tol, bound, ok);
}

std::string series_csv(const SampleSeries& series) {
  std::ostringstream os;
  os << "t,x1,x2,x3\n";
  for (size_t i = 0; i < series.t.size(); ++i) {
    os << series.t[i].decimal(30) << ',' << series.x[i][0].decimal(30) << ','
       << series.x[i][1].decimal(30) << ',' << series.x[i][2].decimal(30) << '\n';
  }
  return os.str();
}

std::string trajectory_json(const ClosedFormTrajectory& traj) {
  nlohmann::json doc;
  doc["M"] = traj.M();
  nlohmann::json modes = nlohmann::json::array();
  for (const TrajectoryMode& md : traj.modes) {
    nlohmann::json entry;
    entry["m"] = md.index;
    entry["lambda"] = md.lambda.num_den_str();
    entry["A_times_2pi"] = md.amplitude_x2pi.num_den_str();
    modes.push_back(entry);
  }
  doc["modes"] = modes;
  return doc.dump(2) + "\n";
}

std::string trajectory_csv(const ClosedFormTrajectory& traj, const std::vector<Rational>& times,
                           int bits) {
  std::ostringstream os;
  os << "t,x1,x2,x3\n";
  for (const Rational& t : times) {
    std::array<Real, 3> x = eval_trajectory(traj, t, bits);
    os << t.decimal(30) << ',' << x[0].decimal(30) << ',' << x[1].decimal(30) << ','
       << x[2].decimal(30) << '\n';
  }
  return os.str();
}

}  // namespace liouflow
