#pragma once

#include <string>
#include <vector>

#include "liouflow/flow.hpp"

namespace liouflow {

/// x(T)/T with a certified bound on the third component:
/// (sum_m A_m)/T + tail of the dropped modes. The first two components are
/// exact rationals (r_K and 1) before any rounding.
struct RotationEstimate {
  Rational T;
  Rational rho1;
  Rational rho2;
  Real rho3;
  Real third_component_bound;

  RotationEstimate(Rational T_, Rational r1, Rational r2, Real r3, Real bound)
      : T(std::move(T_)),
        rho1(std::move(r1)),
        rho2(std::move(r2)),
        rho3(std::move(r3)),
        third_component_bound(std::move(bound)) {}
};

RotationEstimate weak_rotation_estimate(const ClosedFormTrajectory& traj, const Rational& T,
                                        int bits);

/// Quarter period 1/(4*lambda) of a mode: there its sine contribution is
/// exactly the full amplitude.
Rational resonance_time(const Rational& lambda);
Rational resonance_time(const ResonantMode& mode);
Rational resonance_time(const TrajectoryMode& mode);

struct DeviationReport {
  unsigned n = 0;
  Rational t_n;
  Real x3_at_tn;
  Real certified_lower_bound;
  Real n_over_4pi;
  bool exceeds_n_over_4pi = false;

  DeviationReport(unsigned n_, Rational t, Real x3, Real lower, Real threshold, bool exceeds)
      : n(n_),
        t_n(std::move(t)),
        x3_at_tn(std::move(x3)),
        certified_lower_bound(std::move(lower)),
        n_over_4pi(std::move(threshold)),
        exceeds_n_over_4pi(exceeds) {}
};

/// Evaluates x3 at t_n = 1/(4*lambda_n), where mode n contributes exactly A_n,
/// and certifies the lower bound
///   A_n - sum_{m<n} A_m - (sum_{m>n} a_m + tail) * t_n.
DeviationReport deviation_at_resonance(const ClosedFormTrajectory& traj, unsigned n, int bits);

enum class CorrelationKind { sin, cos };

/// T^-1 int_0^T x3(s) * trig(2*pi*lambda_n*s) ds in exact closed form: phases
/// are reduced as exact rationals and each product term integrates to a
/// bounded antiderivative, so the value is meaningful at any horizon. For the
/// sin pairing the limit is A_n/2 = n/(4*pi*p_n^n*lambda_n); for cos it is 0.
/// error_bound certifies |value - limit| by the triangle inequality, O(1/T).
struct CorrelationEstimate {
  unsigned n = 0;
  Rational T;
  CorrelationKind kind = CorrelationKind::sin;
  Real value;
  Real limit;
  Real error_bound;
  bool within_bound = false;
  bool limit_exceeds_n_over_4pi = false;  // sin pairing only; true for cos=trivial

  CorrelationEstimate(unsigned n_, Rational T_, CorrelationKind k, Real v, Real lim, Real err,
                      bool within, bool exceeds)
      : n(n_),
        T(std::move(T_)),
        kind(k),
        value(std::move(v)),
        limit(std::move(lim)),
        error_bound(std::move(err)),
        within_bound(within),
        limit_exceeds_n_over_4pi(exceeds) {}
};

CorrelationEstimate correlation(const ClosedFormTrajectory& traj, unsigned n, const Rational& T,
                                CorrelationKind kind, int bits);

struct ProfilePoint {
  Rational t;
  Real x3;
  Real running_sup;

  ProfilePoint(Rational t_, Real x, Real sup)
      : t(std::move(t_)), x3(std::move(x)), running_sup(std::move(sup)) {}
};

/// x3 and the running sup of |x3| over a strictly increasing grid.
std::vector<ProfilePoint> deviation_profile(const ClosedFormTrajectory& traj,
                                            const std::vector<Rational>& times, int bits);

std::string correlation_json(const std::vector<CorrelationEstimate>& estimates);
std::string profile_csv(const std::vector<ProfilePoint>& profile);

}  // namespace liouflow
