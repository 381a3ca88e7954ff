#pragma once

#include <array>
#include <string>
#include <vector>

#include "liouflow/liouville.hpp"
#include "liouflow/real.hpp"

namespace liouflow {

/// The vector field (r_K, 1, sum_{m<=M} a_m cos(2*pi*(z1*p_m - z2*q_m)))
/// restricted to a verified chain. Points live in the cover R^3; phases are
/// reduced modulo 1 exactly, so evaluation is 1-periodic bit for bit.
struct TruncatedField {
  LiouvilleSpec spec;
  Rational r_K;
  std::vector<ResonantMode> modes;

  unsigned M() const { return static_cast<unsigned>(modes.size()); }
};

/// Builds the field from a chain, re-verifying it first (throws on a fail
/// report). An empty chain gives the constant field (r_K, 1, 0).
TruncatedField make_field(const ResonantChain& chain);

std::array<Real, 3> eval_field(const TruncatedField& field, const std::array<Rational, 3>& z,
                               int bits);

/// Termwise derivative majorant of the oscillating component at order k:
///   series_part = sum_{m<=M} m * max(p_m, q_m)^k * p_m^-m     (exact)
///   majorant    = (2*pi)^k * series_part
/// and the comparison value 2^k (r_K+1)^k sum_{max(1,k)<=m<=M} m 2^-m that the
/// per-term bound m*max(p,q)^k*p^-m <= (r_K+1)^k m p^(k-m) <= 2^k (r_K+1)^k m 2^-m
/// (valid for m >= k) sums to.
struct SmoothnessBound {
  int k = 0;
  Rational series_part;
  Rational comparison_part;  // exact rational part of the comparison value
  Real majorant;
  Real comparison;

  SmoothnessBound(int k_, Rational series, Rational comp_part, Real maj, Real comp)
      : k(k_),
        series_part(std::move(series)),
        comparison_part(std::move(comp_part)),
        majorant(std::move(maj)),
        comparison(std::move(comp)) {}
};

SmoothnessBound smoothness_bound(const TruncatedField& field, int k, int bits);

/// Exact upper bound for the dropped modes of the canonical family
/// p_m = base^((m+1)!): sum_{m>M} m*base^(-m*(m+1)!) <= 2*(M+1)*base^(-(M+1)*(M+2)!)
/// (ratio test: consecutive terms shrink by far more than half).
Rational tail_bound(unsigned M, unsigned base = 10);

/// CSV with columns z1,z2,z3,h1,h2,h3 at 30 significant digits.
std::string field_samples_csv(const TruncatedField& field,
                              const std::vector<std::array<Rational, 3>>& points, int bits);

}  // namespace liouflow
