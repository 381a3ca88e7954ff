#pragma once

#include <string>
#include <vector>

#include "liouflow/rational.hpp"

namespace liouflow {

/// The classical Liouville constant sum_{k>=1} base^(-k!) truncated at order K.
struct LiouvilleSpec {
  unsigned base = 10;
  unsigned truncation_order = 5;  // K

  void validate() const;
};

/// One convergent triple (m, p, q) with its exact small divisor
/// lambda = r_K*p - q and the field amplitude a = m * p^-m.
struct ResonantMode {
  unsigned index = 0;  // m
  Integer p;
  Integer q;
  Rational lambda;
  Rational amplitude;
};

struct ChainCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ChainReport {
  bool passed = false;
  std::vector<ChainCheck> checks;
};

struct ResonantChain {
  LiouvilleSpec spec;
  Rational r_K;
  std::vector<ResonantMode> modes;

  unsigned M() const { return static_cast<unsigned>(modes.size()); }
};

/// Exact rational r_K = sum_{k=1..K} base^(-k!); 0 < r_K < 1 and the full
/// series lies within 2*base^(-(K+1)!) of it.
Rational liouville_truncation(const LiouvilleSpec& spec);

/// Upper bound on |L - r_K| for the full constant L: 2*base^(-(K+1)!).
Rational truncation_gap_bound(const LiouvilleSpec& spec);

/// Greedy chain construction: for each m = 1..M pick the smallest candidate
/// p = base^(j!), j increasing, such that q = nearest(r_K*p) gives
/// 0 < |r_K*p - q| < p^-m and (m >= 2) p^-m < |lambda_{m-1}|. Candidates stop
/// at base^(K!); failure past that throws with a diagnostic.
ResonantChain build_resonant_sequence(const LiouvilleSpec& spec, unsigned M);

/// Exact re-check of every chain inequality (list order is the chain order):
/// per mode p >= 2, q >= 1, 0 < |lambda| < p^-m, stored amplitude, nesting
/// p_m^-m < |lambda_{m-1}|, pairwise-distinct |lambda|, and the truncation
/// certificate p_m * gap < |lambda_m| / 2 plus its transfer inequalities.
/// Violations come back as a fail report, never as an exception.
ChainReport verify_chain(const std::vector<ResonantMode>& modes, const Rational& r_K,
                         const LiouvilleSpec& spec);
ChainReport verify_chain(const ResonantChain& chain);

/// Array of {m, p, q, lambda, lambda_approx, amplitude_approx}; integers and
/// exact rationals as decimal / "num/den" strings, approximations at 30
/// significant digits.
std::string chain_to_json(const ResonantChain& chain);
std::string chain_to_csv(const ResonantChain& chain);

}  // namespace liouflow
