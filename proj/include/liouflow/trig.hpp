#pragma once

#include "liouflow/rational.hpp"
#include "liouflow/real.hpp"

namespace liouflow {

/// Working-precision and truncation knobs shared by the whole pipeline.
/// K >= M_max + 1 keeps the Liouville truncation error below every divisor
/// it has to certify.
struct PrecisionPolicy {
  int bits = 512;
  unsigned max_modes = 3;           // M_max
  unsigned truncation_order = 5;    // K, default M_max + 2

  PrecisionPolicy() = default;
  PrecisionPolicy(int bits_, unsigned max_modes_)
      : bits(bits_), max_modes(max_modes_), truncation_order(max_modes_ + 2) {}

  void validate() const;
};

/// x - floor(x), computed exactly; result in [0, 1).
Rational reduce_phase(const Rational& x);

/// sin(2*pi*phase) for phase in [0, 1), within 2^(1-bits)*max(1,|result|).
/// Quadrant symmetry maps every call onto a kernel argument in [0, 1/4], so the
/// quarter-turn values 0, 1/4, 1/2, 3/4 come out exact.
Real sin_turns(const Rational& phase, int bits);

/// cos(2*pi*phase), same contract as sin_turns.
Real cos_turns(const Rational& phase, int bits);

/// Both at once (one kernel run).
void sin_cos_turns(const Rational& phase, int bits, Real& sin_out, Real& cos_out);

}  // namespace liouflow
