#include "liouflow/trig.hpp"

#include <stdexcept>

namespace liouflow {

void PrecisionPolicy::validate() const {
  if (bits < 2) throw std::domain_error("bits must be >= 2");
  if (truncation_order < max_modes + 1)
    throw std::domain_error("truncation order K must be >= M_max + 1");
}

Rational reduce_phase(const Rational& x) { return x.frac(); }

namespace {

// sin / cos of 2*pi*u for exact u in [0, 1/4], evaluated at wp bits.
//
// The argument is halved (exactly, in the rational) until it is <= 2^-8, the
// small angle is summed by the alternating Taylor series to below 2^-(wp+2),
// and double-angle steps restore the original argument. With 32 guard bits on
// top of the caller's target the final rounding dominates the error budget.
void kernel(const Rational& u, mpfr_prec_t wp, Real& s, Real& c) {
  static const Rational threshold(1, 256);
  Rational v = u;
  int halvings = 0;
  while (v > threshold) {
    v = v / Rational(2);
    ++halvings;
  }

  Real x = Real(v, wp) * Real::pi(wp).mul_long(2);
  Real x2 = x * x;

  // joint series: term_s = x^(2i+1)/(2i+1)!, term_c = x^(2i)/(2i)!
  Real sin_acc = x;
  Real cos_acc(1, wp);
  Real term_s = x;
  Real term_c(1, wp);
  Real floor_term = Real(1, wp).ldexp(-static_cast<long>(wp) - 2);
  for (long i = 1;; ++i) {
    long k = 2 * i;
    term_c = term_c * x2;
    term_c = term_c.div_long(k * (k - 1));
    term_s = term_s * x2;
    term_s = term_s.div_long(k * (k + 1));
    if (i % 2 == 1) {
      cos_acc -= term_c;
      sin_acc -= term_s;
    } else {
      cos_acc += term_c;
      sin_acc += term_s;
    }
    if (term_s.abs() < floor_term && term_c.abs() < floor_term) break;
  }

  for (int i = 0; i < halvings; ++i) {
    Real s2 = sin_acc * sin_acc;
    sin_acc = (sin_acc * cos_acc).mul_long(2);
    cos_acc = Real(1, wp) - s2.mul_long(2);
  }
  s = sin_acc;
  c = cos_acc;
}

Real finalize(Real v, int bits) {
  Real r = v.round_to(bits);
  if (r.is_zero()) mpfr_set_zero(r.raw(), 1);  // normalize -0
  return r;
}

}  // namespace

void sin_cos_turns(const Rational& phase, int bits, Real& sin_out, Real& cos_out) {
  if (phase.sgn() < 0 || phase >= Rational(1))
    throw std::domain_error("phase must lie in [0, 1)");
  if (bits < 2) throw std::domain_error("bits must be >= 2");

  const Rational quarter(1, 4);
  Integer qd = (phase * Rational(4)).floor();  // 0..3
  unsigned long quad = qd.to_ulong();
  Rational u = phase - Rational(qd) * quarter;

  mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits) + 32;
  Real s(wp), c(wp);
  kernel(u, wp, s, c);

  switch (quad) {
    case 0:
      sin_out = finalize(s, bits);
      cos_out = finalize(c, bits);
      break;
    case 1:
      sin_out = finalize(c, bits);
      cos_out = finalize(-s, bits);
      break;
    case 2:
      sin_out = finalize(-s, bits);
      cos_out = finalize(-c, bits);
      break;
    default:
      sin_out = finalize(-c, bits);
      cos_out = finalize(s, bits);
      break;
  }
}

Real sin_turns(const Rational& phase, int bits) {
  Real s(bits), c(bits);
  sin_cos_turns(phase, bits, s, c);
  return s;
}

Real cos_turns(const Rational& phase, int bits) {
  Real s(bits), c(bits);
  sin_cos_turns(phase, bits, s, c);
  return c;
}

}  // namespace liouflow
