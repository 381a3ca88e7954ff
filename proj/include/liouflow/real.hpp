#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "liouflow/rational.hpp"

namespace liouflow {

/// Binary floating value with an explicit mantissa width (MPFR behind value
/// semantics). Every operation rounds to nearest at the result precision;
/// binary operations produce the wider of the two operand precisions.
/// Conversions from Rational are correctly rounded.
class Real {
 public:
  explicit Real(mpfr_prec_t bits) {
    mpfr_init2(x_, check(bits));
    mpfr_set_zero(x_, 1);
  }
  Real(long v, mpfr_prec_t bits) {
    mpfr_init2(x_, check(bits));
    mpfr_set_si(x_, v, MPFR_RNDN);
  }
  Real(const Rational& v, mpfr_prec_t bits) {
    mpfr_init2(x_, check(bits));
    mpfr_set_q(x_, v.raw(), MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  static Real pi(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t bits() const { return mpfr_get_prec(x_); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(bits());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) {
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }

  Real abs() const {
    Real r(bits());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
  }
  Real mul_long(long k) const {
    Real r(bits());
    mpfr_mul_si(r.x_, x_, k, MPFR_RNDN);
    return r;
  }
  Real div_long(long k) const {
    Real r(bits());
    mpfr_div_si(r.x_, x_, k, MPFR_RNDN);
    return r;
  }
  Real pow_ui(unsigned long k) const {
    Real r(bits());
    mpfr_pow_ui(r.x_, x_, k, MPFR_RNDN);
    return r;
  }
  /// this * 2^e (exact).
  Real ldexp(long e) const {
    Real r(bits());
    mpfr_mul_2si(r.x_, x_, e, MPFR_RNDN);
    return r;
  }

  int cmp(const Real& o) const { return mpfr_cmp(x_, o.x_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    int c = a.cmp(b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  int sgn() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }

  /// Same precision and same value (what "bit-for-bit" means for finite values).
  bool identical(const Real& o) const { return bits() == o.bits() && mpfr_equal_p(x_, o.x_) != 0; }

  /// Round (correctly) to a narrower/wider precision.
  Real round_to(mpfr_prec_t new_bits) const {
    Real r(new_bits);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    return r;
  }

  /// Exact conversion: every finite Real is the rational m * 2^e.
  Rational to_rational() const;

  std::string decimal(int sig_digits = 30) const;
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  static mpfr_prec_t check(mpfr_prec_t bits);
  static mpfr_prec_t wider(const Real& a, const Real& b) {
    return a.bits() > b.bits() ? a.bits() : b.bits();
  }
  mpfr_t x_;
};

}  // namespace liouflow
