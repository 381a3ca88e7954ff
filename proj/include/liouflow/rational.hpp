#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include <gmp.h>

namespace liouflow {

/// Arbitrary-size signed integer (GMP mpz behind value semantics).
class Integer {
 public:
  Integer() { mpz_init(z_); }
  Integer(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  explicit Integer(const std::string& decimal) {
    if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
      mpz_clear(z_);
      throw_parse(decimal);
    }
  }
  Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
  Integer(Integer&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Integer() { mpz_clear(z_); }

  static Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.z_, base.z_, exp);
    return r;
  }
  static Integer ui_pow(unsigned long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.z_, base, exp);
    return r;
  }
  static Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.z_, n);
    return r;
  }

  friend Integer operator+(const Integer& a, const Integer& b) {
    Integer r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    Integer r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    Integer r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  Integer operator-() const {
    Integer r;
    mpz_neg(r.z_, z_);
    return r;
  }
  Integer abs() const {
    Integer r;
    mpz_abs(r.z_, z_);
    return r;
  }

  int cmp(const Integer& o) const { return mpz_cmp(z_, o.z_); }
  friend bool operator==(const Integer& a, const Integer& b) { return a.cmp(b) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = a.cmp(b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sgn() const { return mpz_sgn(z_); }
  bool fits_ulong() const { return mpz_fits_ulong_p(z_) != 0; }
  unsigned long to_ulong() const { return mpz_get_ui(z_); }
  /// Bits in the binary representation of |*this| (0 has 1 per GMP convention).
  size_t bit_length() const { return mpz_sizeinbase(z_, 2); }

  std::string str() const;

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  [[noreturn]] static void throw_parse(const std::string& s);
  mpz_t z_;
};

/// Exact rational number (GMP mpq). Always canonical: den > 0, gcd(|num|, den) = 1.
/// No operation ever rounds.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const Integer& num) : Rational(num, Integer(1)) {}
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Parses "num/den", integer, or decimal/scientific literals ("0.11", "1e-4",
  /// "2.5e13"). Decimal literals are exact: d.dddEk = ddddd * 10^(k-digits).
  static Rational parse(const std::string& text);

  /// base^exp as an exact rational; exp may be negative.
  static Rational power(unsigned long base, long exp);

  Integer num() const {
    Integer n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  Integer den() const {
    Integer d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  Rational reciprocal() const;
  /// this^e, e may be negative (requires nonzero value then).
  Rational pow_int(long e) const;

  int cmp(const Rational& o) const { return mpq_cmp(q_, o.q_); }
  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = a.cmp(b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sgn() const { return mpq_sgn(q_); }
  bool is_zero() const { return sgn() == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Integer floor() const;
  /// x - floor(x), in [0, 1).
  Rational frac() const;
  /// Nearest integer, ties to even.
  Integer round_nearest() const;

  /// "num/den" (always includes the denominator).
  std::string num_den_str() const;
  /// Decimal approximation with the given significant digits (scientific form).
  std::string decimal(int sig_digits = 30) const;
  double to_double() const { return mpq_get_d(q_); }

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

}  // namespace liouflow
