#include "liouflow/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace liouflow {

void Integer::throw_parse(const std::string& s) {
  throw std::invalid_argument("not a decimal integer: '" + s + "'");
}

std::string Integer::str() const {
  std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
  mpz_get_str(buf.data(), 10, z_);
  return std::string(buf.data());
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_init(q_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(q_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(q_);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.sgn() == 0) throw std::domain_error("rational with zero denominator");
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  if (mpz_sgn(mpq_denref(q_)) < 0) {
    mpz_neg(mpq_numref(q_), mpq_numref(q_));
    mpz_neg(mpq_denref(q_), mpq_denref(q_));
  }
  mpq_canonicalize(q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e > 0 ? *this : reciprocal();
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
  // powers of a canonical fraction stay canonical
  return r;
}

Rational Rational::power(unsigned long base, long exp) {
  if (base == 0) throw std::domain_error("power of base 0");
  Rational r;
  if (exp >= 0) {
    mpz_ui_pow_ui(mpq_numref(r.q_), base, static_cast<unsigned long>(exp));
  } else {
    mpz_ui_pow_ui(mpq_denref(r.q_), base, static_cast<unsigned long>(-exp));
  }
  return r;
}

Integer Rational::floor() const {
  Integer f;
  mpz_fdiv_q(f.raw(), mpq_numref(q_), mpq_denref(q_));
  return f;
}

Rational Rational::frac() const {
  Rational r;
  mpz_fdiv_r(mpq_numref(r.q_), mpq_numref(q_), mpq_denref(q_));
  mpz_set(mpq_denref(r.q_), mpq_denref(q_));
  mpq_canonicalize(r.q_);
  return r;
}

Integer Rational::round_nearest() const {
  Integer f;
  mpz_t rem, twice;
  mpz_init(rem);
  mpz_init(twice);
  mpz_fdiv_qr(f.raw(), rem, mpq_numref(q_), mpq_denref(q_));
  mpz_mul_2exp(twice, rem, 1);  // 2*(x - floor(x))*den vs den
  int c = mpz_cmp(twice, mpq_denref(q_));
  bool up;
  if (c > 0) {
    up = true;
  } else if (c < 0) {
    up = false;
  } else {
    up = mpz_odd_p(f.raw()) != 0;  // tie: to even
  }
  if (up) mpz_add_ui(f.raw(), f.raw(), 1);
  mpz_clear(rem);
  mpz_clear(twice);
  return f;
}

std::string Rational::num_den_str() const { return num().str() + "/" + den().str(); }

namespace {

[[noreturn]] void parse_fail(const std::string& s) {
  throw std::invalid_argument("not a rational literal: '" + s + "'");
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  // strip surrounding whitespace
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) parse_fail(text);
  const std::string s = text.substr(b, e - b + 1);

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den.sgn() == 0) parse_fail(text);
    return Rational(num, den);
  }

  // [+-]?digits[.digits]?([eE][+-]?digits)?  -- exact decimal
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --scale;
      any = true;
    }
  }
  if (!any) parse_fail(text);
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    if (i >= s.size()) parse_fail(text);
    long ev = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ev = ev * 10 + (s[i++] - '0');
      if (ev > 1000000) parse_fail(text);
    }
    scale += eneg ? -ev : ev;
  }
  if (i != s.size()) parse_fail(text);

  Integer mant(digits.empty() ? "0" : digits);
  Rational r = Rational(neg ? -mant : mant) * Rational::power(10, scale);
  return r;
}

}  // namespace liouflow
