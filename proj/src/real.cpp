#include "liouflow/real.hpp"

#include <stdexcept>
#include <vector>

namespace liouflow {

mpfr_prec_t Real::check(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN) throw std::domain_error("precision must be positive");
  return bits;
}

Rational Real::to_rational() const {
  if (!mpfr_number_p(x_)) throw std::domain_error("no rational value for non-finite Real");
  if (mpfr_zero_p(x_)) return Rational(0);
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.raw(), x_);
  Rational r(m);
  if (e >= 0) {
    Integer scale;
    mpz_mul_2exp(scale.raw(), Integer(1).raw(), static_cast<mp_bitcnt_t>(e));
    return r * Rational(scale);
  }
  Integer scale;
  mpz_mul_2exp(scale.raw(), Integer(1).raw(), static_cast<mp_bitcnt_t>(-e));
  return r / Rational(scale);
}

std::string Real::decimal(int sig_digits) const {
  if (sig_digits < 1) throw std::domain_error("need at least one significant digit");
  std::vector<char> buf(static_cast<size_t>(sig_digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", sig_digits - 1, x_);
  return std::string(buf.data());
}

std::string Rational::decimal(int sig_digits) const {
  // enough bits that the printed digits are exact for the rational
  mpfr_prec_t p = static_cast<mpfr_prec_t>(sig_digits) * 4 + 64;
  return Real(*this, p).decimal(sig_digits);
}

}  // namespace liouflow
