#include "liouflow/field.hpp"

#include <sstream>
#include <stdexcept>

#include "liouflow/trig.hpp"

namespace liouflow {

TruncatedField make_field(const ResonantChain& chain) {
  if (!chain.modes.empty()) {
    ChainReport rep = verify_chain(chain);
    if (!rep.passed) {
      for (const ChainCheck& c : rep.checks)
        if (!c.passed) throw std::invalid_argument("chain fails verification: " + c.name);
    }
  }
  return TruncatedField{chain.spec, chain.r_K, chain.modes};
}

std::array<Real, 3> eval_field(const TruncatedField& field, const std::array<Rational, 3>& z,
                               int bits) {
  Real third(bits);
  for (const ResonantMode& md : field.modes) {
    Rational phase = reduce_phase(z[0] * Rational(md.p) - z[1] * Rational(md.q));
    third += Real(md.amplitude, bits) * cos_turns(phase, bits);
  }
  return {Real(field.r_K, bits), Real(1, bits), third};
}

SmoothnessBound smoothness_bound(const TruncatedField& field, int k, int bits) {
  if (k < 0) throw std::domain_error("derivative order k must be >= 0");

  Rational series(0);
  for (const ResonantMode& md : field.modes) {
    const Integer& larger = md.p >= md.q ? md.p : md.q;
    series += Rational(static_cast<long>(md.index)) *
              Rational(Integer::pow(larger, static_cast<unsigned long>(k))) /
              Rational(Integer::pow(md.p, md.index));
  }

  Rational comp(0);
  for (const ResonantMode& md : field.modes) {
    if (static_cast<int>(md.index) < k) continue;
    comp += Rational(static_cast<long>(md.index)) *
            Rational::power(2, -static_cast<long>(md.index));
  }
  comp *= Rational::power(2, k) * (field.r_K + Rational(1)).pow_int(k);

  mpfr_prec_t wp = static_cast<mpfr_prec_t>(bits) + 32;
  Real two_pi_k = Real::pi(wp).mul_long(2).pow_ui(static_cast<unsigned long>(k));
  Real majorant = (Real(series, wp) * two_pi_k).round_to(bits);
  Real comparison = Real(comp, wp).round_to(bits);
  return SmoothnessBound(k, std::move(series), std::move(comp), std::move(majorant),
                         std::move(comparison));
}

Rational tail_bound(unsigned M, unsigned base) {
  if (base < 2) throw std::domain_error("base must be >= 2");
  Integer exp = Integer(static_cast<long>(M) + 1) * Integer::factorial(M + 2);
  if (!exp.fits_ulong()) throw std::domain_error("tail exponent overflow");
  return Rational(2 * (static_cast<long>(M) + 1)) *
         Rational::power(base, -static_cast<long>(exp.to_ulong()));
}

std::string field_samples_csv(const TruncatedField& field,
                              const std::vector<std::array<Rational, 3>>& points, int bits) {
  std::ostringstream os;
  os << "z1,z2,z3,h1,h2,h3\n";
  for (const std::array<Rational, 3>& z : points) {
    std::array<Real, 3> h = eval_field(field, z, bits);
    os << z[0].decimal(30) << ',' << z[1].decimal(30) << ',' << z[2].decimal(30) << ','
       << h[0].decimal(30) << ',' << h[1].decimal(30) << ',' << h[2].decimal(30) << '\n';
  }
  return os.str();
}

}  // namespace liouflow
