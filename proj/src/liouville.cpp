#include "liouflow/liouville.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace liouflow {

void LiouvilleSpec::validate() const {
  if (base < 2) throw std::domain_error("base must be >= 2");
  if (truncation_order < 1) throw std::domain_error("truncation order K must be >= 1");
  if (truncation_order > 8)
    throw std::domain_error("truncation order K > 8 is impractical (denominator base^(K!))");
}

namespace {

unsigned long factorial_ul(unsigned n) {
  Integer f = Integer::factorial(n);
  if (!f.fits_ulong()) throw std::domain_error("factorial exponent overflow");
  return f.to_ulong();
}

}  // namespace

Rational liouville_truncation(const LiouvilleSpec& spec) {
  spec.validate();
  Rational r(0);
  for (unsigned k = 1; k <= spec.truncation_order; ++k)
    r += Rational::power(spec.base, -static_cast<long>(factorial_ul(k)));
  return r;
}

Rational truncation_gap_bound(const LiouvilleSpec& spec) {
  spec.validate();
  return Rational(2) * Rational::power(spec.base, -static_cast<long>(factorial_ul(spec.truncation_order + 1)));
}

ResonantChain build_resonant_sequence(const LiouvilleSpec& spec, unsigned M) {
  spec.validate();
  if (M < 1) throw std::invalid_argument("empty chain requested (M must be >= 1)");
  if (M > spec.truncation_order - 1)
    throw std::invalid_argument("chain length M must be <= K - 1 (truncation certificate unsatisfiable)");

  ResonantChain chain;
  chain.spec = spec;
  chain.r_K = liouville_truncation(spec);

  for (unsigned m = 1; m <= M; ++m) {
    bool found = false;
    for (unsigned j = 1; j <= spec.truncation_order; ++j) {
      Integer p = Integer::ui_pow(spec.base, factorial_ul(j));
      Integer q = (chain.r_K * Rational(p)).round_nearest();
      if (q < Integer(1)) continue;
      Rational lambda = chain.r_K * Rational(p) - Rational(q);
      Rational abs_lambda = lambda.abs();
      if (abs_lambda.is_zero()) continue;
      Rational p_pow_neg_m = Rational(Integer(1), Integer::pow(p, m));
      if (!(abs_lambda < p_pow_neg_m)) continue;
      if (m >= 2 && !(p_pow_neg_m < chain.modes.back().lambda.abs())) continue;

      ResonantMode mode;
      mode.index = m;
      mode.p = p;
      mode.q = q;
      mode.lambda = lambda;
      mode.amplitude = Rational(m) * p_pow_neg_m;
      chain.modes.push_back(std::move(mode));
      found = true;
      break;
    }
    if (!found) {
      std::ostringstream os;
      os << "no candidate p = " << spec.base << "^(j!), j <= " << spec.truncation_order
         << ", satisfies the chain inequalities at m = " << m
         << " (truncation order K = " << spec.truncation_order << " too small)";
      throw std::runtime_error(os.str());
    }
  }
  return chain;
}

namespace {

void push(ChainReport& rep, std::string name, bool ok, std::string detail = {}) {
  rep.checks.push_back({std::move(name), ok, std::move(detail)});
  if (!ok) rep.passed = false;
}

std::string mode_tag(unsigned m) { return "mode " + std::to_string(m); }

}  // namespace

ChainReport verify_chain(const std::vector<ResonantMode>& modes, const Rational& r_K,
                         const LiouvilleSpec& spec) {
  ChainReport rep;
  rep.passed = true;
  if (modes.empty()) {
    push(rep, "chain nonempty", false, "no modes");
    return rep;
  }

  bool ordered = true;
  for (size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].index != i + 1) ordered = false;
  }
  push(rep, "indices consecutive from 1", ordered, ordered ? "" : "modes out of order");

  const Rational gap = truncation_gap_bound(spec);
  const Rational one(1);

  for (size_t i = 0; i < modes.size(); ++i) {
    const ResonantMode& md = modes[i];
    const std::string tag = mode_tag(md.index);
    push(rep, tag + ": p >= 2", md.p >= Integer(2));
    push(rep, tag + ": q >= 1", md.q >= Integer(1));
    push(rep, tag + ": lambda = r_K*p - q", md.lambda == r_K * Rational(md.p) - Rational(md.q));

    Rational abs_lambda = md.lambda.abs();
    push(rep, tag + ": 0 < |lambda|", !abs_lambda.is_zero(), abs_lambda.is_zero() ? "divisor vanishes" : "");

    Rational p_m = Rational(Integer::pow(md.p, md.index));  // p^m
    push(rep, tag + ": |lambda| < p^-m", abs_lambda * p_m < one);
    push(rep, tag + ": amplitude = m * p^-m", md.amplitude == Rational(md.index) / p_m);

    if (i > 0) {
      const ResonantMode& prev = modes[i - 1];
      // nesting against the predecessor in list order
      push(rep, tag + ": p^-m < |lambda| of predecessor",
           one < prev.lambda.abs() * p_m);
    }

    if (!abs_lambda.is_zero()) {
      Rational shift = Rational(md.p) * gap;  // bound on |lambda(L) - lambda(r_K)|
      push(rep, tag + ": certificate p*gap < |lambda|/2", shift * Rational(2) < abs_lambda);
      push(rep, tag + ": certificate transfer |lambda| + p*gap < p^-m",
           (abs_lambda + shift) * p_m < one);
      if (i > 0) {
        const ResonantMode& prev = modes[i - 1];
        Rational prev_shift = Rational(prev.p) * gap;
        push(rep, tag + ": certificate transfer p^-m < |lambda| - p*gap of predecessor",
             one < (prev.lambda.abs() - prev_shift) * p_m);
      }
    }
  }

  bool distinct = true;
  for (size_t i = 0; i < modes.size() && distinct; ++i)
    for (size_t j = i + 1; j < modes.size(); ++j)
      if (modes[i].lambda.abs() == modes[j].lambda.abs()) {
        distinct = false;
        break;
      }
  push(rep, "|lambda| pairwise distinct", distinct);

  return rep;
}

ChainReport verify_chain(const ResonantChain& chain) {
  return verify_chain(chain.modes, chain.r_K, chain.spec);
}

std::string chain_to_json(const ResonantChain& chain) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ResonantMode& md : chain.modes) {
    nlohmann::json entry;
    entry["m"] = md.index;
    entry["p"] = md.p.str();
    entry["q"] = md.q.str();
    entry["lambda"] = md.lambda.num_den_str();
    entry["lambda_approx"] = md.lambda.decimal(30);
    entry["amplitude_approx"] = md.amplitude.decimal(30);
    arr.push_back(entry);
  }
  return arr.dump(2) + "\n";
}

std::string chain_to_csv(const ResonantChain& chain) {
  std::ostringstream os;
  os << "m,p,q,lambda,lambda_approx,amplitude_approx\n";
  for (const ResonantMode& md : chain.modes) {
    os << md.index << ',' << md.p.str() << ',' << md.q.str() << ',' << md.lambda.num_den_str()
       << ',' << md.lambda.decimal(30) << ',' << md.amplitude.decimal(30) << '\n';
  }
  return os.str();
}

}  // namespace liouflow
