#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mfvar/arith_core.hpp"

namespace mfvar {

// Statistics bundle of a generalized divisor function.
struct DivisorParams {
  cplx alpha = 1.0;
  double beta = 0.0;
  double kappa = 2.0;
  double A1 = 5.5;
  double A2 = 1.0;

  // (kappa+1)^2 + kappa - Re(alpha) - beta + 4
  double kappa_alpha_beta() const { return (kappa + 1) * (kappa + 1) + kappa - alpha.real() - beta + 4.0; }

  bool consistent() const { return std::abs(alpha) <= kappa && beta <= (kappa + 1) * (kappa + 1); }

  bool A1_large_enough() const { return A1 > std::max(kappa_alpha_beta(), kappa + 2.0); }
};

inline std::string format_alpha(cplx a) {
  std::ostringstream os;
  os.precision(15);
  os << a.real() << "," << a.imag();
  return os.str();
}

inline MultiplicativeSpec d_alpha_spec(cplx alpha) {
  return {"d_alpha:" + format_alpha(alpha),
          [alpha](std::uint64_t, int k) { return complex_binomial(alpha + static_cast<double>(k) - 1.0, k); }};
}

// d_alpha with alpha = 1 + 1/R.
inline MultiplicativeSpec d_alpha_near_one_spec(double R, double C = 10.0) {
  require(std::abs(R) >= C, "d_alpha_near_one_spec: |R| must be at least C");
  return d_alpha_spec(1.0 + 1.0 / R);
}

inline MultiplicativeSpec two_squares_spec() {
  return {"two_squares", [](std::uint64_t p, int k) -> cplx {
            if (p == 2 || p % 4 == 1) return 1.0;
            return (k % 2 == 0) ? 1.0 : 0.0;
          }};
}

// Indicator of n = 1.
inline MultiplicativeSpec d0_spec() {
  return {"d0", [](std::uint64_t, int) { return cplx(0.0); }};
}

inline MultiplicativeSpec mobius_spec() {
  return {"mu", [](std::uint64_t, int k) { return k == 1 ? cplx(-1.0) : cplx(0.0); }};
}

enum class CombineOp { product, power };

inline MultiplicativeSpec combine_specs(const std::vector<MultiplicativeSpec>& specs) {
  require(!specs.empty(), "combine_specs: need at least one spec");
  std::string name;
  for (std::size_t i = 0; i < specs.size(); ++i) name += (i ? "*" : "") + specs[i].name;
  return {name, [specs](std::uint64_t p, int k) {
            cplx r = 1.0;
            for (const auto& s : specs) r *= s.value_at(p, k);
            return r;
          }};
}

inline MultiplicativeSpec combine_specs(const MultiplicativeSpec& spec, int exponent) {
  require(exponent >= 1, "combine_specs: power exponent must be a positive integer");
  return {spec.name + "^" + std::to_string(exponent), [spec, exponent](std::uint64_t p, int k) {
            const cplx v = spec.value_at(p, k);
            cplx r = 1.0;
            for (int i = 0; i < exponent; ++i) r *= v;
            return r;
          }};
}

inline MultiplicativeSpec combine_specs(CombineOp op, const std::vector<MultiplicativeSpec>& specs, int exponent = 1) {
  if (op == CombineOp::product) return combine_specs(specs);
  require(specs.size() == 1, "combine_specs: power takes exactly one spec");
  return combine_specs(specs.front(), exponent);
}

// |f|^2 as a spec.
inline MultiplicativeSpec abs_square_spec(const MultiplicativeSpec& spec) {
  return {"|" + spec.name + "|^2", [spec](std::uint64_t p, int k) { return cplx(std::norm(spec.value_at(p, k))); }};
}

// (sum_{p<=x} f(p) log p) / x
inline cplx estimate_alpha(const SievedFunction& f, std::uint64_t x) {
  require(x >= 2, "estimate_alpha: x must be >= 2");
  require(x <= f.limit && f.table, "estimate_alpha: x beyond sieved range");
  CompensatedComplex s;
  for (std::uint32_t p : f.table->primes) {
    if (p > x) break;
    s += f.values[p] * std::log(static_cast<double>(p));
  }
  return s.value() / static_cast<double>(x);
}

// (sum_{p<=x} |f(p)-1|^2 log p) / x
inline double estimate_beta(const SievedFunction& f, std::uint64_t x) {
  require(x >= 2, "estimate_beta: x must be >= 2");
  require(x <= f.limit && f.table, "estimate_beta: x beyond sieved range");
  CompensatedReal s;
  for (std::uint32_t p : f.table->primes) {
    if (p > x) break;
    s += std::norm(f.values[p] - 1.0) * std::log(static_cast<double>(p));
  }
  return s.value() / static_cast<double>(x);
}

struct KappaReport {
  double max_ratio = 0.0;
  std::vector<std::uint64_t> violators;
  bool holds() const { return violators.empty(); }
};

inline KappaReport check_kappa_bound(const SievedFunction& f, double kappa, double rel_tol = 1e-12) {
  require(f.table != nullptr, "check_kappa_bound: function lacks a factor table");
  const auto dk = sieve_multiplicative(d_alpha_spec(kappa), f.table, f.limit);
  KappaReport rep;
  for (std::uint64_t n = 1; n <= f.limit; ++n) {
    const double bound = dk.values[n].real();
    const double ratio = std::abs(f.values[n]) / bound;
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    if (ratio > 1.0 + rel_tol) rep.violators.push_back(n);
  }
  return rep;
}

// A named spec together with its nominal statistics.
struct RegisteredSpec {
  MultiplicativeSpec spec;
  DivisorParams params;
};

inline cplx parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw PreconditionError("cannot parse complex value '" + text + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw PreconditionError("cannot parse complex value '" + text + "'");
  }
  is >> std::ws;
  if (!is.eof()) throw PreconditionError("trailing characters in complex value '" + text + "'");
  return {re, im};
}

inline DivisorParams d_alpha_params(cplx alpha) {
  DivisorParams dp;
  dp.alpha = alpha;
  dp.beta = std::norm(alpha - 1.0);
  dp.kappa = std::max(std::abs(alpha), 2.0);
  return dp;
}

// Names: "d_alpha:RE,IM", "d<k>" (integer k >= 0), "two_squares", "d2*d3", "d2^2",
// and any '*'-separated product of those.
inline RegisteredSpec parse_spec(const std::string& name) {
  if (auto star = name.find('*'); star != std::string::npos && name.rfind("d_alpha:", 0) != 0) {
    const RegisteredSpec a = parse_spec(name.substr(0, star));
    const RegisteredSpec b = parse_spec(name.substr(star + 1));
    RegisteredSpec r;
    r.spec = combine_specs({a.spec, b.spec});
    r.spec.name = name;
    r.params = d_alpha_params(a.params.alpha * b.params.alpha);
    r.params.kappa = std::max(a.params.kappa * b.params.kappa, std::abs(r.params.alpha));
    return r;
  }
  if (auto caret = name.find('^'); caret != std::string::npos) {
    const RegisteredSpec base = parse_spec(name.substr(0, caret));
    const int e = std::stoi(name.substr(caret + 1));
    RegisteredSpec r;
    r.spec = combine_specs(base.spec, e);
    r.spec.name = name;
    r.params = d_alpha_params(std::pow(base.params.alpha, e));
    r.params.kappa = std::max(std::pow(base.params.kappa, e), std::abs(r.params.alpha));
    return r;
  }
  if (name.rfind("d_alpha:", 0) == 0) {
    const cplx alpha = parse_complex(name.substr(8));
    return {d_alpha_spec(alpha), d_alpha_params(alpha)};
  }
  if (name == "two_squares") {
    DivisorParams dp;
    dp.alpha = 0.5;
    dp.beta = 0.5;
    dp.kappa = 2.0;
    return {two_squares_spec(), dp};
  }
  if (name == "d0") {
    return {d0_spec(), d_alpha_params(0.0)};
  }
  if (name.size() >= 2 && name[0] == 'd' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const double k = std::stod(name.substr(1));
    RegisteredSpec r{d_alpha_spec(k), d_alpha_params(k)};
    r.spec.name = name;
    return r;
  }
  throw PreconditionError("unknown spec name '" + name + "'");
}

}  // namespace mfvar
