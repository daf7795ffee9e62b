#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfvar/arith_core.hpp"
#include "mfvar/gamma.hpp"
#include "mfvar/ramanujan.hpp"
#include "mfvar/series.hpp"
#include "mfvar/stieltjes.hpp"

namespace mfvar {

inline constexpr int kMaxZetaOrder = 16;

// Taylor expansion of (z-1) zeta(z) at z = 1.
inline TaylorSeries zeta_completed_series(int T) {
  if (T < 0 || T > kMaxZetaOrder) {
    throw PreconditionError("zeta_completed_series: order must lie in [0, 16]");
  }
  TaylorSeries s(T, 1.0);
  double fact = 1.0;  // (m-1)!
  for (int m = 1; m <= T; ++m) {
    if (m > 1) fact *= static_cast<double>(m - 1);
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    s[m] = sign * kStieltjes[m - 1] / fact;
  }
  return s;
}

namespace detail {

// sum_k f(p^k) p^{-kz} as a series in w = z - 1, including k = 0.
inline TaylorSeries prime_power_series(std::uint64_t p, const MultiplicativeSpec& spec, int T) {
  const double pd = static_cast<double>(p);
  const double L = std::log(pd);
  TaylorSeries s(T, 1.0);
  double pk = 1.0;
  for (int k = 1; k <= 400; ++k) {
    pk /= pd;
    const cplx v = spec.value_at(p, k);
    if (v != cplx(0.0)) s += TaylorSeries::exp_linear(T, -static_cast<double>(k) * L) * (v * pk);
    // Largest Taylor weight of the k-th term is about p^{-k} (1 + k log p)^T.
    if (pk * std::pow(1.0 + k * L, T) * (1.0 + std::abs(v)) < 1e-18) break;
  }
  return s;
}

inline TaylorSeries local_factor_unchecked(std::uint64_t p, const MultiplicativeSpec& spec, cplx alpha, int T) {
  const double pd = static_cast<double>(p);
  TaylorSeries euler = TaylorSeries(T, 1.0) - TaylorSeries::exp_linear(T, -std::log(pd)) * cplx(1.0 / pd);
  TaylorSeries out = detail::prime_power_series(p, spec, T) * euler.pow(alpha);
  if (std::abs(out[0]) < 1e-14) {
    throw DegenerateError("local factor vanishes at z = 1 for p = " + std::to_string(p));
  }
  return out;
}

}  // namespace detail

// (sum_k f(p^k) p^{-kz}) (1 - p^{-z})^alpha around z = 1.
inline TaylorSeries local_factor_series(std::uint64_t p, const MultiplicativeSpec& spec, cplx alpha, int T) {
  require(is_prime_trial(p), "local_factor_series: p must be prime");
  return detail::local_factor_unchecked(p, spec, alpha, T);
}

namespace detail {

inline std::vector<std::uint32_t> primes_up_to(std::uint64_t N) {
  return build_factor_table(std::max<std::uint64_t>(N, 2)).primes;
}

// sum_{p<=N} log L_p as a series. Per-coefficient compensated sums; the branch
// chosen for each log does not matter because only exp of the total is used.
inline TaylorSeries log_euler_product(const MultiplicativeSpec& spec, cplx alpha, std::uint64_t N, int T,
                                      const std::vector<std::uint32_t>& primes) {
  std::vector<CompensatedComplex> acc(static_cast<std::size_t>(T) + 1);
  for (std::uint32_t p : primes) {
    if (p > N) break;
    const TaylorSeries lg = local_factor_unchecked(p, spec, alpha, T).log();
    for (int m = 0; m <= T; ++m) acc[m] += lg[m];
  }
  TaylorSeries out(T);
  for (int m = 0; m <= T; ++m) out[m] = acc[m].value();
  return out;
}

}  // namespace detail

struct SDCoefficients {
  std::string spec;
  cplx alpha = 1.0;
  std::uint64_t N = 0;
  int J = 0;
  std::uint64_t q = 1;
  std::vector<cplx> c;
  std::vector<cplx> lambda;
};

// The full product series prod_{p<=N} L_p(z) ((z-1) zeta(z))^alpha / z at order T.
inline TaylorSeries sd_series(const MultiplicativeSpec& spec, cplx alpha, std::uint64_t N, int T) {
  const auto primes = detail::primes_up_to(N);
  TaylorSeries prod = detail::log_euler_product(spec, alpha, N, T, primes).exp();
  return prod * zeta_completed_series(T).pow(alpha) * TaylorSeries::reciprocal_z(T);
}

inline SDCoefficients c_coeffs(const MultiplicativeSpec& spec, cplx alpha, std::uint64_t N, int J) {
  require(N >= 100, "c_coeffs: N must be >= 100");
  require(J >= 0 && J + 5 <= kMaxZetaOrder, "c_coeffs: J must lie in [0, 11]");
  const int T = J + 5;
  const TaylorSeries s = sd_series(spec, alpha, N, T);
  SDCoefficients out;
  out.spec = spec.name;
  out.alpha = alpha;
  out.N = N;
  out.J = J;
  for (int j = 0; j <= J; ++j) {
    out.c.push_back(s[j]);
    out.lambda.push_back(s[j] * recip_gamma(alpha - static_cast<double>(j)));
  }
  return out;
}

// c_0 = prod_{p<=N} (sum_k f(p^k)/p^k)(1 - 1/p)^alpha
inline cplx c0_constant(const MultiplicativeSpec& spec, cplx alpha, std::uint64_t N) {
  require(N >= 2, "c0_constant: N must be >= 2");
  const auto primes = detail::primes_up_to(N);
  return std::exp(detail::log_euler_product(spec, alpha, N, 0, primes)[0]);
}

// H_q(z) = prod_{p|q} sum_k f(p^k) p^{-kz}
inline TaylorSeries H_q_series(std::uint64_t q, const MultiplicativeSpec& spec, int T) {
  require(q >= 1 && is_squarefree(q), "H_q_series: q must be squarefree");
  TaylorSeries h(T, 1.0);
  for (std::uint64_t p : detail::prime_factors(q)) h *= detail::prime_power_series(p, spec, T);
  return h;
}

// lambda_j = (1/Gamma(alpha-j)) sum_{l+h=j} [H_q^{-1}]_h c_l
inline SDCoefficients lambda_coeffs(const MultiplicativeSpec& spec, cplx alpha, std::uint64_t q, std::uint64_t N, int J) {
  SDCoefficients out = c_coeffs(spec, alpha, N, J);
  out.q = q;
  const TaylorSeries h = H_q_series(q, spec, J);
  if (std::abs(h[0]) < 1e-14) throw DegenerateError("lambda_coeffs: H_q(1) vanishes");
  const TaylorSeries hinv = h.inverse();
  for (int j = 0; j <= J; ++j) {
    cplx s = 0.0;
    for (int l = 0; l <= j; ++l) s += hinv[j - l] * out.c[l];
    out.lambda[j] = recip_gamma(alpha - static_cast<double>(j)) * s;
  }
  return out;
}

// x sum_j c_j (log x)^{alpha-j-1} / Gamma(alpha-j)
inline cplx mean_value_prediction(const SDCoefficients& co, double x) {
  require(x >= 4, "mean_value_prediction: x must be >= 4");
  const double lx = std::log(x);
  cplx s = 0.0;
  for (std::size_t j = 0; j < co.c.size(); ++j) {
    s += co.c[j] * real_pow(lx, co.alpha - static_cast<double>(j) - 1.0) * recip_gamma(co.alpha - static_cast<double>(j));
  }
  return x * s;
}

inline cplx mean_value_prediction(const MultiplicativeSpec& spec, cplx alpha, double x, std::uint64_t N, int J) {
  require(x >= 4 && x <= static_cast<double>(N), "mean_value_prediction: need 4 <= x <= N");
  return mean_value_prediction(c_coeffs(spec, alpha, N, J), x);
}

// x (log x)^{alpha-1} sum_j lambda_j (log x)^{-j}
inline cplx coprime_mean_value_prediction(const SDCoefficients& co, double x) {
  require(x >= 4, "coprime_mean_value_prediction: x must be >= 4");
  const double lx = std::log(x);
  cplx s = 0.0;
  for (std::size_t j = 0; j < co.lambda.size(); ++j) s += co.lambda[j] * std::pow(lx, -static_cast<double>(j));
  return x * real_pow(lx, co.alpha - 1.0) * s;
}

inline cplx coprime_mean_value_prediction(const MultiplicativeSpec& spec, cplx alpha, std::uint64_t q, double x,
                                          std::uint64_t N, int J) {
  require(x >= 4 && x <= static_cast<double>(N), "coprime_mean_value_prediction: need 4 <= x <= N");
  return coprime_mean_value_prediction(lambda_coeffs(spec, alpha, q, N, J), x);
}

// sum_{n<=x, (n,q)=1} f(n) by direct summation.
inline cplx direct_mean_value(const SievedFunction& f, std::uint64_t x, std::uint64_t q = 1) {
  require(x <= f.limit, "direct_mean_value: x beyond sieved range");
  CompensatedComplex s;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (q == 1 || gcd_u64(n, q) == 1) s += f.values[n];
  }
  return s.value();
}

// prod_{p|s} (-p + (p-1) sum_nu f(p^nu) p^{-nu sigma})
inline cplx theta_sigma(const MultiplicativeSpec& spec, std::uint64_t s, double sigma) {
  require(s >= 1 && is_squarefree(s), "theta_sigma: s must be squarefree");
  require(sigma >= 1.0, "theta_sigma: sigma must be >= 1");
  cplx out = 1.0;
  for (std::uint64_t p : detail::prime_factors(s)) {
    const double pd = static_cast<double>(p);
    cplx local = 1.0;
    double pk = 1.0;
    for (int nu = 1; nu <= 2000; ++nu) {
      pk *= std::pow(pd, -sigma);
      const cplx term = spec.value_at(p, nu) * pk;
      local += term;
      if (pk * (1.0 + nu) * (1.0 + std::abs(spec.value_at(p, nu))) < 1e-17) break;
    }
    out *= -pd + (pd - 1.0) * local;
  }
  return out;
}

// sum over s-supported b of f(b) c_s(b) b^{-sigma}, cut where b^{-sigma} s < 1e-12 / 64.
inline cplx theta_sigma_direct(const MultiplicativeSpec& spec, std::uint64_t s, double sigma) {
  require(s >= 1 && is_squarefree(s), "theta_sigma_direct: s must be squarefree");
  require(sigma >= 1.0, "theta_sigma_direct: sigma must be >= 1");
  const double cut = std::pow(static_cast<double>(s) * 64e12, 1.0 / sigma);
  const std::uint64_t X = cut >= 1e18 ? std::uint64_t{1'000'000'000'000'000'000ULL} : static_cast<std::uint64_t>(cut);
  CompensatedComplex acc;
  detail::for_each_supported(detail::prime_factors(s), X, [&](std::uint64_t b) {
    acc += spec(b) * static_cast<double>(ramanujan_sum(s, b)) * std::pow(static_cast<double>(b), -sigma);
  });
  return acc.value();
}

// prod_{p|s} (1 - p + p (1 - p^{-sigma})^{-kappa})
inline double theta_tilde_sigma(std::uint64_t s, double kappa, double sigma) {
  require(s >= 1 && is_squarefree(s), "theta_tilde_sigma: s must be squarefree");
  require(sigma >= 1.0, "theta_tilde_sigma: sigma must be >= 1");
  double out = 1.0;
  for (std::uint64_t p : detail::prime_factors(s)) {
    const double pd = static_cast<double>(p);
    out *= 1.0 - pd + pd * std::pow(1.0 - std::pow(pd, -sigma), -kappa);
  }
  return out;
}

// 1 - f(p) (1 - log p / log N)^{alpha - 1}
inline cplx theta_N_alpha(const MultiplicativeSpec& spec, cplx alpha, std::uint64_t p, double N) {
  require(static_cast<double>(p) < N, "theta_N_alpha: need p < N");
  const double base = 1.0 - std::log(static_cast<double>(p)) / std::log(N);
  return 1.0 - spec.value_at(p, 1) * real_pow(base, alpha - 1.0);
}

struct MertensThetaReport {
  double lhs = 0.0;
  double comparison = 0.0;  // beta delta / V
  double ratio = 0.0;       // lhs / comparison, the empirical eta
  double window_low = 0.0;
  double window_high = 0.0;
  std::size_t prime_count = 0;
  bool empty = true;
};

// sum over primes t in [N^{a - delta/V}, N^{a - delta/(2V)}], a = 1/2 - 3 delta/4,
// of |theta_{N,alpha}(t) (f(t) - 1)| / t.
inline MertensThetaReport mertens_theta_sum(const MultiplicativeSpec& spec, cplx alpha, double N, double delta, double V,
                                            double beta) {
  require(N >= 16 && delta > 0 && V > 0, "mertens_theta_sum: need N >= 16, delta > 0, V > 0");
  MertensThetaReport rep;
  const double a = 0.5 - 0.75 * delta;
  rep.window_low = std::pow(N, a - delta / V);
  rep.window_high = std::pow(N, a - delta / (2.0 * V));
  rep.comparison = beta * delta / V;
  if (rep.window_high > static_cast<double>(kMaxSieveLimit)) {
    throw CapacityError("mertens_theta_sum: prime window beyond sieve range");
  }
  const auto hi = static_cast<std::uint64_t>(std::floor(rep.window_high));
  if (hi >= 2) {
    CompensatedReal acc;
    for (std::uint32_t t : detail::primes_up_to(hi)) {
      if (static_cast<double>(t) < rep.window_low) continue;
      const cplx ft = spec.value_at(t, 1);
      acc += std::abs(theta_N_alpha(spec, alpha, t, N) * (ft - 1.0)) / static_cast<double>(t);
      ++rep.prime_count;
    }
    rep.lhs = acc.value();
  }
  rep.empty = rep.prime_count == 0;
  rep.ratio = rep.comparison > 0 ? rep.lhs / rep.comparison : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

struct MultinomialCheck {
  double lhs = 0.0;    // |sum_{b|s'} f(b) mu(b) log^h b|
  double rhs = 0.0;    // |g(s')| (eps log N)^h
  double sharp = 0.0;  // |g(s')| (sum_{p|s'} max{|f(p)/(f(p)-1)|, 1} log p)^h
  bool precondition_ok = false;  // s' lies in A'
  bool holds() const { return lhs <= rhs * (1.0 + 1e-12) + 1e-300; }
};

// g = f * mu, so g(s') = prod_{p|s'} (f(p) - 1) for squarefree s'. N enters only through log N.
inline MultinomialCheck multinomial_bound_check(const MultiplicativeSpec& spec, std::uint64_t s_prime, int h, double eps,
                                                double N, double kappa) {
  require(s_prime >= 1 && is_squarefree(s_prime), "multinomial_bound_check: s' must be squarefree");
  require(h >= 0, "multinomial_bound_check: h must be >= 0");
  const auto primes = detail::prime_factors(s_prime);
  MultinomialCheck out;
  const double logN = std::log(N);
  out.precondition_ok = a_prime_sum(spec, s_prime) <= eps * logN / kappa;

  CompensatedComplex acc;
  const std::size_t r = primes.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    cplx term = 1.0;
    double logb = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1) {
        term *= -spec.value_at(primes[i], 1);
        logb += std::log(static_cast<double>(primes[i]));
      }
    }
    acc += term * std::pow(logb, h);
  }
  out.lhs = std::abs(acc.value());

  cplx g = 1.0;
  double weight = 0.0;
  for (std::uint64_t p : primes) {
    const cplx fp = spec.value_at(p, 1);
    g *= fp - 1.0;
    const double m = fp == cplx(1.0) ? std::numeric_limits<double>::infinity() : std::max(std::abs(fp / (fp - 1.0)), 1.0);
    weight += m * std::log(static_cast<double>(p));
  }
  out.rhs = std::abs(g) * std::pow(eps * logN, h);
  out.sharp = std::isinf(weight) ? std::numeric_limits<double>::infinity() : std::abs(g) * std::pow(weight, h);
  return out;
}

}  // namespace mfvar
