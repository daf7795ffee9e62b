#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfvar/arith_core.hpp"
#include "mfvar/divisor_models.hpp"

namespace mfvar {

inline std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, k] : factorize_trial(n)) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (int e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// c_q(n) = sum_{k | (n,q)} k mu(q/k)
inline std::int64_t ramanujan_sum(std::uint64_t q, std::uint64_t n) {
  require(q >= 1 && n >= 1, "ramanujan_sum: q, n must be >= 1");
  std::int64_t s = 0;
  for (std::uint64_t k : divisors_of(gcd_u64(n, q))) s += static_cast<std::int64_t>(k) * mobius(q / k);
  return s;
}

// c_q(n) = mu(q/g) phi(q) / phi(q/g), g = (n, q)
inline std::int64_t ramanujan_sum_mu_phi(std::uint64_t q, std::uint64_t n) {
  require(q >= 1 && n >= 1, "ramanujan_sum_mu_phi: q, n must be >= 1");
  const std::uint64_t m = q / gcd_u64(n, q);
  return mobius(m) * (euler_phi(q) / euler_phi(m));
}

// Literal sum of e(an/q) over reduced residues a.
inline cplx ramanujan_sum_direct(std::uint64_t q, std::uint64_t n) {
  require(q >= 1 && q <= 100000, "ramanujan_sum_direct: q must lie in [1, 1e5]");
  CompensatedComplex s;
  const std::uint64_t nr = n % q;
  for (std::uint64_t a = 1; a <= q; ++a) {
    if (gcd_u64(a, q) != 1) continue;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>((a * nr) % q) / static_cast<double>(q);
    s += cplx(std::cos(theta), std::sin(theta));
  }
  return s.value();
}

// sum_{n<=N} f(n) c_q(n), grouping n by the divisor k of q it is a multiple of.
inline cplx twisted_sum(std::span<const cplx> f, std::uint64_t q, std::uint64_t N) {
  require(q >= 1, "twisted_sum: q must be >= 1");
  require(N < f.size(), "twisted_sum: N beyond sequence");
  CompensatedComplex total;
  for (std::uint64_t k : divisors_of(q)) {
    const std::int64_t mu = mobius(q / k);
    if (mu == 0 || k > N) continue;
    CompensatedComplex inner;
    for (std::uint64_t m = k; m <= N; m += k) inner += f[m];
    total += static_cast<double>(static_cast<std::int64_t>(k) * mu) * inner.value();
  }
  return total.value();
}

inline cplx twisted_sum(const SievedFunction& f, std::uint64_t q, std::uint64_t N) {
  require(N <= f.limit, "twisted_sum: N beyond sieved range");
  return twisted_sum(std::span<const cplx>(f.values), q, N);
}

namespace detail {

// Calls visit(b) for every b <= X all of whose prime factors lie in primes.
template <typename Visit>
void for_each_supported(const std::vector<std::uint64_t>& primes, std::uint64_t X, Visit&& visit,
                        std::size_t start = 0, std::uint64_t b = 1) {
  visit(b);
  for (std::size_t i = start; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    std::uint64_t nb = b;
    while (nb <= X / p) {
      nb *= p;
      for_each_supported(primes, X, visit, i + 1, nb);
    }
  }
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t q) {
  std::vector<std::uint64_t> ps;
  for (const auto& [p, k] : factorize_trial(q)) ps.push_back(p);
  return ps;
}

}  // namespace detail

// sum over q-supported b of f(b) c_q(b) times the coprime prefix sum up to N/b.
inline cplx twisted_sum_factored(const SievedFunction& f, std::uint64_t q, std::uint64_t N) {
  require(q >= 1 && is_squarefree(q), "twisted_sum_factored: q must be squarefree");
  require(N <= f.limit, "twisted_sum_factored: N beyond sieved range");
  std::vector<cplx> coprime_prefix(N + 1, cplx(0.0));
  {
    CompensatedComplex run;
    for (std::uint64_t a = 1; a <= N; ++a) {
      if (gcd_u64(a, q) == 1) run += f.values[a];
      coprime_prefix[a] = run.value();
    }
  }
  const auto primes = detail::prime_factors(q);
  CompensatedComplex total;
  detail::for_each_supported(primes, N, [&](std::uint64_t b) {
    total += f.values[b] * static_cast<double>(ramanujan_sum(q, b)) * coprime_prefix[N / b];
  });
  return total.value();
}

struct RoughSmoothSplit {
  std::uint64_t r = 1;  // product of primes of q above y
  std::uint64_t s = 1;  // product of primes of q at most y
};

inline RoughSmoothSplit split_rough_smooth(std::uint64_t q, double y) {
  RoughSmoothSplit out;
  for (std::uint64_t p : detail::prime_factors(q)) {
    if (static_cast<double>(p) <= y) {
      out.s *= p;
    } else {
      out.r *= p;
    }
  }
  return out;
}

struct HyperbolaSplit {
  cplx part1 = 0.0;
  cplx part2 = 0.0;
  cplx direct = 0.0;
  cplx total() const { return part1 + part2; }
};

// Terms f(b) c_q(b) b^{-1} log(N/b)^a over q-supported b <= N/4 with q = r s,
// split by whether the r-part b1 is at most sqrt N.
inline HyperbolaSplit hyperbola_split(const SievedFunction& f, std::uint64_t r, std::uint64_t s, std::uint64_t N,
                                      cplx alpha_tilde) {
  require(N >= 4, "hyperbola_split: N/4 must be >= 1");
  require(N / 4 <= f.limit, "hyperbola_split: N/4 beyond sieved range");
  require(gcd_u64(r, s) == 1, "hyperbola_split: r and s must be coprime");
  const std::uint64_t q = r * s;
  require(is_squarefree(q), "hyperbola_split: q must be squarefree");
  const double Nd = static_cast<double>(N);
  const double sqrtN = std::sqrt(Nd);
  const std::uint64_t X = N / 4;  // b <= N/4 iff 4b <= N for integers
  auto weight = [&](std::uint64_t b) { return real_pow(std::log(Nd / static_cast<double>(b)), alpha_tilde) / static_cast<double>(b); };

  HyperbolaSplit out;
  {
    CompensatedComplex direct;
    detail::for_each_supported(detail::prime_factors(q), X, [&](std::uint64_t b) {
      direct += f.values[b] * static_cast<double>(ramanujan_sum(q, b)) * weight(b);
    });
    out.direct = direct.value();
  }

  const auto pr = detail::prime_factors(r);
  const auto ps = detail::prime_factors(s);
  CompensatedComplex p1;
  CompensatedComplex p2;
  detail::for_each_supported(pr, X, [&](std::uint64_t b1) {
    const cplx head = f.values[b1] * static_cast<double>(ramanujan_sum(r, b1));
    const bool low = static_cast<double>(b1) <= sqrtN;
    detail::for_each_supported(ps, X / b1, [&](std::uint64_t b2) {
      const std::uint64_t b = b1 * b2;
      const cplx term = head * f.values[b2] * static_cast<double>(ramanujan_sum(s, b2)) * weight(b);
      if (low) {
        p1 += term;
      } else {
        p2 += term;
      }
    });
  });
  out.part1 = p1.value();
  out.part2 = p2.value();
  return out;
}

struct AdmissibilityParams {
  double C = 11.0;
  double A = 0.0;  // 0 selects A1 + e(kappa+1)^2 + 1
  double B = 0.0;  // 0 selects 4(A1 + 2)
  double D = 50.0;
  double eps = 0.05;
  double delta = 0.1;
  std::uint64_t N = 1'000'000;
  double KQ0 = 0.0;  // lower end of the q-range in condition (1)
  double A1 = 5.5;
  double kappa = 2.0;

  double A_value() const { return A > 0 ? A : A1 + std::numbers::e * (kappa + 1) * (kappa + 1) + 1.0; }
  double B_value() const { return B > 0 ? B : 4.0 * (A1 + 2.0); }
  double logN() const { return std::log(static_cast<double>(N)); }
  double smooth_bound() const { return std::pow(logN(), B_value()); }
  double t_low() const { return std::pow(static_cast<double>(N), 0.5 - 0.75 * delta - eps); }
  double t_high() const { return std::pow(static_cast<double>(N), 0.5 - 0.75 * delta - eps / 2); }

  void validate() const {
    require(C > 0 && D > 0 && eps > 0 && delta > 0 && N >= 16, "AdmissibilityParams: constants must be positive, N >= 16");
    require(eps < 0.5 && delta < 0.5, "AdmissibilityParams: eps and delta must be < 1/2");
  }
};

enum class CondStatus { pass, fail, window_empty };

inline const char* to_string(CondStatus s) {
  switch (s) {
    case CondStatus::pass:
      return "pass";
    case CondStatus::fail:
      return "fail";
    case CondStatus::window_empty:
      return "window_empty";
  }
  return "?";
}

struct AdmissibilityReport {
  std::uint64_t q = 0;
  CondStatus c1 = CondStatus::fail;
  CondStatus c2 = CondStatus::fail;
  CondStatus c3a = CondStatus::fail;
  CondStatus c3b = CondStatus::fail;
  CondStatus c3c = CondStatus::fail;
  CondStatus c3d = CondStatus::fail;
  CondStatus c4 = CondStatus::fail;
  CondStatus c5a = CondStatus::fail;
  CondStatus c5b = CondStatus::fail;
  CondStatus c5c = CondStatus::fail;
  CondStatus c6 = CondStatus::fail;
  double a_prime_sum = 0.0;    // left side of (3c)
  double a_prime_budget = 0.0; // eps log N / kappa
  double a_sum = 0.0;          // left side of (6)
  std::optional<std::uint64_t> t, s, s_prime;

  bool condition3() const {
    return c3a == CondStatus::pass && c3b == CondStatus::pass && c3c == CondStatus::pass && c3d == CondStatus::pass;
  }
  bool admissible() const {
    for (CondStatus c : {c1, c2, c4, c5a, c5b, c5c, c6}) {
      if (c != CondStatus::pass) return false;
    }
    return condition3();
  }
};

// Left side of the set A' membership test; infinite when some f(p) = 1.
inline double a_prime_sum(const MultiplicativeSpec& spec, std::uint64_t s_prime) {
  double sum = 0.0;
  for (std::uint64_t p : detail::prime_factors(s_prime)) {
    const double gap = std::abs(spec.value_at(p, 1) - 1.0);
    if (gap == 0.0) return std::numeric_limits<double>::infinity();
    sum += std::log(static_cast<double>(p)) / std::min(gap, 1.0);
  }
  return sum;
}

inline bool in_a_prime(const MultiplicativeSpec& spec, std::uint64_t s_prime, double eps, std::uint64_t N, double kappa) {
  return a_prime_sum(spec, s_prime) <= eps * std::log(static_cast<double>(N)) / kappa;
}

inline AdmissibilityReport q_admissible(std::uint64_t q, const AdmissibilityParams& params, const MultiplicativeSpec& spec) {
  params.validate();
  AdmissibilityReport rep;
  rep.q = q;
  auto st = [](bool ok) { return ok ? CondStatus::pass : CondStatus::fail; };
  const double Nd = static_cast<double>(params.N);
  const double logN = params.logN();
  const double loglogN = std::log(logN);
  const auto fac = factorize_trial(q);
  bool squarefree = true;
  for (const auto& [p, k] : fac) squarefree = squarefree && k == 1;
  const double qd = static_cast<double>(q);

  rep.c1 = st(squarefree && qd >= params.KQ0 && qd <= std::pow(Nd, 0.5 - 0.75 * params.delta));
  rep.c2 = st(static_cast<double>(fac.size()) <= params.A_value() * loglogN);

  bool small_ok = true;
  for (const auto& [p, k] : fac) small_ok = small_ok && static_cast<double>(p) > params.C;
  rep.c4 = st(small_ok);

  double a_sum = 0.0;
  for (const auto& [p, k] : fac) a_sum += std::pow(std::log(static_cast<double>(p)), params.A1 + 1.0) / std::pow(static_cast<double>(p), 0.75);
  rep.a_sum = a_sum;
  rep.c6 = st(a_sum <= params.D);

  // Factorization attempt: t the largest prime, s the smooth rest, s' the rough rest.
  const double y = params.smooth_bound();
  rep.a_prime_budget = params.eps * logN / params.kappa;
  if (!fac.empty() && squarefree) {
    const std::uint64_t t = fac.back().first;
    std::uint64_t s = 1;
    std::uint64_t sp = 1;
    for (std::size_t i = 0; i + 1 < fac.size(); ++i) {
      const std::uint64_t p = fac[i].first;
      if (static_cast<double>(p) <= y) {
        s *= p;
      } else {
        sp *= p;
      }
    }
    rep.t = t;
    rep.s = s;
    rep.s_prime = sp;
    rep.c3a = CondStatus::pass;  // by construction
    rep.c3b = st(static_cast<double>(sp) <= std::pow(Nd, params.eps));
    rep.a_prime_sum = a_prime_sum(spec, sp);
    rep.c3c = st(rep.a_prime_sum <= rep.a_prime_budget);

    const double lo = params.t_low();
    const double hi = params.t_high();
    const auto lo_i = static_cast<std::uint64_t>(std::ceil(lo));
    const auto hi_i = static_cast<std::uint64_t>(std::floor(hi));
    // Bertrand's postulate settles wide windows without a scan.
    bool window_has_prime = lo >= 1.0 && hi >= 2.0 * lo;
    for (std::uint64_t n = lo_i; n <= hi_i && !window_has_prime; ++n) window_has_prime = is_prime_trial(n);
    if (!window_has_prime) {
      rep.c3d = CondStatus::window_empty;
    } else {
      rep.c3d = st(static_cast<double>(t) >= lo && static_cast<double>(t) <= hi);
    }

    bool ok5a = true;
    bool ok5b = true;
    for (std::size_t i = 0; i + 1 < fac.size(); ++i) {
      const std::uint64_t p = fac[i].first;
      const double gap = std::abs(spec.value_at(p, 1) - 1.0);
      ok5a = ok5a && gap > 1.0 / std::sqrt(loglogN);
      ok5b = ok5b && gap > 0.0 && static_cast<double>(p) > params.C / gap;
    }
    rep.c5a = st(ok5a);
    rep.c5b = st(ok5b);
    rep.c5c = st(spec.value_at(t, 1) != cplx(1.0));
  }
  return rep;
}

struct TailSums {
  double series_34 = 1.0;  // sum over q-supported b of d_kappa(b)(q,b)/b^{3/4}
  double series_1 = 1.0;   // same with b^{-1}
  double ratio1 = 1.0;     // series_34 / (q^{1/4} d_{kappa+1}(q))
  double ratio2 = 1.0;     // series_1 / d_{kappa+1}(q)
};

// Both series factor over p | q; each local geometric tail is summed until a
// term drops below 1e-12 of the partial sum.
inline TailSums tail_sums(std::uint64_t q, double kappa) {
  require(kappa > 0, "tail_sums: kappa must be positive");
  require(q >= 1 && is_squarefree(q), "tail_sums: q must be squarefree");
  TailSums out;
  double dk1 = 1.0;
  for (std::uint64_t p : detail::prime_factors(q)) {
    const double pd = static_cast<double>(p);
    auto local = [&](double sigma) {
      double sum = 1.0;
      for (int k = 1; k < 10000; ++k) {
        const double term = complex_binomial(kappa + k - 1.0, k).real() * pd * std::pow(pd, -k * sigma);
        sum += term;
        if (std::abs(term) < 1e-12 * sum) break;
      }
      return sum;
    };
    out.series_34 *= local(0.75);
    out.series_1 *= local(1.0);
    dk1 *= kappa + 1.0;
  }
  out.ratio1 = out.series_34 / (std::pow(static_cast<double>(q), 0.25) * dk1);
  out.ratio2 = out.series_1 / dk1;
  return out;
}

}  // namespace mfvar
