#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mfvar/errors.hpp"
#include "mfvar/numeric.hpp"

namespace mfvar {

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

using PrimePower = std::pair<std::uint64_t, int>;

// Smallest-prime-factor table for 2..limit.
struct FactorTable {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> spf;  // spf[n] for n <= limit; spf[0] = spf[1] = 0
  std::vector<std::uint32_t> primes;

  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit && spf[n] == n; }

  std::vector<PrimePower> factorize(std::uint64_t n) const {
    require(n >= 1 && n <= limit, "factorize: n outside table");
    std::vector<PrimePower> out;
    while (n > 1) {
      const std::uint64_t p = spf[n];
      int k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      out.emplace_back(p, k);
    }
    return out;
  }
};

// Linear sieve. Throws CapacityError outside [2, 1e8].
inline FactorTable build_factor_table(std::uint64_t n) {
  if (n < 2 || n > kMaxSieveLimit) {
    throw CapacityError("build_factor_table: N must lie in [2, 1e8], got " + std::to_string(n));
  }
  FactorTable ft;
  ft.limit = n;
  ft.spf.assign(n + 1, 0);
  ft.primes.reserve(n < 100 ? 32 : static_cast<std::size_t>(1.3 * n / std::log(static_cast<double>(n))));
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (ft.spf[i] == 0) {
      ft.spf[i] = static_cast<std::uint32_t>(i);
      ft.primes.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t si = ft.spf[i];
    for (std::uint32_t p : ft.primes) {
      if (p > si || static_cast<std::uint64_t>(p) * i > n) break;
      ft.spf[p * i] = p;
    }
  }
  return ft;
}

// Trial-division factorization for integers beyond any sieve.
inline std::vector<PrimePower> factorize_trial(std::uint64_t n) {
  require(n >= 1, "factorize_trial: n must be >= 1");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) return false;
  }
  return true;
}

inline bool is_squarefree(std::uint64_t n) {
  for (const auto& [p, k] : factorize_trial(n)) {
    if (k > 1) return false;
  }
  return true;
}

inline std::int64_t mobius(std::uint64_t n) {
  require(n >= 1, "mobius: n must be >= 1");
  std::int64_t mu = 1;
  for (const auto& [p, k] : factorize_trial(n)) {
    if (k > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline std::int64_t euler_phi(std::uint64_t n) {
  require(n >= 1, "euler_phi: n must be >= 1");
  std::uint64_t phi = n;
  for (const auto& [p, k] : factorize_trial(n)) phi = phi / p * (p - 1);
  return static_cast<std::int64_t>(phi);
}

inline int omega(std::uint64_t n) {
  require(n >= 1, "omega: n must be >= 1");
  return static_cast<int>(factorize_trial(n).size());
}

// binom(a, k) = a(a-1)...(a-k+1)/k!
inline cplx complex_binomial(cplx a, int k) {
  require(k >= 0, "complex_binomial: k must be >= 0");
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= (a - static_cast<double>(i)) / static_cast<double>(i + 1);
  return r;
}

inline double divisor_kappa(std::uint64_t n, double kappa) {
  require(n >= 1, "divisor_kappa: n must be >= 1");
  double r = 1.0;
  for (const auto& [p, k] : factorize_trial(n)) r *= complex_binomial(kappa + k - 1.0, k).real();
  return r;
}

// A multiplicative function given by its values on prime powers p^k, k >= 1.
struct MultiplicativeSpec {
  std::string name;
  std::function<cplx(std::uint64_t p, int k)> value_at;

  cplx at(std::uint64_t p, int k) const { return k == 0 ? cplx(1.0) : value_at(p, k); }

  cplx operator()(std::uint64_t n) const {
    cplx r = 1.0;
    for (const auto& [p, k] : factorize_trial(n)) r *= value_at(p, k);
    return r;
  }
};

// Dense table of f(0..limit); index 0 holds 0 and is never read as a value.
struct SievedFunction {
  std::uint64_t limit = 0;
  std::vector<cplx> values;
  MultiplicativeSpec spec;
  std::shared_ptr<const FactorTable> table;

  cplx operator()(std::uint64_t n) const { return values.at(n); }
};

inline SievedFunction sieve_multiplicative(const MultiplicativeSpec& spec,
                                           std::shared_ptr<const FactorTable> ft,
                                           std::uint64_t limit = 0) {
  require(ft != nullptr, "sieve_multiplicative: null factor table");
  if (limit == 0) limit = ft->limit;
  require(limit <= ft->limit, "sieve_multiplicative: table does not cover limit");
  SievedFunction f;
  f.limit = limit;
  f.spec = spec;
  f.table = ft;
  f.values.assign(limit + 1, cplx(0.0));
  if (limit >= 1) f.values[1] = 1.0;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const std::uint64_t p = ft->spf[n];
    std::uint64_t m = n;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    f.values[n] = (m == 1) ? spec.value_at(p, k) : f.values[n / m] * f.values[m];
  }
  return f;
}

inline SievedFunction sieve_multiplicative(const MultiplicativeSpec& spec, const FactorTable& ft) {
  return sieve_multiplicative(spec, std::make_shared<const FactorTable>(ft));
}

// Local rule of f*g: (f*g)(p^k) = sum_i f(p^i) g(p^{k-i}).
inline MultiplicativeSpec convolve_specs(const MultiplicativeSpec& f, const MultiplicativeSpec& g) {
  MultiplicativeSpec out;
  out.name = "(" + f.name + ")conv(" + g.name + ")";
  out.value_at = [f, g](std::uint64_t p, int k) {
    cplx s = 0.0;
    for (int i = 0; i <= k; ++i) s += f.at(p, i) * g.at(p, k - i);
    return s;
  };
  return out;
}

inline SievedFunction dirichlet_convolve(const SievedFunction& f, const SievedFunction& g) {
  require(f.limit == g.limit, "dirichlet_convolve: limit mismatch");
  const std::uint64_t n = f.limit;
  SievedFunction h;
  h.limit = n;
  h.spec = convolve_specs(f.spec, g.spec);
  h.table = f.table;
  h.values.assign(n + 1, cplx(0.0));
  for (std::uint64_t d = 1; d <= n; ++d) {
    const cplx fd = f.values[d];
    if (fd == cplx(0.0)) continue;
    for (std::uint64_t m = 1, dm = d; dm <= n; ++m, dm += d) h.values[dm] += fd * g.values[m];
  }
  return h;
}

}  // namespace mfvar
