#pragma once

// Independent brute-force references. Nothing here calls into the library's
// sieve, convolution or series code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Plain Eratosthenes over [0, n].
inline std::vector<bool> prime_flags(std::uint64_t n) {
  std::vector<bool> is(n + 1, true);
  is[0] = false;
  if (n >= 1) is[1] = false;
  for (std::uint64_t i = 2; i * i <= n; ++i) {
    if (!is[i]) continue;
    for (std::uint64_t j = i * i; j <= n; j += i) is[j] = false;
  }
  return is;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  const auto f = prime_flags(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i)
    if (f[i]) out.push_back(i);
  return out;
}

// Segmented sieve count of primes <= n, segment width w.
inline std::uint64_t segmented_prime_count(std::uint64_t n, std::uint64_t w = 32768) {
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1;
  const auto base = primes_upto(root);
  std::uint64_t count = 0;
  std::vector<char> seg(w);
  for (std::uint64_t lo = 2; lo <= n; lo += w) {
    const std::uint64_t hi = std::min(n, lo + w - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t i = lo; i <= hi; ++i) count += seg[i - lo];
  }
  return count;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

inline int mobius(std::uint64_t n) {
  int m = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= n; ++a) c += std::gcd(a, n) == 1;
  return c;
}

// d_k(n) by counting ordered k-tuples of divisors, d_k = 1 * d_{k-1}.
inline std::vector<std::uint64_t> dk_counts(int k, std::uint64_t N) {
  std::vector<std::uint64_t> cur(N + 1, 1);
  cur[0] = 0;
  for (int step = 1; step < k; ++step) {
    std::vector<std::uint64_t> next(N + 1, 0);
    for (std::uint64_t n = 1; n <= N; ++n)
      for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        next[n] += cur[d];
        if (d * d != n) next[n] += cur[n / d];
      }
    cur = std::move(next);
  }
  return cur;
}

inline bool is_sum_of_two_squares(std::uint64_t n) {
  for (std::uint64_t a = 0; a * a <= n; ++a) {
    const std::uint64_t r = n - a * a;
    auto b = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(r))));
    while (b * b > r) --b;
    while ((b + 1) * (b + 1) <= r) ++b;
    if (b * b == r) return true;
  }
  return false;
}

// Ramanujan sum from the definition with the exponent reduced mod q.
inline cplx ramanujan_exp(std::uint64_t q, std::uint64_t n) {
  cplx s = 0.0;
  for (std::uint64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    const double t = 2.0 * M_PI * static_cast<double>((a * n) % q) / static_cast<double>(q);
    s += cplx(std::cos(t), std::sin(t));
  }
  return s;
}

inline std::int64_t ramanujan_int(std::uint64_t q, std::uint64_t n) { return std::llround(ramanujan_exp(q, n).real()); }

inline double rel(cplx a, cplx b) {
  const double s = std::max(std::abs(b), 1e-300);
  return std::abs(a - b) / s;
}

// Random squarefree q built from distinct primes in [lo, hi].
inline std::uint64_t random_squarefree(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi, int factors) {
  const auto ps = primes_upto(hi);
  std::vector<std::uint64_t> pool;
  for (auto p : ps)
    if (p >= lo) pool.push_back(p);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uint64_t q = 1;
  for (int i = 0; i < factors && i < static_cast<int>(pool.size()); ++i) q *= pool[i];
  return q;
}

}  // namespace oracle
