#include <gtest/gtest.h>

#include <random>

#include "mfvar/divisor_models.hpp"
#include "mfvar/ramanujan.hpp"
#include "oracles.hpp"

using namespace mfvar;

namespace {

std::shared_ptr<const FactorTable> table(std::uint64_t n) {
  return std::make_shared<const FactorTable>(build_factor_table(n));
}

// b is supported on the primes of q iff stripping gcds with q reaches 1.
bool supported_on(std::uint64_t b, std::uint64_t q) {
  for (std::uint64_t g = std::gcd(b, q); g > 1; g = std::gcd(b, q)) b /= g;
  return b == 1;
}

// The part of b built from primes of r.
std::uint64_t part_on(std::uint64_t b, std::uint64_t r) {
  std::uint64_t out = 1;
  for (std::uint64_t g = std::gcd(b, r); g > 1; g = std::gcd(b, r)) {
    b /= g;
    out *= g;
  }
  return out;
}

cplx brute_twisted(const SievedFunction& f, std::uint64_t q, std::uint64_t N) {
  CompensatedComplex s;
  for (std::uint64_t n = 1; n <= N; ++n) s += f.values[n] * static_cast<double>(oracle::ramanujan_int(q, n));
  return s.value();
}

}  // namespace

TEST(RamanujanSum, KnownValues) {
  for (std::uint64_t n = 1; n <= 50; ++n) EXPECT_EQ(ramanujan_sum(1, n), 1);
  EXPECT_EQ(ramanujan_sum(6, 1), 1);
  EXPECT_EQ(ramanujan_sum(6, 4), -1);
  EXPECT_LT(std::abs(ramanujan_sum_direct(4, 2) - cplx(-2.0)), 1e-12);
  EXPECT_LT(std::abs(ramanujan_sum_direct(5, 5) - cplx(4.0)), 1e-12);
  EXPECT_LT(std::abs(ramanujan_sum_direct(9, 3) - cplx(-3.0)), 1e-12);
}

TEST(RamanujanSum, ThreeFormulasAgreeWithDefinition) {
  for (std::uint64_t q = 1; q <= 150; ++q) {
    for (std::uint64_t n = 1; n <= 150; ++n) {
      const cplx ref = oracle::ramanujan_exp(q, n);
      const std::int64_t a = ramanujan_sum(q, n);
      ASSERT_EQ(a, ramanujan_sum_mu_phi(q, n)) << q << "," << n;
      ASSERT_LT(std::abs(static_cast<double>(a) - ref), 1e-9) << q << "," << n;
      ASSERT_LT(std::abs(ramanujan_sum_direct(q, n) - ref), 1e-9) << q << "," << n;
    }
  }
}

TEST(RamanujanSum, MultiplicativeInQ) {
  for (std::uint64_t q = 1; q <= 60; ++q)
    for (std::uint64_t r = 1; r <= 60; ++r) {
      if (std::gcd(q, r) != 1) continue;
      for (std::uint64_t n = 1; n <= 100; ++n) ASSERT_EQ(ramanujan_sum(q * r, n), ramanujan_sum(q, n) * ramanujan_sum(r, n));
    }
}

TEST(RamanujanSum, DependsOnlyOnGcd) {
  for (std::uint64_t q = 1; q <= 80; ++q)
    for (std::uint64_t n = 1; n <= 300; ++n) ASSERT_EQ(ramanujan_sum(q, n), ramanujan_sum(q, std::gcd(n, q))) << q << "," << n;
}

TEST(TwistedSum, Examples) {
  const auto ft = table(100);
  const auto d2 = sieve_multiplicative(d_alpha_spec(2.0), ft);
  EXPECT_LT(std::abs(twisted_sum(d2, 2, 4) - cplx(2.0)), 1e-12);
  EXPECT_LT(std::abs(twisted_sum_factored(d2, 2, 4) - cplx(2.0)), 1e-12);
  cplx plain = 0.0;
  for (std::uint64_t n = 1; n <= 100; ++n) plain += d2.values[n];
  EXPECT_LT(std::abs(twisted_sum(d2, 1, 100) - plain), 1e-12 * std::abs(plain));
  const auto d0 = sieve_multiplicative(d0_spec(), ft);
  for (std::uint64_t q = 1; q <= 60; ++q) EXPECT_EQ(twisted_sum(d0, q, 100), cplx(static_cast<double>(oracle::mobius(q)))) << q;
}

TEST(TwistedSum, MatchesBruteForce) {
  const std::uint64_t N = 3000;
  const auto ft = table(N);
  for (const auto& spec : {d_alpha_spec(2.0), d_alpha_spec({0.5, 0.3}), two_squares_spec()}) {
    const auto f = sieve_multiplicative(spec, ft);
    for (std::uint64_t q = 1; q <= 40; ++q) {
      const cplx ref = brute_twisted(f, q, N);
      ASSERT_LT(std::abs(twisted_sum(f, q, N) - ref), 1e-10 * (1.0 + std::abs(ref))) << spec.name << " q=" << q;
    }
  }
}

TEST(TwistedSum, FactoredFormOnRandomSquarefreeModuli) {
  const std::uint64_t N = 100'000;
  const auto ft = table(N);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> nf(1, 3);
  for (const auto& spec : {d_alpha_spec(2.0), d_alpha_spec({0.5, 0.3}), two_squares_spec()}) {
    const auto f = sieve_multiplicative(spec, ft);
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t q = oracle::random_squarefree(rng, 2, 200, nf(rng));
      const cplx a = twisted_sum(f, q, N);
      const cplx b = twisted_sum_factored(f, q, N);
      ASSERT_LT(oracle::rel(b, a), 1e-10) << spec.name << " q=" << q;
    }
    EXPECT_LT(oracle::rel(twisted_sum_factored(f, 15, 10000), twisted_sum(f, 15, 10000)), 1e-10);
  }
  EXPECT_THROW(twisted_sum_factored(sieve_multiplicative(d_alpha_spec(2.0), ft), 12, 100), PreconditionError);
}

TEST(Split, RoughSmooth) {
  const auto sp = split_rough_smooth(2 * 3 * 101 * 103, 50.0);
  EXPECT_EQ(sp.s, 6u);
  EXPECT_EQ(sp.r, 101u * 103u);
  const auto all = split_rough_smooth(30, 100.0);
  EXPECT_EQ(all.s, 30u);
  EXPECT_EQ(all.r, 1u);
}

TEST(Hyperbola, PartsMatchIndependentScan) {
  const std::uint64_t N = 200'000;
  const auto ft = table(N);
  const double Nd = static_cast<double>(N);
  struct Case {
    std::uint64_t r, s;
    cplx at;
  };
  const std::vector<Case> cases = {{3, 2, 1.0}, {1, 6, 1.0}, {35, 6, {0.5, 0.3}}, {7 * 11 * 13, 1, 0.0}, {5, 2 * 3, 2.0}};
  for (const auto& spec : {d_alpha_spec(2.0), d_alpha_spec({0.5, 0.3})}) {
    const auto f = sieve_multiplicative(spec, ft);
    for (const auto& c : cases) {
      const std::uint64_t q = c.r * c.s;
      cplx low = 0.0;
      cplx high = 0.0;
      for (std::uint64_t b = 1; 4 * b <= N; ++b) {
        if (!supported_on(b, q)) continue;
        const double L = std::log(Nd / static_cast<double>(b));
        const cplx wc = (c.at == cplx(0.0) ? cplx(1.0) : std::exp(c.at * std::log(L))) / static_cast<double>(b);
        const cplx term = f.values[b] * static_cast<double>(oracle::ramanujan_int(q, b)) * wc;
        if (static_cast<double>(part_on(b, c.r)) <= std::sqrt(Nd)) {
          low += term;
        } else {
          high += term;
        }
      }
      const auto h = hyperbola_split(f, c.r, c.s, N, c.at);
      const double scale = 1.0 + std::abs(low) + std::abs(high);
      EXPECT_LT(std::abs(h.part1 - low), 1e-12 * scale) << spec.name << " q=" << q;
      EXPECT_LT(std::abs(h.part2 - high), 1e-12 * scale) << spec.name << " q=" << q;
      EXPECT_LT(std::abs(h.total() - h.direct), 1e-12 * scale) << spec.name << " q=" << q;
    }
  }
}

TEST(Hyperbola, Preconditions) {
  const auto f = sieve_multiplicative(d_alpha_spec(2.0), table(100));
  EXPECT_THROW(hyperbola_split(f, 3, 2, 3, 1.0), PreconditionError);
  EXPECT_THROW(hyperbola_split(f, 6, 2, 100, 1.0), PreconditionError);
}

TEST(Admissibility, BasicFailures) {
  AdmissibilityParams p;
  const auto d2 = d_alpha_spec(2.0);
  EXPECT_EQ(q_admissible(4, p, d2).c1, CondStatus::fail);
  AdmissibilityParams p7 = p;
  p7.C = 7.0;
  EXPECT_EQ(q_admissible(30, p7, d2).c4, CondStatus::fail);
  EXPECT_FALSE(q_admissible(30, p7, d2).admissible());
}

TEST(Admissibility, HandcraftedTPasses) {
  AdmissibilityParams p;
  p.N = 1'000'000;
  p.delta = 0.1;
  p.eps = 0.02;
  // Window for t: [10^{2.43}, 10^{2.49}] = [269.2, 309.0]; 271 is prime and q = t leaves s = s' = 1.
  ASSERT_LT(p.t_low(), 271.0);
  ASSERT_GT(p.t_high(), 271.0);
  const auto r = q_admissible(271, p, d_alpha_spec(2.0));
  EXPECT_TRUE(r.condition3());
  EXPECT_EQ(r.t, 271u);
  EXPECT_EQ(r.s, 1u);
  EXPECT_EQ(r.s_prime, 1u);
  EXPECT_EQ(r.c1, CondStatus::pass);
  EXPECT_EQ(r.c4, CondStatus::pass);
  // t outside the window fails (3d).
  EXPECT_EQ(q_admissible(251, p, d_alpha_spec(2.0)).c3d, CondStatus::fail);
}

TEST(Admissibility, EmptyWindowIsReported) {
  AdmissibilityParams p;
  p.N = 100;
  p.delta = 0.1;
  p.eps = 0.02;
  // [100^{0.405}, 100^{0.415}] = [6.45, 6.76] holds no integer at all.
  const auto r = q_admissible(13, p, d_alpha_spec(2.0));
  EXPECT_EQ(r.c3d, CondStatus::window_empty);
  EXPECT_FALSE(r.admissible());
}

TEST(Admissibility, APrimeSum) {
  const auto d2 = d_alpha_spec(2.0);
  // |f(p) - 1| = 1 for d2, so each prime contributes log p.
  EXPECT_NEAR(a_prime_sum(d2, 3 * 7), std::log(21.0), 1e-14);
  EXPECT_TRUE(std::isinf(a_prime_sum(d_alpha_spec(1.0), 5)));
  EXPECT_TRUE(in_a_prime(d2, 1, 0.05, 1'000'000, 2.0));
  EXPECT_FALSE(in_a_prime(d2, 2, 0.05, 1'000'000, 2.0));
}

TEST(TailSums, ClosedForms) {
  // Local factor 1 + p((1 - p^{-sigma})^{-kappa} - 1) by the binomial series.
  auto local = [](double p, double sigma, double kappa) { return 1.0 + p * (std::pow(1.0 - std::pow(p, -sigma), -kappa) - 1.0); };
  const auto one = tail_sums(1, 2.0);
  EXPECT_EQ(one.ratio1, 1.0);
  EXPECT_EQ(one.ratio2, 1.0);

  const auto six = tail_sums(6, 2.0);
  EXPECT_NEAR(six.series_1, local(2, 1, 2) * local(3, 1, 2), 1e-10);
  EXPECT_NEAR(six.series_1, 33.25, 1e-10);
  EXPECT_NEAR(six.ratio2, 33.25 / 9.0, 1e-11);

  std::uint64_t q = 1;
  double ref34 = 1.0;
  double ref1 = 1.0;
  double cap34 = 1.0;
  double cap1 = 1.0;
  for (std::uint64_t p : oracle::primes_upto(50)) {
    if (p <= 10) continue;
    const double pd = static_cast<double>(p);
    q *= p;
    ref34 *= local(pd, 0.75, 2.0);
    ref1 *= local(pd, 1.0, 2.0);
    cap34 *= std::pow(1.0 - std::pow(pd, -0.75), -2.0);
    cap1 *= std::pow(1.0 - 1.0 / pd, -2.0);
  }
  const auto big = tail_sums(q, 2.0);
  EXPECT_LT(std::abs(big.series_34 / ref34 - 1.0), 1e-10);
  EXPECT_LT(std::abs(big.series_1 / ref1 - 1.0), 1e-10);
  EXPECT_LE(big.ratio1, cap34);
  EXPECT_LE(big.ratio2, cap1);
  EXPECT_THROW(tail_sums(12, 2.0), PreconditionError);
}
