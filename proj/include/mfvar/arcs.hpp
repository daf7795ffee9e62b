#pragma once

#include <fftw3.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "mfvar/errors.hpp"
#include "mfvar/numeric.hpp"
#include "mfvar/variance.hpp"

namespace mfvar {

struct ArcConfig {
  double K = 10.0;
  double Q0 = 0.0;
  double Q = 0.0;
  std::uint64_t M = 0;

  // Range conditions K sqrt(N log N) <= Q <= N and N log N / Q <= Q0 <= Q / K^2.
  std::vector<std::string> violations(std::uint64_t N) const {
    std::vector<std::string> v;
    const double Nd = static_cast<double>(N);
    const double NlogN = Nd * std::log(Nd);
    if (K < 5) v.push_back("K < 5");
    if (Q < K * std::sqrt(NlogN)) v.push_back("Q < K sqrt(N log N)");
    if (Q > Nd) v.push_back("Q > N");
    if (Q0 < NlogN / Q) v.push_back("Q0 < N log N / Q");
    if (Q0 > Q / (K * K)) v.push_back("Q0 > Q / K^2");
    if (M <= N) v.push_back("M <= N");
    if (M == 0 || (M & (M - 1)) != 0) v.push_back("M not a power of two");
    return v;
  }
};

// Smallest power of two strictly above 4N.
inline std::uint64_t default_grid_size(std::uint64_t N) {
  std::uint64_t M = 1;
  while (M <= 4 * N) M <<= 1;
  return M;
}

namespace detail {

struct FftwPlan {
  fftw_plan plan = nullptr;
  FftwPlan(int n, fftw_complex* in, fftw_complex* out)
      : plan(fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE)) {}
  ~FftwPlan() {
    if (plan) fftw_destroy_plan(plan);
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;
};

struct FftwBuffer {
  fftw_complex* data = nullptr;
  explicit FftwBuffer(std::size_t n) : data(fftw_alloc_complex(n)) {
    if (!data) throw CapacityError("fftw allocation failed");
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

}  // namespace detail

// F(j/M) = sum_{n<=N} f(n) e(nj/M) for j = 0..M-1.
inline std::vector<cplx> exponential_sum_grid(SeqView f, std::uint64_t N, std::uint64_t M) {
  if (M <= N) throw PreconditionError("exponential_sum_grid: need M > N");
  if ((M & (M - 1)) != 0) throw PreconditionError("exponential_sum_grid: M must be a power of two");
  if (M > (std::uint64_t{1} << 28)) throw CapacityError("exponential_sum_grid: M too large");
  require(N < f.size(), "exponential_sum_grid: N beyond sequence");
  detail::FftwBuffer in(M);
  detail::FftwBuffer out(M);
  detail::FftwPlan plan(static_cast<int>(M), in.data, out.data);
  for (std::uint64_t n = 0; n < M; ++n) {
    const cplx v = (n >= 1 && n <= N) ? f[n] : cplx(0.0);
    in.data[n][0] = v.real();
    in.data[n][1] = v.imag();
  }
  fftw_execute(plan.plan);
  std::vector<cplx> F(M);
  for (std::uint64_t j = 0; j < M; ++j) F[j] = {out.data[j][0], out.data[j][1]};
  return F;
}

inline std::vector<cplx> exponential_sum_grid(const SievedFunction& f, std::uint64_t N, std::uint64_t M) {
  return exponential_sum_grid(view(f), N, M);
}

struct ArcClass {
  bool major = false;
  std::uint64_t a = 0;  // witness a/q: nearest rational among admissible denominators
  std::uint64_t q = 1;
};

// Major iff some q <= K Q0 has |q j/M - a| <= K/Q. The minimum of |q phi - a| over
// q <= X is attained at the largest continued-fraction denominator not above X.
inline ArcClass classify_arc(std::uint64_t j, std::uint64_t M, const ArcConfig& cfg) {
  require(M >= 1 && j < M, "classify_arc: need 0 <= j < M");
  const double X = cfg.K * cfg.Q0;
  ArcClass out;
  if (X < 1.0) return out;
  // Convergent denominators of j/M via the Euclidean algorithm.
  std::uint64_t q_prev = 0;
  std::uint64_t q_cur = 1;
  std::uint64_t num = j;
  std::uint64_t den = M;
  std::uint64_t best_q = 1;
  while (true) {
    if (static_cast<double>(q_cur) <= X) best_q = q_cur;
    if (num == 0) break;
    const std::uint64_t a_k = den / num;
    const std::uint64_t rem = den % num;
    const std::uint64_t q_next = a_k * q_cur + q_prev;
    if (static_cast<double>(q_next) > X) break;
    q_prev = q_cur;
    q_cur = q_next;
    den = num;
    num = rem;
  }
  // Nearest a for best_q, and the exact distance |best_q j - a M| as an integer.
  const unsigned __int128 qj = static_cast<unsigned __int128>(best_q) * j;
  const std::uint64_t a_floor = static_cast<std::uint64_t>(qj / M);
  const std::uint64_t r = static_cast<std::uint64_t>(qj % M);
  const bool up = 2 * static_cast<unsigned __int128>(r) > M;
  const std::uint64_t dist = up ? M - r : r;
  out.q = best_q;
  out.a = up ? a_floor + 1 : a_floor;
  out.major = static_cast<long double>(dist) * static_cast<long double>(cfg.Q) <=
              static_cast<long double>(cfg.K) * static_cast<long double>(M);
  return out;
}

struct ArcIntegrals {
  double minor = 0.0;  // (1/M) sum over minor j of |F(j/M)|^2
  double major = 0.0;
  std::uint64_t major_points = 0;
  std::uint64_t M = 0;
};

inline std::vector<bool> major_mask(std::uint64_t M, const ArcConfig& cfg) {
  std::vector<bool> mask(M);
  for (std::uint64_t j = 0; j < M; ++j) mask[j] = classify_arc(j, M, cfg).major;
  return mask;
}

inline ArcIntegrals arc_integrals(const std::vector<cplx>& F, const std::vector<bool>& mask) {
  require(F.size() == mask.size(), "arc_integrals: grid size mismatch");
  ArcIntegrals out;
  out.M = F.size();
  CompensatedReal mi;
  CompensatedReal ma;
  for (std::size_t j = 0; j < F.size(); ++j) {
    if (mask[j]) {
      ma += std::norm(F[j]);
      ++out.major_points;
    } else {
      mi += std::norm(F[j]);
    }
  }
  out.minor = mi.value() / static_cast<double>(F.size());
  out.major = ma.value() / static_cast<double>(F.size());
  return out;
}

inline ArcIntegrals arc_integrals(SeqView f, std::uint64_t N, const ArcConfig& cfg) {
  const auto F = exponential_sum_grid(f, N, cfg.M);
  return arc_integrals(F, major_mask(cfg.M, cfg));
}

inline double minor_arc_integral(SeqView f, std::uint64_t N, const ArcConfig& cfg) {
  return arc_integrals(f, N, cfg).minor;
}

inline double major_arc_integral(SeqView f, std::uint64_t N, const ArcConfig& cfg) {
  return arc_integrals(f, N, cfg).major;
}

inline double minor_arc_integral(const SievedFunction& f, std::uint64_t N, const ArcConfig& cfg) {
  return minor_arc_integral(view(f), N, cfg);
}

inline double major_arc_integral(const SievedFunction& f, std::uint64_t N, const ArcConfig& cfg) {
  return major_arc_integral(view(f), N, cfg);
}

}  // namespace mfvar
