#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mfvar/arith_core.hpp"
#include "mfvar/errors.hpp"
#include "mfvar/numeric.hpp"

namespace mfvar {

// A non-multiplicative sequence a(0..limit); index 0 is unused.
struct DenseSequence {
  std::uint64_t limit = 0;
  std::vector<cplx> values;
};

using SeqView = std::span<const cplx>;

inline SeqView view(const SievedFunction& f) { return f.values; }
inline SeqView view(const DenseSequence& f) { return f.values; }

struct VarianceBreakdown {
  std::uint64_t Q = 0;
  std::uint64_t N = 0;
  double total = 0.0;
  std::vector<double> per_q;  // per_q[q] for 1 <= q <= Q; per_q[0] = 0
  double parseval = 0.0;      // sum_{n<=N} |f(n)|^2
  double ratio = 0.0;         // total / (Q parseval)
};

inline double parseval_sum(SeqView f, std::uint64_t N) {
  require(N < f.size(), "parseval_sum: N beyond sequence");
  CompensatedReal s;
  for (std::uint64_t n = 1; n <= N; ++n) s += std::norm(f[n]);
  return s.value();
}

namespace detail {

inline std::vector<CompensatedComplex> residue_buckets(SeqView f, std::uint64_t q, std::uint64_t N) {
  std::vector<CompensatedComplex> S(q);
  std::uint64_t a = 1 % q;
  for (std::uint64_t n = 1; n <= N; ++n) {
    S[a] += f[n];
    if (++a == q) a = 0;
  }
  return S;
}

// Contribution of one modulus: sum over h | q and a with (a,q) = h of
// |S_a - T_h / phi(q/h)|^2.
inline double variance_term(SeqView f, std::uint64_t q, std::uint64_t N) {
  const auto S = residue_buckets(f, q, N);
  std::vector<std::uint64_t> h_of(q);
  std::vector<CompensatedComplex> T(q + 1);
  std::vector<std::uint64_t> count(q + 1, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    const std::uint64_t h = gcd_u64(a, q);  // gcd(0, q) = q
    h_of[a] = h;
    T[h] += S[a].value();
    ++count[h];
  }
  CompensatedReal acc;
  for (std::uint64_t a = 0; a < q; ++a) {
    const std::uint64_t h = h_of[a];
    // count[h] = phi(q/h)
    acc += std::norm(S[a].value() - T[h].value() / static_cast<double>(count[h]));
  }
  return acc.value();
}

}  // namespace detail

// (1/phi(q)) sum over reduced a of |S_a - T_1/phi(q)|^2
inline double variance_single(SeqView f, std::uint64_t q, std::uint64_t N) {
  require(q >= 1, "variance_single: q must be >= 1");
  require(N < f.size(), "variance_single: N beyond sequence");
  const auto S = detail::residue_buckets(f, q, N);
  CompensatedComplex T;
  std::uint64_t phi = 0;
  for (std::uint64_t a = 0; a < q; ++a) {
    if (gcd_u64(a, q) != 1) continue;
    T += S[a].value();
    ++phi;
  }
  const cplx mean = T.value() / static_cast<double>(phi);
  CompensatedReal acc;
  for (std::uint64_t a = 0; a < q; ++a) {
    if (gcd_u64(a, q) == 1) acc += std::norm(S[a].value() - mean);
  }
  return acc.value() / static_cast<double>(phi);
}

inline double variance_single(const SievedFunction& f, std::uint64_t q, std::uint64_t N) {
  return variance_single(view(f), q, N);
}

// V(Q, f); per-q terms run on MFVAR_THREADS workers and are reduced in q order.
inline VarianceBreakdown variance_progressions(SeqView f, std::uint64_t Q, std::uint64_t N) {
  require(Q >= 1 && Q <= N, "variance_progressions: need 1 <= Q <= N");
  require(N < f.size(), "variance_progressions: N beyond sequence");
  VarianceBreakdown out;
  out.Q = Q;
  out.N = N;
  out.per_q.assign(Q + 1, 0.0);
  parallel_for(Q, [&](std::size_t i) { out.per_q[i + 1] = detail::variance_term(f, i + 1, N); });
  CompensatedReal total;
  for (std::uint64_t q = 1; q <= Q; ++q) total += out.per_q[q];
  out.total = total.value();
  out.parseval = parseval_sum(f, N);
  out.ratio = out.parseval > 0 ? out.total / (static_cast<double>(Q) * out.parseval) : 0.0;
  return out;
}

inline VarianceBreakdown variance_progressions(const SievedFunction& f, std::uint64_t Q, std::uint64_t N) {
  return variance_progressions(view(f), Q, N);
}

}  // namespace mfvar
