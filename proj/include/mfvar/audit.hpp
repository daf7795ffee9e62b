#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mfvar/arcs.hpp"
#include "mfvar/arith_core.hpp"
#include "mfvar/gamma.hpp"
#include "mfvar/ramanujan.hpp"
#include "mfvar/selberg_delange.hpp"
#include "mfvar/smoothing.hpp"
#include "mfvar/variance.hpp"

namespace mfvar {

struct HSAuditParams {
  cplx alpha = 1.0;    // selects the sign convention of g
  double delta = 0.1;  // R defaults to N^{1/2 - delta/2}
  double R = 0.0;
  double T = 8.0;      // smooth-weight sharpness
  double C = 11.0;     // g vanishes on p <= C
};

struct HSAuditReport {
  std::uint64_t N = 0;
  double Q = 0, Q0 = 0, K = 0;
  std::uint64_t M = 0;
  std::vector<std::string> violations;

  double V = 0;
  double minor = 0;
  double major = 0;
  double parseval = 0;
  double q_minor = 0;        // Q * minor
  double q_minor_slack = 0;  // Q (1 - log K / K) minor
  double err_grid = 0;       // N K / Q0 * sum |f|^2
  double err_tail = 0;       // sum_{q<=Q} 1/q sum_{d|q, d>Q0} |sum f c_d|^2 / phi(d)
  double bound_raw = 0;      // q_minor - err_grid - err_tail
  double bound_slack = 0;
  bool holds_raw = false;
  bool holds_slack = false;

  // Cauchy-Schwarz chain on the grid with f~.
  double R = 0;
  double mixed_minor = 0;   // (1/M) sum_minor |F F~|
  double tilde_minor = 0;   // (1/M) sum_minor |F~|^2
  double cs_bound = 0;      // mixed_minor^2 / tilde_minor
  double tilde_parseval = 0;
  double tilde_undamped = 0;
  bool cs_holds = false;
  bool chain_holds = false;
};

// sum_{Q0 < d <= Q} |sum_n f(n) c_d(n)|^2 / phi(d) * sum_{m <= Q/d} 1/(dm)
inline double ramanujan_tail_term(SeqView f, std::uint64_t N, double Q, double Q0) {
  const auto Qi = static_cast<std::uint64_t>(std::floor(Q));
  const auto d0 = static_cast<std::uint64_t>(std::floor(std::max(Q0, 0.0))) + 1;
  CompensatedReal acc;
  for (std::uint64_t d = d0; d <= Qi; ++d) {
    const double weight = std::norm(twisted_sum(f, d, N)) / static_cast<double>(euler_phi(d));
    CompensatedReal harmonic;
    for (std::uint64_t m = 1; m * d <= Qi; ++m) harmonic += 1.0 / static_cast<double>(m * d);
    acc += weight * harmonic.value();
  }
  return acc.value();
}

inline HSAuditReport hs_inequality_audit(const SievedFunction& f, std::uint64_t N, double Q, const ArcConfig& cfg,
                                         const HSAuditParams& params) {
  require(N <= 100000 && Q * static_cast<double>(N) <= 1e9, "hs_inequality_audit: desk scale needs N <= 1e5, QN <= 1e9");
  require(N <= f.limit && Q >= 1 && Q <= static_cast<double>(N), "hs_inequality_audit: need 1 <= Q <= N <= limit");
  HSAuditReport rep;
  ArcConfig c = cfg;
  c.Q = Q;
  if (c.M == 0) c.M = default_grid_size(N);
  rep.N = N;
  rep.Q = Q;
  rep.Q0 = c.Q0;
  rep.K = c.K;
  rep.M = c.M;
  rep.violations = c.violations(N);

  const auto Qi = static_cast<std::uint64_t>(std::floor(Q));
  rep.V = variance_progressions(f, Qi, N).total;

  const auto F = exponential_sum_grid(f, N, c.M);
  const auto mask = major_mask(c.M, c);
  const auto arcs = arc_integrals(F, mask);
  rep.minor = arcs.minor;
  rep.major = arcs.major;
  rep.parseval = parseval_sum(view(f), N);
  rep.q_minor = Q * rep.minor;
  rep.q_minor_slack = Q * (1.0 - std::log(c.K) / c.K) * rep.minor;
  rep.err_grid = static_cast<double>(N) * c.K / c.Q0 * rep.parseval;
  rep.err_tail = ramanujan_tail_term(view(f), N, Q, c.Q0);
  rep.bound_raw = rep.q_minor - rep.err_grid - rep.err_tail;
  rep.bound_slack = rep.q_minor_slack - rep.err_grid - rep.err_tail;
  rep.holds_raw = rep.V >= rep.bound_raw;
  rep.holds_slack = rep.V >= rep.bound_slack;

  rep.R = params.R > 0 ? params.R : std::pow(static_cast<double>(N), 0.5 - params.delta / 2.0);
  const auto g = sieve_multiplicative(g_spec_from(f.spec, params.alpha, params.C), f.table, N);
  const auto ft = tilde_function(g, rep.R, N, params.T);
  const auto Ft = exponential_sum_grid(view(ft), N, c.M);
  CompensatedReal mixed;
  CompensatedReal tminor;
  for (std::size_t j = 0; j < F.size(); ++j) {
    if (mask[j]) continue;
    mixed += std::abs(F[j] * Ft[j]);
    tminor += std::norm(Ft[j]);
  }
  const double Md = static_cast<double>(c.M);
  rep.mixed_minor = mixed.value() / Md;
  rep.tilde_minor = tminor.value() / Md;
  rep.cs_bound = rep.tilde_minor > 0 ? rep.mixed_minor * rep.mixed_minor / rep.tilde_minor : 0.0;
  rep.cs_holds = rep.minor >= rep.cs_bound * (1.0 - 1e-12);
  rep.tilde_parseval = parseval_sum(view(ft), N);
  rep.tilde_undamped = tilde_undamped_norm(g, rep.R, N);
  rep.chain_holds = rep.tilde_minor <= rep.tilde_parseval * (1.0 + 1e-12) &&
                    rep.tilde_parseval <= rep.tilde_undamped * (1.0 + 1e-12);
  return rep;
}

struct RatioRow {
  std::uint64_t N = 0;
  std::uint64_t Q = 0;
  double V = 0;
  double q_parseval = 0;  // Q sum |f|^2
  double ratio = 0;
  double predicted = 0;   // |c0 beta / Gamma(alpha)|^2
};

// Q = ceil(N^{q_exponent}) per grid point.
inline std::vector<RatioRow> ratio_experiment(const MultiplicativeSpec& spec, cplx alpha, double beta,
                                              const std::vector<std::uint64_t>& N_grid, double q_exponent) {
  std::vector<RatioRow> rows;
  for (std::uint64_t N : N_grid) {
    require(N >= 4 && N <= 100000, "ratio_experiment: grid entries must lie in [4, 1e5]");
    auto ft = std::make_shared<const FactorTable>(build_factor_table(N));
    const auto f = sieve_multiplicative(spec, ft);
    RatioRow row;
    row.N = N;
    row.Q = static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(N), q_exponent) - 1e-9));
    const auto vb = variance_progressions(f, row.Q, N);
    row.V = vb.total;
    row.q_parseval = static_cast<double>(row.Q) * vb.parseval;
    row.ratio = vb.ratio;
    row.predicted = std::norm(c0_constant(spec, alpha, N) * beta * recip_gamma(alpha));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mfvar
