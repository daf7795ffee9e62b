#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mfvar/arith_core.hpp"
#include "mfvar/errors.hpp"
#include "mfvar/variance.hpp"

namespace mfvar {

// Squarefree-supported g with g(p) = f(p) - 1 if Re alpha >= 1, else 1 - f(p); zero for p <= C.
inline MultiplicativeSpec g_spec_from(const MultiplicativeSpec& f, cplx alpha, double C) {
  const bool upper = alpha.real() >= 1.0;
  return {"g[" + f.name + "]", [f, upper, C](std::uint64_t p, int k) -> cplx {
            if (k >= 2 || static_cast<double>(p) <= C) return 0.0;
            const cplx fp = f.value_at(p, 1);
            return upper ? fp - 1.0 : 1.0 - fp;
          }};
}

namespace detail {

inline double bump(double u) { return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0; }

// Cumulative bump integrals on a uniform grid over [-1, 1], one Gauss-Kronrod
// panel per cell; evaluated by cubic Hermite interpolation with the exact derivative.
class BumpCdfTable {
 public:
  static constexpr int kCells = 4096;

  BumpCdfTable() : F_(kCells + 1, 0.0) {
    using boost::math::quadrature::gauss_kronrod;
    for (int i = 1; i <= kCells; ++i) {
      F_[i] = F_[i - 1] + gauss_kronrod<double, 31>::integrate(bump, x(i - 1), x(i), 0);
    }
    mass_ = F_[kCells];
  }

  double mass() const { return mass_; }

  double cdf(double v) const {
    if (v <= -1.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double h = 2.0 / kCells;
    const int i = std::min(static_cast<int>((v + 1.0) / h), kCells - 1);
    const double s = (v - x(i)) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    const double raw = h00 * F_[i] + h10 * h * bump(x(i)) + h01 * F_[i + 1] + h11 * h * bump(x(i + 1));
    return raw / mass_;
  }

 private:
  static double x(int i) { return -1.0 + 2.0 * i / kCells; }
  std::vector<double> F_;
  double mass_ = 0.0;
};

inline const BumpCdfTable& bump_table() {
  static const BumpCdfTable table;
  return table;
}

// CDF of the normalised bump on [-1, 1].
inline double bump_cdf(double x) { return bump_table().cdf(x); }

// Adaptive reference for the same CDF, used to validate the table.
inline double bump_cdf_adaptive(double x) {
  using boost::math::quadrature::gauss_kronrod;
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return gauss_kronrod<double, 61>::integrate(bump, -1.0, x, 15, 1e-14) / bump_table().mass();
}

}  // namespace detail

// Phi(t) = T int_{1/T}^{1-1/T} Psi(T(s-t)) ds with Psi the normalised bump, which
// equals CDF(Tt - 1) - CDF(Tt - T + 1).
inline double smooth_weight(double t, double T) {
  if (T < 4) throw PreconditionError("smooth_weight: T must be >= 4");
  if (t <= 0.0 || t >= 1.0) return 0.0;
  if (t >= 2.0 / T && t <= 1.0 - 2.0 / T) return 1.0;
  const double v = detail::bump_cdf(T * t - 1.0) - detail::bump_cdf(T * t - T + 1.0);
  return std::clamp(v, 0.0, 1.0);
}

// f~(n) = Phi(n/N) sum_{r | n, r <= R} g(r) for n <= N.
inline DenseSequence tilde_function(const SievedFunction& g, double R, std::uint64_t N, double T) {
  require(N <= g.limit, "tilde_function: N beyond sieved range");
  require(R >= 1.0 && R <= std::sqrt(static_cast<double>(N)) + 1e-9, "tilde_function: need 1 <= R <= sqrt(N)");
  DenseSequence out;
  out.limit = N;
  out.values.assign(N + 1, cplx(0.0));
  const auto Rmax = static_cast<std::uint64_t>(std::floor(R));
  for (std::uint64_t r = 1; r <= Rmax; ++r) {
    const cplx gr = g.values[r];
    if (gr == cplx(0.0)) continue;
    for (std::uint64_t n = r; n <= N; n += r) out.values[n] += gr;
  }
  const double Nd = static_cast<double>(N);
  for (std::uint64_t n = 1; n <= N; ++n) out.values[n] *= smooth_weight(static_cast<double>(n) / Nd, T);
  return out;
}

// sum_{n<=N} |sum_{r|n, r<=R} g(r)|^2, the undamped upper bound for sum |f~|^2.
inline double tilde_undamped_norm(const SievedFunction& g, double R, std::uint64_t N) {
  std::vector<cplx> acc(N + 1, cplx(0.0));
  const auto Rmax = static_cast<std::uint64_t>(std::floor(R));
  for (std::uint64_t r = 1; r <= Rmax && r <= N; ++r) {
    if (g.values[r] == cplx(0.0)) continue;
    for (std::uint64_t n = r; n <= N; n += r) acc[n] += g.values[r];
  }
  CompensatedReal s;
  for (std::uint64_t n = 1; n <= N; ++n) s += std::norm(acc[n]);
  return s.value();
}

}  // namespace mfvar
