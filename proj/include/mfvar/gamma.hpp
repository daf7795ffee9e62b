#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "mfvar/errors.hpp"
#include "mfvar/numeric.hpp"

namespace mfvar {

namespace detail {

// Lanczos coefficients, g = 7, n = 9.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log Gamma(z) for Re z >= 1/2.
inline cplx log_gamma_right(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace detail

inline cplx gamma_complex(cplx z) {
  if (detail::is_nonpositive_integer(z)) throw PoleError("gamma_complex: pole at non-positive integer");
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::numbers::pi / (std::sin(std::numbers::pi * z) * std::exp(detail::log_gamma_right(1.0 - z)));
  }
  return std::exp(detail::log_gamma_right(z));
}

// 1/Gamma(z), entire; exactly zero at 0, -1, -2, ...
inline cplx recip_gamma(cplx z) {
  if (detail::is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) {
    return std::sin(std::numbers::pi * z) * std::exp(detail::log_gamma_right(1.0 - z)) / std::numbers::pi;
  }
  return std::exp(-detail::log_gamma_right(z));
}

}  // namespace mfvar
