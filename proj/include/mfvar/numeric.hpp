#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mfvar {

using cplx = std::complex<double>;

// Neumaier-compensated sum of doubles.
class CompensatedReal {
 public:
  void add(double v) {
    const double t = s_ + v;
    if (std::abs(s_) >= std::abs(v)) {
      c_ += (s_ - t) + v;
    } else {
      c_ += (v - t) + s_;
    }
    s_ = t;
  }
  CompensatedReal& operator+=(double v) {
    add(v);
    return *this;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Componentwise compensated sum of complex values.
class CompensatedComplex {
 public:
  void add(cplx v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  CompensatedComplex& operator+=(cplx v) {
    add(v);
    return *this;
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedReal re_;
  CompensatedReal im_;
};

inline double relative_error(cplx a, cplx b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// x^e for real x > 0, principal branch.
inline cplx real_pow(double x, cplx e) {
  if (e == cplx(0.0, 0.0)) return 1.0;
  return std::exp(e * std::log(x));
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Worker count from MFVAR_THREADS; defaults to 1 so runs are reproducible by default.
inline unsigned worker_count() {
  if (const char* env = std::getenv("MFVAR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return 1;
}

// Runs body(i) for i in [0, n) on worker_count() threads with a static
// interleaved schedule. Results must be written to per-index slots.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace mfvar
