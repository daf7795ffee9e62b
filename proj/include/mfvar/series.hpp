#pragma once

#include <cstddef>
#include <vector>

#include "mfvar/errors.hpp"
#include "mfvar/numeric.hpp"

namespace mfvar {

// Truncated power series sum_{m<=T} a_m w^m in w = z - 1.
class TaylorSeries {
 public:
  TaylorSeries() : a_(1, cplx(0.0)) {}
  explicit TaylorSeries(int order, cplx constant = 0.0) : a_(static_cast<std::size_t>(order) + 1, cplx(0.0)) {
    require(order >= 0, "TaylorSeries: order must be >= 0");
    a_[0] = constant;
  }
  TaylorSeries(int order, std::vector<cplx> coeffs) : TaylorSeries(order) {
    for (std::size_t m = 0; m < coeffs.size() && m < a_.size(); ++m) a_[m] = coeffs[m];
  }

  int order() const { return static_cast<int>(a_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return a_; }
  cplx& operator[](std::size_t m) { return a_[m]; }
  const cplx& operator[](std::size_t m) const { return a_[m]; }

  // exp(c w)
  static TaylorSeries exp_linear(int order, cplx c) {
    TaylorSeries s(order, 1.0);
    for (int m = 1; m <= order; ++m) s.a_[m] = s.a_[m - 1] * c / static_cast<double>(m);
    return s;
  }

  // 1/z = 1/(1+w)
  static TaylorSeries reciprocal_z(int order) {
    TaylorSeries s(order);
    for (int m = 0; m <= order; ++m) s.a_[m] = (m % 2 == 0) ? 1.0 : -1.0;
    return s;
  }

  cplx evaluate(cplx w) const {
    cplx r = 0.0;
    for (int m = order(); m >= 0; --m) r = r * w + a_[m];
    return r;
  }

  TaylorSeries& operator+=(const TaylorSeries& o) {
    check(o);
    for (std::size_t m = 0; m < a_.size(); ++m) a_[m] += o.a_[m];
    return *this;
  }
  TaylorSeries& operator-=(const TaylorSeries& o) {
    check(o);
    for (std::size_t m = 0; m < a_.size(); ++m) a_[m] -= o.a_[m];
    return *this;
  }
  TaylorSeries& operator*=(cplx c) {
    for (auto& x : a_) x *= c;
    return *this;
  }
  TaylorSeries& operator*=(const TaylorSeries& o) {
    check(o);
    std::vector<cplx> r(a_.size(), cplx(0.0));
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (a_[i] == cplx(0.0)) continue;
      for (std::size_t j = 0; i + j < a_.size(); ++j) r[i + j] += a_[i] * o.a_[j];
    }
    a_ = std::move(r);
    return *this;
  }

  friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
  friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
  friend TaylorSeries operator*(TaylorSeries a, const TaylorSeries& b) { return a *= b; }
  friend TaylorSeries operator*(TaylorSeries a, cplx c) { return a *= c; }
  friend TaylorSeries operator*(cplx c, TaylorSeries a) { return a *= c; }

  TaylorSeries derivative() const {
    TaylorSeries d(order());
    for (int m = 1; m <= order(); ++m) d.a_[m - 1] = a_[m] * static_cast<double>(m);
    return d;
  }

  // 1/S, requires a_0 != 0.
  TaylorSeries inverse() const {
    if (a_[0] == cplx(0.0)) throw DegenerateError("TaylorSeries::inverse: zero constant term");
    TaylorSeries r(order());
    r.a_[0] = 1.0 / a_[0];
    for (int m = 1; m <= order(); ++m) {
      cplx s = 0.0;
      for (int k = 1; k <= m; ++k) s += a_[k] * r.a_[m - k];
      r.a_[m] = -s / a_[0];
    }
    return r;
  }

  // log S from (log S)' = S'/S; constant term is the principal log of a_0.
  TaylorSeries log() const {
    if (a_[0] == cplx(0.0)) throw DegenerateError("TaylorSeries::log: zero constant term");
    TaylorSeries r(order());
    r.a_[0] = std::log(a_[0]);
    for (int m = 1; m <= order(); ++m) {
      cplx s = static_cast<double>(m) * a_[m];
      for (int k = 1; k < m; ++k) s -= static_cast<double>(k) * r.a_[k] * a_[m - k];
      r.a_[m] = s / (static_cast<double>(m) * a_[0]);
    }
    return r;
  }

  // exp S from (exp S)' = S' exp S.
  TaylorSeries exp() const {
    TaylorSeries r(order());
    r.a_[0] = std::exp(a_[0]);
    for (int m = 1; m <= order(); ++m) {
      cplx s = 0.0;
      for (int k = 1; k <= m; ++k) s += static_cast<double>(k) * a_[k] * r.a_[m - k];
      r.a_[m] = s / static_cast<double>(m);
    }
    return r;
  }

  // S^e = exp(e log S), principal branch at the constant term.
  TaylorSeries pow(cplx e) const { return (log() * e).exp(); }

 private:
  void check(const TaylorSeries& o) const {
    require(o.a_.size() == a_.size(), "TaylorSeries: order mismatch");
  }

  std::vector<cplx> a_;
};

}  // namespace mfvar
