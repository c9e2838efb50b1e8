#pragma once

#include <array>
#include <cmath>

namespace copula_lab {

// Truncated Taylor series a_0 + a_1 e + ... + a_n e^n, propagated through
// elementary functions. Evaluating a formula on Jet::variable(t, h, n) yields
// the coefficients f^(k)(t) h^k / k!, i.e. exact derivatives up to rounding.
class Jet {
 public:
  static constexpr int kMaxOrder = 26;

  Jet() = default;
  Jet(int order, double value) : order_(order) { c_[0] = value; }

  // The independent variable x = t + h e.
  static Jet variable(double t, double h, int order) {
    Jet j(order, t);
    if (order > 0) j.c_[1] = h;
    return j;
  }

  int order() const noexcept { return order_; }
  double value() const noexcept { return c_[0]; }
  double operator[](int k) const noexcept { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) noexcept { return c_[static_cast<std::size_t>(k)]; }

  Jet operator-() const {
    Jet r(order_, 0.0);
    for (int k = 0; k <= order_; ++k) r[k] = -(*this)[k];
    return r;
  }
  Jet& operator+=(const Jet& o) {
    for (int k = 0; k <= order_; ++k) (*this)[k] += o[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k <= order_; ++k) (*this)[k] -= o[k];
    return *this;
  }
  Jet& operator+=(double s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator-=(double s) {
    c_[0] -= s;
    return *this;
  }
  Jet& operator*=(double s) {
    for (int k = 0; k <= order_; ++k) (*this)[k] *= s;
    return *this;
  }
  Jet& operator/=(double s) {
    for (int k = 0; k <= order_; ++k) (*this)[k] /= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a -= s; }
  friend Jet operator-(double s, const Jet& a) { return (-a) += s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, double s) { return a /= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.order_, 0.0);
    for (int k = 0; k <= a.order_; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
      r[k] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet r(a.order_, 0.0);
    for (int k = 0; k <= a.order_; ++k) {
      double s = a[k];
      for (int j = 0; j < k; ++j) s -= r[j] * b[k - j];
      r[k] = s / b[0];
    }
    return r;
  }

  friend Jet operator/(double s, const Jet& b) { return Jet(b.order_, s) / b; }

  friend Jet exp(const Jet& a) { return exp_series(a, std::exp(a[0]), std::exp(a[0])); }

  // exp(a) - 1 with an accurate constant term.
  friend Jet expm1(const Jet& a) { return exp_series(a, std::exp(a[0]), std::expm1(a[0])); }

  friend Jet log(const Jet& a) { return log_series(a, a[0], std::log(a[0])); }

  // log(1 + a) with an accurate constant term.
  friend Jet log1p(const Jet& a) { return log_series(a, 1.0 + a[0], std::log1p(a[0])); }

  // a^p for a_0 > 0.
  friend Jet pow(const Jet& a, double p) {
    Jet r(a.order_, std::pow(a[0], p));
    for (int k = 1; k <= a.order_; ++k) {
      double s = 0.0;
      for (int j = 1; j <= k; ++j) s += ((p + 1.0) * j - k) * a[j] * r[k - j];
      r[k] = s / (k * a[0]);
    }
    return r;
  }

 private:
  // b = exp(a): k b_k = sum_j j a_j b_{k-j}; `e0` is exp(a_0) and `b0` the
  // constant term to report (exp or expm1).
  static Jet exp_series(const Jet& a, double e0, double b0) {
    Jet r(a.order_, e0);
    for (int k = 1; k <= a.order_; ++k) {
      double s = 0.0;
      for (int j = 1; j <= k; ++j) s += j * a[j] * r[k - j];
      r[k] = s / k;
    }
    r[0] = b0;
    return r;
  }

  // b = log(x) with x_0 = `x0`: x_0 b_k = a_k - (1/k) sum_{j<k} j b_j a_{k-j}.
  static Jet log_series(const Jet& a, double x0, double b0) {
    Jet r(a.order_, b0);
    for (int k = 1; k <= a.order_; ++k) {
      double s = a[k];
      for (int j = 1; j < k; ++j) s -= (static_cast<double>(j) / k) * r[j] * a[k - j];
      r[k] = s / x0;
    }
    return r;
  }

  int order_ = 0;
  std::array<double, kMaxOrder + 1> c_{};
};

}  // namespace copula_lab
