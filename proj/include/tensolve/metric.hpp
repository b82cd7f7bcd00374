#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "tensolve/tensor.hpp"

namespace tensolve {

namespace detail {

/// Determinant of a 4x4 matrix stored row-major.
inline double det4(const std::array<double, 16>& m) {
  auto e = [&](int i, int j) { return m[4 * i + j]; };
  double det = 0.0;
  for (int j = 0; j < 4; ++j) {
    // expand along row 0 with explicit 3x3 minors
    int c[3], k = 0;
    for (int jj = 0; jj < 4; ++jj)
      if (jj != j) c[k++] = jj;
    const double minor =
        e(1, c[0]) * (e(2, c[1]) * e(3, c[2]) - e(2, c[2]) * e(3, c[1])) -
        e(1, c[1]) * (e(2, c[0]) * e(3, c[2]) - e(2, c[2]) * e(3, c[0])) +
        e(1, c[2]) * (e(2, c[0]) * e(3, c[1]) - e(2, c[1]) * e(3, c[0]));
    det += ((j % 2 == 0) ? 1.0 : -1.0) * e(0, j) * minor;
  }
  return det;
}

/// Adjugate-based 4x4 inverse; det must be nonzero.
inline std::array<double, 16> invert4(const std::array<double, 16>& m,
                                      double det) {
  auto e = [&](int i, int j) { return m[4 * i + j]; };
  std::array<double, 16> inv{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      int r[3], c[3], ri = 0, ci = 0;
      for (int k = 0; k < 4; ++k) {
        if (k != i) r[ri++] = k;
        if (k != j) c[ci++] = k;
      }
      const double minor =
          e(r[0], c[0]) * (e(r[1], c[1]) * e(r[2], c[2]) -
                           e(r[1], c[2]) * e(r[2], c[1])) -
          e(r[0], c[1]) * (e(r[1], c[0]) * e(r[2], c[2]) -
                           e(r[1], c[2]) * e(r[2], c[0])) +
          e(r[0], c[2]) * (e(r[1], c[0]) * e(r[2], c[1]) -
                           e(r[1], c[1]) * e(r[2], c[0]));
      // adjugate transposes the cofactor matrix
      inv[4 * j + i] = (((i + j) % 2 == 0) ? 1.0 : -1.0) * minor / det;
    }
  }
  return inv;
}

}  // namespace detail

/// Symmetric non-degenerate metric on the 4-dimensional space.
/// Caches the inverse, the determinant, and sign(det) = (-1)^s where s is the
/// number of negative eigenvalues.
class Metric {
 public:
  explicit Metric(const std::array<double, 16>& components,
                  double symmetry_tol = 1e-12)
      : g_(components) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::abs(g_[4 * i + j] - g_[4 * j + i]) > symmetry_tol)
          throw std::invalid_argument("metric components are not symmetric");
    det_ = detail::det4(g_);
    if (det_ == 0.0 || !std::isfinite(det_))
      throw std::invalid_argument("metric is degenerate");
    inv_ = detail::invert4(g_, det_);
    sign_factor_ = det_ > 0.0 ? 1 : -1;
  }

  static Metric euclidean() {
    return Metric({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  }
  /// diag(-1, 1, 1, 1); signature count s = 1.
  static Metric minkowski() {
    return Metric({-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  }

  double operator()(int i, int j) const { return g_[4 * i + j]; }
  double inv(int i, int j) const { return inv_[4 * i + j]; }
  const std::array<double, 16>& components() const { return g_; }
  const std::array<double, 16>& inverse() const { return inv_; }
  double det() const { return det_; }
  /// sign(det g) = (-1)^s in 4 dimensions.
  int sign_factor() const { return sign_factor_; }

  CoVector lower(const CoVector& v) const {
    CoVector out{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[i] += g_[4 * i + j] * v[j];
    return out;
  }
  CoVector raise(const CoVector& v) const {
    CoVector out{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out[i] += inv_[4 * i + j] * v[j];
    return out;
  }

 private:
  std::array<double, 16> g_;
  std::array<double, 16> inv_{};
  double det_ = 0.0;
  int sign_factor_ = 1;
};

/// Levi-Civita pseudo-tensor tables for a given metric.
///
/// Orientation convention: eps_{0123} = +sqrt(|det g|). The fully raised form
/// carries the factor sign(det g)/sqrt(|det g|). The two mixed forms used by
/// the solver (leading pair raised, leading single index raised) are built
/// once and cached here.
class LeviCivita {
 public:
  explicit LeviCivita(const Metric& g) : sign_factor_(g.sign_factor()) {
    const double vol = std::sqrt(std::abs(g.det()));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            const int s = perm_sign(a, b, c, d);
            lower_[idx(a, b, c, d)] = vol * s;
            upper_[idx(a, b, c, d)] = sign_factor_ * s / vol;
          }
    // eps^{ab}_{cd} = g^{ap} g^{bq} eps_{pqcd}
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            double s2 = 0.0, s1 = 0.0;
            for (int p = 0; p < 4; ++p) {
              s1 += g.inv(a, p) * lower_[idx(p, b, c, d)];
              for (int q = 0; q < 4; ++q)
                s2 += g.inv(a, p) * g.inv(b, q) * lower_[idx(p, q, c, d)];
            }
            up2_[idx(a, b, c, d)] = s2;
            up1_[idx(a, b, c, d)] = s1;
          }
  }

  static constexpr int idx(int a, int b, int c, int d) {
    return 64 * a + 16 * b + 4 * c + d;
  }

  /// eps_{abcd}
  double lo(int a, int b, int c, int d) const { return lower_[idx(a, b, c, d)]; }
  /// eps^{abcd}
  double up(int a, int b, int c, int d) const { return upper_[idx(a, b, c, d)]; }
  /// eps^{ab}_{cd}
  double up2(int a, int b, int c, int d) const { return up2_[idx(a, b, c, d)]; }
  /// eps^{a}_{bcd}
  double up1(int a, int b, int c, int d) const { return up1_[idx(a, b, c, d)]; }

  int sign_factor() const { return sign_factor_; }

  /// Sign of the permutation (a,b,c,d) of (0,1,2,3); 0 on repeated indices.
  static int perm_sign(int a, int b, int c, int d) {
    const int v[4] = {a, b, c, d};
    int s = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if (v[i] == v[j]) return 0;
        if (v[i] > v[j]) s = -s;
      }
    return s;
  }

 private:
  std::array<double, 256> lower_{};
  std::array<double, 256> upper_{};
  std::array<double, 256> up2_{};
  std::array<double, 256> up1_{};
  int sign_factor_;
};

}  // namespace tensolve
