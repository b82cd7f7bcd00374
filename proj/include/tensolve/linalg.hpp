#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

namespace tensolve {

/// LU factorization with partial pivoting for small fixed-size dense systems.
/// Exposes the determinant (product of pivots with the permutation sign) and
/// the smallest absolute pivot encountered.
template <int N>
struct Lu {
  std::array<double, N * N> lu{};
  std::array<int, N> piv{};
  double det = 0.0;
  double min_pivot = 0.0;
  bool singular = false;

  static Lu factor(const std::array<double, N * N>& m) {
    Lu f;
    f.lu = m;
    double sign = 1.0;
    f.min_pivot = 0.0;
    for (int k = 0; k < N; ++k) {
      int p = k;
      double best = std::abs(f.lu[N * k + k]);
      for (int i = k + 1; i < N; ++i) {
        const double v = std::abs(f.lu[N * i + k]);
        if (v > best) {
          best = v;
          p = i;
        }
      }
      f.piv[k] = p;
      if (p != k) {
        for (int j = 0; j < N; ++j) std::swap(f.lu[N * k + j], f.lu[N * p + j]);
        sign = -sign;
      }
      const double pivot = f.lu[N * k + k];
      if (k == 0 || std::abs(pivot) < f.min_pivot)
        f.min_pivot = std::abs(pivot);
      if (pivot == 0.0) {
        f.singular = true;
        f.det = 0.0;
        return f;
      }
      for (int i = k + 1; i < N; ++i) {
        const double l = f.lu[N * i + k] / pivot;
        f.lu[N * i + k] = l;
        for (int j = k + 1; j < N; ++j) f.lu[N * i + j] -= l * f.lu[N * k + j];
      }
    }
    f.det = sign;
    for (int k = 0; k < N; ++k) f.det *= f.lu[N * k + k];
    return f;
  }

  std::array<double, N> solve(std::array<double, N> rhs) const {
    for (int k = 0; k < N; ++k)
      if (piv[k] != k) std::swap(rhs[k], rhs[piv[k]]);
    for (int i = 1; i < N; ++i) {
      double s = rhs[i];
      for (int j = 0; j < i; ++j) s -= lu[N * i + j] * rhs[j];
      rhs[i] = s;
    }
    for (int i = N - 1; i >= 0; --i) {
      double s = rhs[i];
      for (int j = i + 1; j < N; ++j) s -= lu[N * i + j] * rhs[j];
      rhs[i] = s / lu[N * i + i];
    }
    return rhs;
  }

  std::array<double, N * N> inverse() const {
    std::array<double, N * N> inv{};
    for (int col = 0; col < N; ++col) {
      std::array<double, N> e{};
      e[col] = 1.0;
      const auto x = solve(e);
      for (int i = 0; i < N; ++i) inv[N * i + col] = x[i];
    }
    return inv;
  }
};

template <int N>
double norm1(const std::array<double, N * N>& m) {
  double best = 0.0;
  for (int j = 0; j < N; ++j) {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += std::abs(m[N * i + j]);
    best = std::max(best, s);
  }
  return best;
}

template <int N>
double max_norm(const std::array<double, N * N>& m) {
  double best = 0.0;
  for (double x : m) best = std::max(best, std::abs(x));
  return best;
}

/// Reciprocal condition number in the 1-norm, computed from an explicitly
/// available inverse: 1 / (||A||_1 ||A^-1||_1).
template <int N>
double rcond_from_inverse(const std::array<double, N * N>& m,
                          const std::array<double, N * N>& inv) {
  const double n = norm1<N>(m) * norm1<N>(inv);
  return n > 0.0 ? 1.0 / n : 0.0;
}

template <int N>
std::array<double, N> mat_vec(const std::array<double, N * N>& m,
                              const std::array<double, N>& v) {
  std::array<double, N> out{};
  for (int i = 0; i < N; ++i) {
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += m[N * i + j] * v[j];
    out[i] = s;
  }
  return out;
}

}  // namespace tensolve
