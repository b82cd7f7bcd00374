#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace tensolve {

inline constexpr int kDim = 4;

/// Covariant 4-vector (holds traces, pseudo-traces and their sources).
using CoVector = std::array<double, 4>;

/// General rank-3 tensor in 4 dimensions, all indices covariant.
/// Flat storage, component (a,m,n) lives at index 16*a + 4*m + n.
struct Rank3 {
  std::array<double, 64> c{};

  static constexpr int flat(int a, int m, int n) { return 16 * a + 4 * m + n; }

  double& operator()(int a, int m, int n) { return c[flat(a, m, n)]; }
  double operator()(int a, int m, int n) const { return c[flat(a, m, n)]; }

  Rank3& operator+=(const Rank3& o) {
    for (int i = 0; i < 64; ++i) c[i] += o.c[i];
    return *this;
  }
  Rank3& operator-=(const Rank3& o) {
    for (int i = 0; i < 64; ++i) c[i] -= o.c[i];
    return *this;
  }
  Rank3& operator*=(double s) {
    for (double& x : c) x *= s;
    return *this;
  }

  friend Rank3 operator+(Rank3 a, const Rank3& b) { return a += b; }
  friend Rank3 operator-(Rank3 a, const Rank3& b) { return a -= b; }
  friend Rank3 operator*(double s, Rank3 t) { return t *= s; }
  friend Rank3 operator*(Rank3 t, double s) { return t *= s; }
};

/// Unit basis tensor with a single 1 at flat index k.
inline Rank3 basis_tensor(int k) {
  Rank3 t;
  t.c[k] = 1.0;
  return t;
}

inline double frobenius_norm(const Rank3& t) {
  double s = 0.0;
  for (double x : t.c) s += x * x;
  return std::sqrt(s);
}

inline double max_abs(const Rank3& t) {
  double m = 0.0;
  for (double x : t.c) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs_diff(const Rank3& a, const Rank3& b) {
  double m = 0.0;
  for (int i = 0; i < 64; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
  return m;
}

/// The six index orders of a rank-3 tensor, in the fixed column convention
/// (amn), (nam), (mna), (anm), (nma), (man). Entry p means: the value of the
/// permuted tensor at (a,m,n) is T(t[p[0]], t[p[1]], t[p[2]]) with t=(a,m,n).
inline constexpr std::array<std::array<int, 3>, 6> kPerm6 = {{
    {0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2},
}};

/// The three cyclic orders (amn), (nam), (mna); the placements that appear in
/// the unknown column for the dual tensors.
inline constexpr std::array<std::array<int, 3>, 3> kCyc3 = {{
    {0, 1, 2}, {2, 0, 1}, {1, 2, 0},
}};

/// Value of T at the triple (a,m,n) reordered by permutation p.
inline double at_perm(const Rank3& t, const std::array<int, 3>& p, int a, int m,
                      int n) {
  const std::array<int, 3> idx = {a, m, n};
  return t(idx[p[0]], idx[p[1]], idx[p[2]]);
}

}  // namespace tensolve
