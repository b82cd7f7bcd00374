#pragma once

#include <array>

#include "tensolve/contractions.hpp"
#include "tensolve/linalg.hpp"
#include "tensolve/metric.hpp"
#include "tensolve/parameters.hpp"
#include "tensolve/tensor.hpp"

namespace tensolve {

/// 4x4 matrix of the trace-elimination system Gamma X = Y, where
/// X = (N^(1), N^(2), N^(3), N^(4))_m and Y are the same traces of the source.
///
/// Rows correspond to contracting the full equation with g^{am}, g^{an},
/// g^{mn} and the raised epsilon; each permutation coefficient lands on the
/// trace whose contracted slot pair it occupies under that row's contraction.
/// Every entry is cross-validated against the brute-force operator in the
/// test suite.
inline std::array<double, 16> build_gamma(const ParameterSet& p,
                                          int sign_factor) {
  const double s = static_cast<double>(sign_factor);
  const auto& a = p.a;
  const auto& b = p.b;
  std::array<double, 16> g{};
  // row 1: g^{am} contraction -> B^(1)
  g[0] = a[0] + a[5] + p.a7[0] + 4 * p.a8[0] + p.a9[0];
  g[1] = a[2] + a[3] + p.a7[1] + 4 * p.a8[1] + p.a9[1];
  g[2] = a[1] + a[4] + p.a7[2] + 4 * p.a8[2] + p.a9[2];
  g[3] = -b[0][0] + b[0][2] + b[1][0] - b[1][2] - b[2][0] + b[2][2] +
         p.c[0] + 4 * p.c[1] + p.c[2];
  // row 2: g^{an} contraction -> B^(2)
  g[4] = a[1] + a[3] + 4 * p.a7[0] + p.a8[0] + p.a9[0];
  g[5] = a[0] + a[4] + 4 * p.a7[1] + p.a8[1] + p.a9[1];
  g[6] = a[2] + a[5] + 4 * p.a7[2] + p.a8[2] + p.a9[2];
  g[7] = b[0][0] - b[0][1] - b[1][0] + b[1][1] + b[2][0] - b[2][1] +
         4 * p.c[0] + p.c[1] + p.c[2];
  // row 3: g^{mn} contraction -> B^(3)
  g[8] = a[2] + a[4] + p.a7[0] + p.a8[0] + 4 * p.a9[0];
  g[9] = a[1] + a[5] + p.a7[1] + p.a8[1] + 4 * p.a9[1];
  g[10] = a[0] + a[3] + p.a7[2] + p.a8[2] + 4 * p.a9[2];
  g[11] = b[0][1] - b[0][2] - b[1][1] + b[1][2] + b[2][1] - b[2][2] +
          p.c[0] + p.c[1] + 4 * p.c[2];
  // row 4: epsilon contraction -> B^(4)
  g[12] = -2 * s *
          (b[1][0] + b[1][1] + b[1][2] + b[2][0] + b[2][1] + b[2][2] -
           3 * p.b_vec[0]);
  g[13] = -2 * s *
          (b[0][0] + b[0][1] + b[0][2] - b[2][0] - b[2][1] - b[2][2] -
           3 * p.b_vec[1]);
  g[14] = 2 * s *
          (b[0][0] + b[0][1] + b[0][2] + b[1][0] + b[1][1] + b[1][2] +
           3 * p.b_vec[2]);
  g[15] = a[0] + a[1] + a[2] - a[3] - a[4] - a[5];
  return g;
}

/// Trace subsystem with its inverse and determinant. Degeneracy is judged by
/// the caller (the solver's gates); the inverse is only meaningful when the
/// determinant is nonzero.
struct TraceSystem {
  std::array<double, 16> gamma{};
  std::array<double, 16> gamma_inv{};
  double det = 0.0;
  double rcond = 0.0;
  int sign_factor = 1;

  static TraceSystem build(const ParameterSet& p, int sign_factor) {
    TraceSystem ts;
    ts.sign_factor = sign_factor;
    ts.gamma = build_gamma(p, sign_factor);
    ts.det = detail::det4(ts.gamma);
    if (ts.det != 0.0) {
      ts.gamma_inv = detail::invert4(ts.gamma, ts.det);
      ts.rcond = rcond_from_inverse<4>(ts.gamma, ts.gamma_inv);
    }
    return ts;
  }
};

/// The four source traces in system order: (B^(1), B^(2), B^(3), B^(4)).
inline std::array<CoVector, 4> compute_source_traces(const Rank3& b,
                                                     const Metric& g,
                                                     const LeviCivita& eps) {
  return {trace(b, 1, g), trace(b, 2, g), trace(b, 3, g),
          pseudo_trace(b, eps, g)};
}

/// X = Gamma^-1 Y, componentwise over the four covector slots.
inline std::array<CoVector, 4> solve_traces(
    const TraceSystem& ts, const std::array<CoVector, 4>& b_traces) {
  std::array<CoVector, 4> x{};
  for (int i = 0; i < 4; ++i)
    for (int mu = 0; mu < 4; ++mu) {
      double s = 0.0;
      for (int j = 0; j < 4; ++j)
        s += ts.gamma_inv[4 * i + j] * b_traces[j][mu];
      x[i][mu] = s;
    }
  return x;
}

}  // namespace tensolve
