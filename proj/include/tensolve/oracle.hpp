#pragma once

#include <array>

#include "tensolve/contractions.hpp"
#include "tensolve/linalg.hpp"
#include "tensolve/metric.hpp"
#include "tensolve/parameters.hpp"
#include "tensolve/tensor.hpp"

// Brute-force realization of the tensor equation. This header is the ground
// truth for the structured solver and deliberately shares nothing with
// trace_system / rhs_builder / perm_system beyond the contraction primitives.

namespace tensolve {

/// Left side of the 30-parameter equation applied to N, term by term.
inline Rank3 apply_lhs(const ParameterSet& p, const Metric& g,
                       const LeviCivita& eps, const Rank3& n) {
  const std::array<CoVector, 3> tr = {trace(n, 1, g), trace(n, 2, g),
                                      trace(n, 3, g)};
  const std::array<CoVector, 3> tr_up = {g.raise(tr[0]), g.raise(tr[1]),
                                         g.raise(tr[2])};
  const CoVector m_lo = pseudo_trace(n, eps, g);
  const std::array<Rank3, 3> m = {dual(n, 1, eps), dual(n, 2, eps),
                                  dual(n, 3, eps)};
  Rank3 out;
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double v = 0.0;
        for (int k = 0; k < 6; ++k)
          v += p.a[k] * at_perm(n, kPerm6[k], a, mu, nu);
        for (int i = 0; i < 3; ++i) {
          v += p.a7[i] * tr[i][mu] * g(a, nu);
          v += p.a8[i] * tr[i][nu] * g(a, mu);
          v += p.a9[i] * tr[i][a] * g(mu, nu);
        }
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            v += p.b[k][l] * at_perm(m[k], kCyc3[l], a, mu, nu);
        for (int r = 0; r < 4; ++r) {
          const double e = eps.lo(r, a, mu, nu);
          if (e != 0.0)
            v += e * (p.b_vec[0] * tr_up[0][r] + p.b_vec[1] * tr_up[1][r] +
                      p.b_vec[2] * tr_up[2][r]);
        }
        v += p.c[0] * m_lo[mu] * g(a, nu);
        v += p.c[1] * m_lo[nu] * g(a, mu);
        v += p.c[2] * m_lo[a] * g(mu, nu);
        out(a, mu, nu) = v;
      }
  return out;
}

/// The equation's left side vectorized over the flattened 64 components:
/// column k is apply_lhs of the k-th basis tensor.
struct OperatorMatrix {
  std::array<double, 64 * 64> entries{};
  double det = 0.0;
  double min_pivot = 0.0;
  bool singular = false;
};

inline OperatorMatrix build_operator(const ParameterSet& p, const Metric& g,
                                     const LeviCivita& eps) {
  OperatorMatrix op;
  for (int k = 0; k < 64; ++k) {
    const Rank3 col = apply_lhs(p, g, eps, basis_tensor(k));
    for (int i = 0; i < 64; ++i) op.entries[64 * i + k] = col.c[i];
  }
  const auto lu = Lu<64>::factor(op.entries);
  op.det = lu.det;
  op.min_pivot = lu.min_pivot;
  op.singular = lu.singular;
  return op;
}

struct OracleResult {
  Rank3 n;
  bool ok = false;
  double det = 0.0;
  double min_pivot = 0.0;
};

/// Direct 64x64 LU solve of the flattened equation; no use of its structure.
inline OracleResult oracle_solve(const ParameterSet& p, const Metric& g,
                                 const LeviCivita& eps, const Rank3& b,
                                 double pivot_tol = 1e-12) {
  OracleResult res;
  std::array<double, 64 * 64> mat{};
  for (int k = 0; k < 64; ++k) {
    const Rank3 col = apply_lhs(p, g, eps, basis_tensor(k));
    for (int i = 0; i < 64; ++i) mat[64 * i + k] = col.c[i];
  }
  const auto lu = Lu<64>::factor(mat);
  res.det = lu.det;
  res.min_pivot = lu.min_pivot;
  if (lu.singular || lu.min_pivot < pivot_tol * max_norm<64>(mat)) return res;
  res.n.c = lu.solve(b.c);
  res.ok = true;
  return res;
}

}  // namespace tensolve
