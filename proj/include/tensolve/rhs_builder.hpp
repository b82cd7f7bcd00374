#pragma once

#include <array>

#include "tensolve/contractions.hpp"
#include "tensolve/metric.hpp"
#include "tensolve/parameters.hpp"
#include "tensolve/tensor.hpp"
#include "tensolve/trace_system.hpp"

namespace tensolve {

/// The four derived source tensors feeding the 15-slot right-hand side.
struct RhsBundle {
  Rank3 hat;
  Rank3 breve;
  Rank3 bar;
  Rank3 ring;
};

namespace detail {

/// w_i = sum_j gamma_inv[i][j] B^(j): the unknown's traces expressed through
/// the source's traces.
inline std::array<CoVector, 4> recovered_traces(
    const std::array<CoVector, 4>& b_traces,
    const std::array<double, 16>& gamma_inv) {
  std::array<CoVector, 4> w{};
  for (int i = 0; i < 4; ++i)
    for (int mu = 0; mu < 4; ++mu) {
      double s = 0.0;
      for (int j = 0; j < 4; ++j) s += gamma_inv[4 * i + j] * b_traces[j][mu];
      w[i][mu] = s;
    }
  return w;
}

}  // namespace detail

/// hat-B: the source after trace elimination. Subtracts every trace-coupled
/// term of the equation with the unknown's traces replaced via Gamma^-1.
inline Rank3 build_hat_b(const Rank3& b, const ParameterSet& p,
                         const std::array<double, 16>& gamma_inv,
                         const std::array<CoVector, 4>& b_traces,
                         const Metric& g, const LeviCivita& eps) {
  const auto w = detail::recovered_traces(b_traces, gamma_inv);
  // epsilon term couples only the three metric traces
  CoVector u{};
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu) u[mu] += p.b_vec[i] * w[i][mu];
  const CoVector u_up = g.raise(u);

  Rank3 out = b;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        double v = 0.0;
        for (int i = 0; i < 4; ++i) {
          v += p.a7x(i) * w[i][m] * g(a, n);
          v += p.a8x(i) * w[i][n] * g(a, m);
          v += p.a9x(i) * w[i][a] * g(m, n);
        }
        for (int r = 0; r < 4; ++r) {
          const double e = eps.lo(r, a, m, n);
          if (e != 0.0) v += e * u_up[r];
        }
        out(a, m, n) -= v;
      }
  return out;
}

namespace detail {

/// Correction covector sum_i bracket_i w_i over the three metric traces.
inline CoVector bracket_combo(const std::array<CoVector, 4>& w,
                              const std::array<double, 3>& bracket) {
  CoVector u{};
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 4; ++mu) u[mu] += bracket[i] * w[i][mu];
  return u;
}

}  // namespace detail

/// breve-B = eps^{bg}_{am} hat_{bgn} + 2(-1)^s [bracket combo]_{[a} g_{m]n}.
/// The leading term is the first dualization of hat read at slots (nam).
inline Rank3 build_breve_b(const Rank3& hat,
                           const std::array<CoVector, 4>& b_traces,
                           const ParameterSet& p,
                           const std::array<double, 16>& gamma_inv,
                           const Metric& g, const LeviCivita& eps) {
  const double s = static_cast<double>(eps.sign_factor());
  const auto w = detail::recovered_traces(b_traces, gamma_inv);
  const auto& b = p.b;
  const std::array<double, 3> bracket = {
      b[1][0] + b[1][2] + b[2][0] + b[2][2],
      b[0][0] + b[0][2] - b[2][0] - b[2][2],
      -(b[0][0] + b[0][2] + b[1][0] + b[1][2])};
  const Rank3 lead = dual(hat, 1, eps);
  const Rank3 corr =
      vector_wedge_metric(detail::bracket_combo(w, bracket), g,
                          WedgePattern::antisym_12);
  Rank3 out;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        out(a, m, n) = lead(n, a, m) + 2.0 * s * corr(a, m, n);
  return out;
}

/// bar-B = eps^{bg}_{an} hat_{bmg} - 2(-1)^s [bracket combo]_{[a} g_{n]m}.
/// Leading term: second dualization of hat read at slots (man).
inline Rank3 build_bar_b(const Rank3& hat,
                         const std::array<CoVector, 4>& b_traces,
                         const ParameterSet& p,
                         const std::array<double, 16>& gamma_inv,
                         const Metric& g, const LeviCivita& eps) {
  const double s = static_cast<double>(eps.sign_factor());
  const auto w = detail::recovered_traces(b_traces, gamma_inv);
  const auto& b = p.b;
  const std::array<double, 3> bracket = {
      b[1][0] + b[1][1] + b[2][0] + b[2][1],
      b[0][0] + b[0][1] - b[2][0] - b[2][1],
      -(b[0][0] + b[0][1] + b[1][0] + b[1][1])};
  const Rank3 lead = dual(hat, 2, eps);
  const Rank3 corr =
      vector_wedge_metric(detail::bracket_combo(w, bracket), g,
                          WedgePattern::antisym_13);
  Rank3 out;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        out(a, m, n) = lead(m, a, n) - 2.0 * s * corr(a, m, n);
  return out;
}

/// ring-B = eps^{bg}_{mn} hat_{abg} + 2(-1)^s [bracket combo]_{[m} g_{n]a}.
/// Leading term: third dualization of hat at its natural slots.
inline Rank3 build_ring_b(const Rank3& hat,
                          const std::array<CoVector, 4>& b_traces,
                          const ParameterSet& p,
                          const std::array<double, 16>& gamma_inv,
                          const Metric& g, const LeviCivita& eps) {
  const double s = static_cast<double>(eps.sign_factor());
  const auto w = detail::recovered_traces(b_traces, gamma_inv);
  const auto& b = p.b;
  const std::array<double, 3> bracket = {
      b[1][1] + b[1][2] + b[2][1] + b[2][2],
      b[0][1] + b[0][2] - b[2][1] - b[2][2],
      -(b[1][1] + b[1][2] + b[0][1] + b[0][2])};
  const Rank3 lead = dual(hat, 3, eps);
  const Rank3 corr =
      vector_wedge_metric(detail::bracket_combo(w, bracket), g,
                          WedgePattern::antisym_23);
  Rank3 out;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        out(a, m, n) = lead(a, m, n) + 2.0 * s * corr(a, m, n);
  return out;
}

/// Build all four derived source tensors from precomputed source traces.
inline RhsBundle build_rhs_bundle(const Rank3& b, const ParameterSet& p,
                                  const std::array<double, 16>& gamma_inv,
                                  const std::array<CoVector, 4>& b_traces,
                                  const Metric& g, const LeviCivita& eps) {
  RhsBundle r;
  r.hat = build_hat_b(b, p, gamma_inv, b_traces, g, eps);
  r.breve = build_breve_b(r.hat, b_traces, p, gamma_inv, g, eps);
  r.bar = build_bar_b(r.hat, b_traces, p, gamma_inv, g, eps);
  r.ring = build_ring_b(r.hat, b_traces, p, gamma_inv, g, eps);
  return r;
}

/// Convenience overload recomputing the source traces (testing hook).
inline RhsBundle build_rhs_bundle(const Rank3& b, const ParameterSet& p,
                                  const std::array<double, 16>& gamma_inv,
                                  const Metric& g, const LeviCivita& eps) {
  return build_rhs_bundle(b, p, gamma_inv, compute_source_traces(b, g, eps), g,
                          eps);
}

/// Cyclic slot orders of the corrected tensors inside the right-hand-side
/// column: (amn), (mna), (nam) -- note this differs from the unknown column's
/// (amn), (nam), (mna).
inline constexpr std::array<std::array<int, 3>, 3> kRhsCyc = {{
    {0, 1, 2}, {1, 2, 0}, {2, 0, 1},
}};

/// The 15-slot right-hand-side column at one index triple:
/// hat at all six permutations, then breve, bar, ring at kRhsCyc.
inline std::array<double, 15> assemble_rhs_column(const RhsBundle& r, int a,
                                                  int m, int n) {
  std::array<double, 15> col{};
  int k = 0;
  for (const auto& perm : kPerm6) col[k++] = at_perm(r.hat, perm, a, m, n);
  for (const Rank3* t : {&r.breve, &r.bar, &r.ring})
    for (const auto& perm : kRhsCyc) col[k++] = at_perm(*t, perm, a, m, n);
  return col;
}

}  // namespace tensolve
