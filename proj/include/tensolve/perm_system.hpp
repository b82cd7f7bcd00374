#pragma once

#include <array>

#include "tensolve/contractions.hpp"
#include "tensolve/linalg.hpp"
#include "tensolve/parameters.hpp"
#include "tensolve/rhs_builder.hpp"
#include "tensolve/tensor.hpp"

namespace tensolve {

/// Unknown column ordering: N at the six permutations, then M^(1), M^(2),
/// M^(3) at the cyclic placements (amn), (nam), (mna).
inline std::array<double, 15> unknown_column(const Rank3& n,
                                             const LeviCivita& eps, int a,
                                             int m, int nu) {
  std::array<double, 15> col{};
  int k = 0;
  for (const auto& perm : kPerm6) col[k++] = at_perm(n, perm, a, m, nu);
  for (int which = 1; which <= 3; ++which) {
    const Rank3 d = dual(n, which, eps);
    for (const auto& perm : kCyc3) col[k++] = at_perm(d, perm, a, m, nu);
  }
  return col;
}

namespace detail {

// Rows 1-6: index relabelings of the trace-eliminated equation. Per row, the
// a-coefficient (0-based) landing on each N column, and per dual block the
// (b-column, sign) landing on each M column.
inline constexpr int kPermRowA[6][6] = {
    {0, 1, 2, 3, 4, 5}, {2, 0, 1, 5, 3, 4}, {1, 2, 0, 4, 5, 3},
    {3, 5, 4, 0, 2, 1}, {4, 3, 5, 1, 0, 2}, {5, 4, 3, 2, 1, 0},
};
inline constexpr int kPermRowBCol[6][3] = {
    {0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0},
};
inline constexpr int kPermRowBSign[6] = {1, 1, 1, -1, -1, -1};

// Rows 7-15: the three epsilon contractions of the trace-eliminated equation
// and their cyclic relabelings. N-block coefficients are signed members of
// P_k = 2 b_{k2} - b_{k1} - b_{k3}            (rows 7-9)
// Q_k = b_{k1} + b_{k2} - 2 b_{k3}            (rows 10-12)
// R_k = 2 b_{k1} - b_{k2} - b_{k3}            (rows 13-15),
// all carrying the overall (-1)^s. Encoded as (combo index 0..2, sign).
struct NEntry {
  int k;
  int sign;
};
inline constexpr NEntry kEpsRowN[9][6] = {
    {{0, 1}, {2, 1}, {1, -1}, {1, 1}, {2, -1}, {0, -1}},   // row 7
    {{2, 1}, {1, -1}, {0, 1}, {2, -1}, {0, -1}, {1, 1}},   // row 8
    {{1, -1}, {0, 1}, {2, 1}, {0, -1}, {1, 1}, {2, -1}},   // row 9
    {{1, 1}, {0, -1}, {2, -1}, {0, 1}, {1, -1}, {2, 1}},   // row 10
    {{0, -1}, {2, -1}, {1, 1}, {1, -1}, {2, 1}, {0, 1}},   // row 11
    {{2, -1}, {1, 1}, {0, -1}, {2, 1}, {0, 1}, {1, -1}},   // row 12
    {{2, 1}, {1, -1}, {0, 1}, {2, -1}, {0, -1}, {1, 1}},   // row 13
    {{1, -1}, {0, 1}, {2, 1}, {0, -1}, {1, 1}, {2, -1}},   // row 14
    {{0, 1}, {2, 1}, {1, -1}, {1, 1}, {2, -1}, {0, -1}},   // row 15
};
// M-block: one placement per row (0 = amn, 1 = nam, 2 = mna), carrying the
// a-difference triple of the row's family.
inline constexpr int kEpsRowMPlace[9] = {1, 0, 2, 2, 1, 0, 0, 2, 1};

}  // namespace detail

/// The 15x15 coefficient matrix, assembled row by row from the permutation
/// equations and the epsilon-contracted equations.
inline std::array<double, 225> build_a_matrix(const ParameterSet& p,
                                              int sign_factor) {
  const double s = static_cast<double>(sign_factor);
  std::array<double, 225> a{};
  // rows 1-6
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) a[15 * r + c] = p.a[detail::kPermRowA[r][c]];
    for (int i = 0; i < 3; ++i)
      for (int c3 = 0; c3 < 3; ++c3)
        a[15 * r + 6 + 3 * i + c3] =
            detail::kPermRowBSign[r] * p.b[i][detail::kPermRowBCol[r][c3]];
  }
  // rows 7-15
  const std::array<std::array<double, 3>, 3> combos = {{
      {2 * p.b[0][1] - p.b[0][0] - p.b[0][2],
       2 * p.b[1][1] - p.b[1][0] - p.b[1][2],
       2 * p.b[2][1] - p.b[2][0] - p.b[2][2]},
      {p.b[0][0] + p.b[0][1] - 2 * p.b[0][2],
       p.b[1][0] + p.b[1][1] - 2 * p.b[1][2],
       p.b[2][0] + p.b[2][1] - 2 * p.b[2][2]},
      {2 * p.b[0][0] - p.b[0][1] - p.b[0][2],
       2 * p.b[1][0] - p.b[1][1] - p.b[1][2],
       2 * p.b[2][0] - p.b[2][1] - p.b[2][2]},
  }};
  const std::array<std::array<double, 3>, 3> adiffs = {{
      {p.a[0] - p.a[5], p.a[3] - p.a[2], p.a[1] - p.a[4]},
      {p.a[1] - p.a[3], p.a[4] - p.a[0], p.a[2] - p.a[5]},
      {p.a[2] - p.a[4], p.a[5] - p.a[1], p.a[0] - p.a[3]},
  }};
  for (int rr = 0; rr < 9; ++rr) {
    const int r = 6 + rr;
    const int family = rr / 3;
    for (int c = 0; c < 6; ++c) {
      const auto& e = detail::kEpsRowN[rr][c];
      a[15 * r + c] = s * e.sign * combos[family][e.k];
    }
    for (int i = 0; i < 3; ++i)
      a[15 * r + 6 + 3 * i + detail::kEpsRowMPlace[rr]] = adiffs[family][i];
  }
  return a;
}

/// Factored 15x15 system with inverse, determinant and the first inverse row
/// used for extraction.
struct PermSystem {
  std::array<double, 225> a_mat{};
  std::array<double, 225> a_inv{};
  std::array<double, 15> first_row_inv{};
  Lu<15> lu;
  double det = 0.0;
  double rcond = 0.0;

  static PermSystem build(const ParameterSet& p, int sign_factor) {
    PermSystem ps;
    ps.a_mat = build_a_matrix(p, sign_factor);
    ps.lu = Lu<15>::factor(ps.a_mat);
    ps.det = ps.lu.det;
    if (!ps.lu.singular) {
      ps.a_inv = ps.lu.inverse();
      for (int j = 0; j < 15; ++j) ps.first_row_inv[j] = ps.a_inv[j];
      ps.rcond = rcond_from_inverse<15>(ps.a_mat, ps.a_inv);
    }
    return ps;
  }
};

/// Full 15-vector solve at one index triple.
inline std::array<double, 15> solve_component_system(
    const PermSystem& ps, const std::array<double, 15>& rhs) {
  return ps.lu.solve(rhs);
}

/// N from the first row of A^-1 applied to the right-hand-side column at
/// every index triple.
inline Rank3 extract_solution(const PermSystem& ps, const RhsBundle& bundle) {
  Rank3 n;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int nu = 0; nu < 4; ++nu) {
        const auto col = assemble_rhs_column(bundle, a, m, nu);
        double s = 0.0;
        for (int j = 0; j < 15; ++j) s += ps.first_row_inv[j] * col[j];
        n(a, m, nu) = s;
      }
  return n;
}

}  // namespace tensolve
