#pragma once

#include <stdexcept>
#include <utility>

#include "tensolve/metric.hpp"
#include "tensolve/tensor.hpp"

namespace tensolve {

/// The three inequivalent metric traces of a rank-3 tensor:
///   which = 1:  T^(1)_m = N_{abm} g^{ab}
///   which = 2:  T^(2)_m = N_{amb} g^{ab}
///   which = 3:  T^(3)_m = N_{mab} g^{ab}
inline CoVector trace(const Rank3& n, int which, const Metric& g) {
  if (which < 1 || which > 3)
    throw std::invalid_argument("trace: which must be 1, 2 or 3");
  CoVector out{};
  for (int m = 0; m < 4; ++m) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const double gi = g.inv(a, b);
        if (gi == 0.0) continue;
        switch (which) {
          case 1: s += gi * n(a, b, m); break;
          case 2: s += gi * n(a, m, b); break;
          default: s += gi * n(m, a, b); break;
        }
      }
    out[m] = s;
  }
  return out;
}

/// Contravariant pseudo-trace M^a = eps^{amnl} N_{mnl}.
inline CoVector pseudo_trace_upper(const Rank3& n, const LeviCivita& eps) {
  CoVector out{};
  for (int a = 0; a < 4; ++a) {
    double s = 0.0;
    for (int m = 0; m < 4; ++m)
      for (int p = 0; p < 4; ++p)
        for (int l = 0; l < 4; ++l) {
          const double e = eps.up(a, m, p, l);
          if (e != 0.0) s += e * n(m, p, l);
        }
    out[a] = s;
  }
  return out;
}

/// Covariant pseudo-trace M_a (the fourth trace of the elimination system).
inline CoVector pseudo_trace(const Rank3& n, const LeviCivita& eps,
                             const Metric& g) {
  return g.lower(pseudo_trace_upper(n, eps));
}

/// Parity-odd dualizations; the result is antisymmetric in its last pair:
///   which = 1:  M^(1)_{lab} = N_{pql} eps^{pq}_{ab}
///   which = 2:  M^(2)_{qab} = N_{pql} eps^{pl}_{ab}
///   which = 3:  M^(3)_{pab} = N_{pql} eps^{ql}_{ab}
inline Rank3 dual(const Rank3& n, int which, const LeviCivita& eps) {
  if (which < 1 || which > 3)
    throw std::invalid_argument("dual: which must be 1, 2 or 3");
  Rank3 out;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const double e = eps.up2(p, q, a, b);
          if (e == 0.0) continue;
          for (int f = 0; f < 4; ++f) {
            switch (which) {
              case 1: out(f, a, b) += n(p, q, f) * e; break;
              case 2: out(f, a, b) += n(p, f, q) * e; break;
              default: out(f, a, b) += n(f, p, q) * e; break;
            }
          }
        }
  return out;
}

/// Weight-1/2 antisymmetrization over two of the three slots (0-based).
inline Rank3 antisymmetrize_pair(const Rank3& t, int slot_i, int slot_j) {
  if (slot_i < 0 || slot_j > 2 || slot_i >= slot_j)
    throw std::invalid_argument(
        "antisymmetrize_pair: slots must satisfy 0 <= i < j <= 2");
  Rank3 out;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        int idx[3] = {a, m, n};
        std::swap(idx[slot_i], idx[slot_j]);
        out(a, m, n) = 0.5 * (t(a, m, n) - t(idx[0], idx[1], idx[2]));
      }
  return out;
}

/// Slot layout for the antisymmetrized vector-metric products appearing in
/// the corrected source tensors.
enum class WedgePattern {
  antisym_12,  ///< (v_a g_{mn} - v_m g_{an}) / 2
  antisym_13,  ///< (v_a g_{nm} - v_n g_{am}) / 2
  antisym_23,  ///< (v_m g_{na} - v_n g_{ma}) / 2
};

/// v_{[x} g_{y]z} with the bracket slots chosen by `pattern`.
inline Rank3 vector_wedge_metric(const CoVector& v, const Metric& g,
                                 WedgePattern pattern) {
  Rank3 out;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        double w = 0.0;
        switch (pattern) {
          case WedgePattern::antisym_12:
            w = 0.5 * (v[a] * g(m, n) - v[m] * g(a, n));
            break;
          case WedgePattern::antisym_13:
            w = 0.5 * (v[a] * g(n, m) - v[n] * g(a, m));
            break;
          case WedgePattern::antisym_23:
            w = 0.5 * (v[m] * g(n, a) - v[n] * g(m, a));
            break;
        }
        out(a, m, n) = w;
      }
  return out;
}

}  // namespace tensolve
