#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "tensolve/contractions.hpp"
#include "tensolve/metric.hpp"
#include "tensolve/tensor.hpp"
#include "test_util.hpp"

using namespace tensolve;
using tensolve::testing::random_covector;
using tensolve::testing::random_metric;
using tensolve::testing::random_tensor;

namespace {

// Generalized Kronecker bracket: 4! * delta^{[k}_a delta^l_m delta^r_b delta^{s]}_g.
double delta4_bracket(int a, int m, int b, int g, int k, int l, int r, int s) {
  const int up[4] = {k, l, r, s};
  const int lo[4] = {a, m, b, g};
  double sum = 0.0;
  int perm[4] = {0, 1, 2, 3};
  // enumerate S4 explicitly
  do {
    int sgn = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) sgn = -sgn;
    double prod = 1.0;
    for (int i = 0; i < 4; ++i) prod *= (up[perm[i]] == lo[i]) ? 1.0 : 0.0;
    sum += sgn * prod;
  } while (std::next_permutation(perm, perm + 4));
  return sum;
}

}  // namespace

TEST(Metric, EuclideanAndMinkowskiBasics) {
  const Metric e = Metric::euclidean();
  EXPECT_DOUBLE_EQ(e.det(), 1.0);
  EXPECT_EQ(e.sign_factor(), 1);
  const Metric m = Metric::minkowski();
  EXPECT_DOUBLE_EQ(m.det(), -1.0);
  EXPECT_EQ(m.sign_factor(), -1);
  EXPECT_DOUBLE_EQ(m.inv(0, 0), -1.0);
}

TEST(Metric, InverseIsExactToTolerance) {
  const Metric g = random_metric(3, true);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += g(i, k) * g.inv(k, j);
      EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-12);
    }
}

TEST(Metric, RejectsAsymmetric) {
  std::array<double, 16> g{};
  for (int i = 0; i < 4; ++i) g[4 * i + i] = 1.0;
  g[1] = 0.3;  // g01 != g10
  EXPECT_THROW(Metric{g}, std::invalid_argument);
}

TEST(Metric, RejectsDegenerate) {
  std::array<double, 16> g{};  // zero metric
  EXPECT_THROW(Metric{g}, std::invalid_argument);
  std::array<double, 16> g2{};
  g2[0] = 1.0;
  g2[5] = 1.0;
  g2[10] = 1.0;  // last row/col zero
  EXPECT_THROW(Metric{g2}, std::invalid_argument);
}

TEST(LeviCivita, OrientationAndNormalization) {
  // eps_0123 = +sqrt(|det g|)
  std::array<double, 16> g{};
  g[0] = 2.0;
  g[5] = 1.0;
  g[10] = 1.0;
  g[15] = 1.0;
  const Metric scaled(g);
  const LeviCivita eps(scaled);
  EXPECT_DOUBLE_EQ(eps.lo(0, 1, 2, 3), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(eps.up(0, 1, 2, 3), 1.0 / std::sqrt(2.0));

  const LeviCivita em(Metric::minkowski());
  EXPECT_DOUBLE_EQ(em.lo(0, 1, 2, 3), 1.0);
  EXPECT_DOUBLE_EQ(em.up(0, 1, 2, 3), -1.0);
}

TEST(LeviCivita, TotalAntisymmetry) {
  const LeviCivita eps(random_metric(11, false));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          EXPECT_DOUBLE_EQ(eps.lo(a, b, c, d), -eps.lo(b, a, c, d));
          EXPECT_DOUBLE_EQ(eps.lo(a, b, c, d), -eps.lo(a, c, b, d));
          EXPECT_DOUBLE_EQ(eps.lo(a, b, c, d), -eps.lo(a, b, d, c));
        }
}

TEST(LeviCivita, FullContractionIdentity) {
  // eps_{am bg} eps^{klrs} = sign * 4! * delta-bracket, any metric
  for (bool lorentzian : {false, true}) {
    const Metric g = random_metric(17, lorentzian);
    const LeviCivita eps(g);
    const double sign = g.sign_factor();
    for (int a = 0; a < 4; ++a)
      for (int m = 0; m < 4; ++m)
        for (int b = 0; b < 4; ++b)
          for (int gg = 0; gg < 4; ++gg)
            for (int k = 0; k < 4; ++k)
              for (int l = 0; l < 4; ++l) {
                // spot-check the remaining two indices to keep runtime sане
                const int r = (k + 1) % 4, s = (l + 2) % 4;
                const double lhs = eps.lo(a, m, b, gg) * eps.up(k, l, r, s);
                const double rhs =
                    sign * delta4_bracket(a, m, b, gg, k, l, r, s);
                EXPECT_NEAR(lhs, rhs, 1e-12);
              }
  }
}

TEST(LeviCivita, SingleContractionIdentity) {
  // eps_{m abg} eps^{m klr} = sign * 3! * delta^{[k}_a delta^l_b delta^{r]}_g
  for (bool lorentzian : {false, true}) {
    const Metric g = random_metric(23, lorentzian);
    const LeviCivita eps(g);
    const double sign = g.sign_factor();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int gg = 0; gg < 4; ++gg)
          for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l)
              for (int r = 0; r < 4; ++r) {
                double lhs = 0.0;
                for (int m = 0; m < 4; ++m)
                  lhs += eps.lo(m, a, b, gg) * eps.up(m, k, l, r);
                // 3! * antisymmetrized product over the three pairs
                const int up[3] = {k, l, r};
                const int lo[3] = {a, b, gg};
                const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                         {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
                const int sgns[6] = {1, 1, 1, -1, -1, -1};
                double rhs = 0.0;
                for (int p = 0; p < 6; ++p) {
                  double prod = 1.0;
                  for (int i = 0; i < 3; ++i)
                    prod *= (up[perms[p][i]] == lo[i]) ? 1.0 : 0.0;
                  rhs += sgns[p] * prod;
                }
                EXPECT_NEAR(lhs, sign * rhs, 1e-12);
              }
  }
}

TEST(Trace, ZeroTensor) {
  const Metric g = Metric::euclidean();
  for (int which : {1, 2, 3}) {
    const CoVector t = trace(Rank3{}, which, g);
    for (double x : t) EXPECT_EQ(x, 0.0);
  }
}

TEST(Trace, KroneckerTimesVector) {
  const Metric g = Metric::euclidean();
  Rank3 n;
  const CoVector v = {1, 0, 0, 0};
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int nu = 0; nu < 4; ++nu) n(a, m, nu) = (a == m ? 1.0 : 0.0) * v[nu];
  const CoVector t1 = trace(n, 1, g);
  EXPECT_DOUBLE_EQ(t1[0], 4.0);
  EXPECT_DOUBLE_EQ(t1[1], 0.0);
  EXPECT_DOUBLE_EQ(t1[2], 0.0);
  EXPECT_DOUBLE_EQ(t1[3], 0.0);
}

TEST(Trace, MatchesDirectSummation) {
  const Metric g = Metric::minkowski();
  const Rank3 n = random_tensor(5);
  for (int which : {1, 2, 3}) {
    const CoVector got = trace(n, which, g);
    for (int mu = 0; mu < 4; ++mu) {
      double want = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          if (which == 1) want += g.inv(a, b) * n(a, b, mu);
          if (which == 2) want += g.inv(a, b) * n(a, mu, b);
          if (which == 3) want += g.inv(a, b) * n(mu, a, b);
        }
      EXPECT_NEAR(got[mu], want, 1e-14);
    }
  }
}

TEST(Trace, RejectsBadWhich) {
  const Metric g = Metric::euclidean();
  EXPECT_THROW(trace(Rank3{}, 0, g), std::invalid_argument);
  EXPECT_THROW(trace(Rank3{}, 4, g), std::invalid_argument);
}

TEST(PseudoTrace, VanishesOnTotallySymmetric) {
  const Metric g = Metric::minkowski();
  const LeviCivita eps(g);
  const CoVector u = random_covector(9);
  Rank3 n;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int nu = 0; nu < 4; ++nu) n(a, m, nu) = u[a] * u[m] * u[nu];
  const CoVector t = pseudo_trace(n, eps, g);
  for (double x : t) EXPECT_NEAR(x, 0.0, 1e-12);
}

TEST(PseudoTrace, SinglePermutationReadoff) {
  const Metric g = Metric::euclidean();
  const LeviCivita eps(g);
  Rank3 n;
  n(1, 2, 3) = 1.0;
  const CoVector t = pseudo_trace(n, eps, g);
  EXPECT_DOUBLE_EQ(t[0], 1.0);
  EXPECT_DOUBLE_EQ(t[1], 0.0);
  EXPECT_DOUBLE_EQ(t[2], 0.0);
  EXPECT_DOUBLE_EQ(t[3], 0.0);
}

TEST(PseudoTrace, MatchesQuadrupleLoop) {
  const Metric g = Metric::minkowski();
  const LeviCivita eps(g);
  const Rank3 n = random_tensor(13);
  const CoVector got = pseudo_trace_upper(n, eps);
  for (int a = 0; a < 4; ++a) {
    double want = 0.0;
    for (int m = 0; m < 4; ++m)
      for (int p = 0; p < 4; ++p)
        for (int l = 0; l < 4; ++l) want += eps.up(a, m, p, l) * n(m, p, l);
    EXPECT_NEAR(got[a], want, 1e-14);
  }
}

TEST(Dual, ZeroAndBadWhich) {
  const LeviCivita eps(Metric::euclidean());
  const Rank3 d = dual(Rank3{}, 1, eps);
  for (double x : d.c) EXPECT_EQ(x, 0.0);
  EXPECT_THROW(dual(Rank3{}, 0, eps), std::invalid_argument);
  EXPECT_THROW(dual(Rank3{}, 4, eps), std::invalid_argument);
}

TEST(Dual, AntisymmetricInLastPair) {
  for (bool lorentzian : {false, true}) {
    const Metric g =
        lorentzian ? Metric::minkowski() : Metric::euclidean();
    const LeviCivita eps(g);
    const Rank3 n = random_tensor(21);
    for (int which : {1, 2, 3}) {
      const Rank3 m = dual(n, which, eps);
      for (int f = 0; f < 4; ++f)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            EXPECT_DOUBLE_EQ(m(f, a, b), -m(f, b, a));
    }
  }
}

TEST(Dual, TraceRelations) {
  // g^{mn} M^(1)_{mna} = -M_a, g^{mn} M^(2)_{mna} = +M_a,
  // g^{mn} M^(3)_{mna} = -M_a  -- no new traces appear. Holds for any
  // non-degenerate metric, so exercise a non-diagonal one as well.
  for (const Metric& g :
       {Metric::euclidean(), Metric::minkowski(),
        tensolve::testing::random_metric(61, true)}) {
    const LeviCivita eps(g);
    const Rank3 n = random_tensor(31);
    const CoVector m_lo = pseudo_trace(n, eps, g);
    const double expected_sign[3] = {-1.0, 1.0, -1.0};
    for (int which : {1, 2, 3}) {
      const Rank3 d = dual(n, which, eps);
      for (int a = 0; a < 4; ++a) {
        double got = 0.0;
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) got += g.inv(mu, nu) * d(mu, nu, a);
        EXPECT_NEAR(got, expected_sign[which - 1] * m_lo[a], 1e-12);
      }
    }
  }
}

TEST(AntisymmetrizePair, Examples) {
  const Rank3 zero_result =
      antisymmetrize_pair(random_tensor(1), 0, 1) -
      antisymmetrize_pair(antisymmetrize_pair(random_tensor(1), 0, 1), 0, 1);
  EXPECT_NEAR(max_abs(zero_result), 0.0, 1e-15);  // idempotent

  Rank3 t;
  t(0, 1, 2) = 1.0;
  const Rank3 a = antisymmetrize_pair(t, 0, 1);
  EXPECT_DOUBLE_EQ(a(0, 1, 2), 0.5);
  EXPECT_DOUBLE_EQ(a(1, 0, 2), -0.5);
  EXPECT_DOUBLE_EQ(max_abs(a), 0.5);

  // symmetric input annihilates
  Rank3 s;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) s(i, j, k) = (i + 1) * (j + 1) + k;
  EXPECT_NEAR(max_abs(antisymmetrize_pair(s, 0, 1)), 0.0, 1e-15);

  EXPECT_THROW(antisymmetrize_pair(t, 1, 1), std::invalid_argument);
  EXPECT_THROW(antisymmetrize_pair(t, 2, 1), std::invalid_argument);
}

TEST(VectorWedgeMetric, Examples) {
  const Metric g = Metric::euclidean();
  const CoVector v = {1, 0, 0, 0};
  const Rank3 w = vector_wedge_metric(v, g, WedgePattern::antisym_12);
  EXPECT_DOUBLE_EQ(w(0, 1, 1), 0.5);
  EXPECT_DOUBLE_EQ(w(1, 0, 1), -0.5);
  EXPECT_DOUBLE_EQ(w(0, 0, 0), 0.0);

  // contraction with g^{am} vanishes (antisymmetric against symmetric)
  const CoVector r = random_covector(77);
  const Rank3 wr = vector_wedge_metric(r, g, WedgePattern::antisym_12);
  for (int n = 0; n < 4; ++n) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int m = 0; m < 4; ++m) s += g.inv(a, m) * wr(a, m, n);
    EXPECT_NEAR(s, 0.0, 1e-14);
  }

  const Rank3 wz = vector_wedge_metric(CoVector{}, g, WedgePattern::antisym_23);
  EXPECT_EQ(max_abs(wz), 0.0);
}

TEST(Linearity, AllOperationsLinearInTensorArgument) {
  const Metric g = Metric::minkowski();
  const LeviCivita eps(g);
  const Rank3 x = random_tensor(41), y = random_tensor(42);
  const double a = 1.375, b = -0.625;  // exactly representable
  const Rank3 z = a * x + b * y;
  for (int which : {1, 2, 3}) {
    const CoVector tz = trace(z, which, g);
    const CoVector tx = trace(x, which, g), ty = trace(y, which, g);
    for (int mu = 0; mu < 4; ++mu)
      EXPECT_NEAR(tz[mu], a * tx[mu] + b * ty[mu], 1e-12);
    const Rank3 dz = dual(z, which, eps);
    const Rank3 want = a * dual(x, which, eps) + b * dual(y, which, eps);
    EXPECT_LT(max_abs_diff(dz, want), 1e-12);
  }
  const CoVector pz = pseudo_trace(z, eps, g);
  const CoVector px = pseudo_trace(x, eps, g), py = pseudo_trace(y, eps, g);
  for (int mu = 0; mu < 4; ++mu)
    EXPECT_NEAR(pz[mu], a * px[mu] + b * py[mu], 1e-12);
}

// ---------------------------------------------------------------------------
// Derivation identities: the epsilon contractions of the duals expand into
// permutations and traces of N with fixed small-integer weights.
// ---------------------------------------------------------------------------

namespace {

// eps^{am}_{bg} T_{amn} -> result indexed (b, g, n)
Rank3 eps_contract_front(const Rank3& t, const LeviCivita& eps) {
  Rank3 out;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int b = 0; b < 4; ++b)
        for (int g = 0; g < 4; ++g) {
          const double e = eps.up2(a, m, b, g);
          if (e == 0.0) continue;
          for (int n = 0; n < 4; ++n) out(b, g, n) += e * t(a, m, n);
        }
  return out;
}

// eps^{am}_{bg} T_{nam} -> result indexed (b, g, n)
Rank3 eps_contract_back(const Rank3& t, const LeviCivita& eps) {
  Rank3 out;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int b = 0; b < 4; ++b)
        for (int g = 0; g < 4; ++g) {
          const double e = eps.up2(a, m, b, g);
          if (e == 0.0) continue;
          for (int n = 0; n < 4; ++n) out(b, g, n) += e * t(n, a, m);
        }
  return out;
}

// The three bracket placements of the expansion identities, written out as
// tensors in the contraction's output order (b, g, n):
//   which 1: N_{[bg]n}, which 2: N_{[b|n|g]}, which 3: N_{n[bg]}.
Rank3 bracket_tensor(const Rank3& n, int which) {
  Rank3 out;
  for (int b = 0; b < 4; ++b)
    for (int g = 0; g < 4; ++g)
      for (int nu = 0; nu < 4; ++nu) {
        double v = 0.0;
        switch (which) {
          case 1: v = 0.5 * (n(b, g, nu) - n(g, b, nu)); break;
          case 2: v = 0.5 * (n(b, nu, g) - n(g, nu, b)); break;
          default: v = 0.5 * (n(nu, b, g) - n(nu, g, b)); break;
        }
        out(b, g, nu) = v;
      }
  return out;
}

}  // namespace

TEST(DualContractionIdentities, FrontEqualsCycled) {
  // eps^{am}_{bg} M^(i)_{amn} = eps^{am}_{bg} M^(i)_{mna} for all i
  for (bool lorentzian : {false, true}) {
    const Metric g = lorentzian ? Metric::minkowski() : Metric::euclidean();
    const LeviCivita eps(g);
    for (int rep = 0; rep < 20; ++rep) {
      const Rank3 n = random_tensor(100 + rep);
      for (int i : {1, 2, 3}) {
        const Rank3 m = dual(n, i, eps);
        Rank3 cycled;  // M_{mna} read as a tensor in (a,m,n)... build directly
        for (int x = 0; x < 4; ++x)
          for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) cycled(x, y, z) = m(y, z, x);
        const Rank3 lhs = eps_contract_front(m, eps);
        const Rank3 rhs = eps_contract_front(cycled, eps);
        EXPECT_LT(tensolve::testing::rel_diff(lhs, rhs), 1e-10);
      }
    }
  }
}

TEST(DualContractionIdentities, ExpansionInTracesAndBrackets) {
  // eps^{am}_{bg} M^(1)_{amn} = 2(-1)^{s+1} [ (N2-N3)_{[b} g_{g]n} + N_{[bg]n} ]
  // eps^{am}_{bg} M^(2)_{amn} = 2(-1)^{s+1} [ (N1-N3)_{[b} g_{g]n} + N_{[b|n|g]} ]
  // eps^{am}_{bg} M^(3)_{amn} = 2(-1)^{s+1} [ (N1-N2)_{[b} g_{g]n} + N_{n[bg]} ]
  for (bool lorentzian : {false, true}) {
    const Metric g = lorentzian ? Metric::minkowski() : Metric::euclidean();
    const LeviCivita eps(g);
    const double pref = 2.0 * (lorentzian ? 1.0 : -1.0);  // 2(-1)^{s+1}
    for (int rep = 0; rep < 30; ++rep) {
      const Rank3 n = random_tensor(200 + rep);
      const CoVector t1 = trace(n, 1, g), t2 = trace(n, 2, g),
                     t3 = trace(n, 3, g);
      auto diffvec = [](const CoVector& a, const CoVector& b) {
        CoVector d{};
        for (int i = 0; i < 4; ++i) d[i] = a[i] - b[i];
        return d;
      };
      const struct {
        int which;
        CoVector tracediff;
        Rank3 bracket;
      } cases[3] = {
          {1, diffvec(t2, t3), bracket_tensor(n, 1)},
          {2, diffvec(t1, t3), bracket_tensor(n, 2)},
          {3, diffvec(t1, t2), bracket_tensor(n, 3)},
      };
      for (const auto& c : cases) {
        const Rank3 lhs = eps_contract_front(dual(n, c.which, eps), eps);
        const Rank3 rhs =
            pref * (vector_wedge_metric(c.tracediff, g,
                                        WedgePattern::antisym_12) +
                    c.bracket);
        EXPECT_LT(tensolve::testing::rel_diff(lhs, rhs), 1e-10)
            << "which=" << c.which << " lorentzian=" << lorentzian;
      }
    }
  }
}

TEST(DualContractionIdentities, BackPlacementExpansion) {
  // eps^{am}_{bg} M^(1)_{nam} = 4(-1)^s N_{[bg]n}; analogues for M^(2), M^(3)
  for (bool lorentzian : {false, true}) {
    const Metric g = lorentzian ? Metric::minkowski() : Metric::euclidean();
    const LeviCivita eps(g);
    const double pref = 4.0 * g.sign_factor();
    for (int rep = 0; rep < 30; ++rep) {
      const Rank3 n = random_tensor(300 + rep);
      for (int which : {1, 2, 3}) {
        const Rank3 lhs = eps_contract_back(dual(n, which, eps), eps);
        const Rank3 rhs = pref * bracket_tensor(n, which);
        EXPECT_LT(tensolve::testing::rel_diff(lhs, rhs), 1e-10);
      }
    }
  }
}
