#pragma once

#include <array>
#include <cstdint>

namespace tensolve {

/// The 30 coefficients of the tensor equation, stored in the grouping used
/// throughout the construction:
///   a[0..5]            a1..a6, permutation coefficients (scalars)
///   a7, a8, a9         a_{7i}, a_{8i}, a_{9i}, i = 1..3, trace coefficients
///   b[k][l]            b_{k+1,l+1}, dualization coefficients (pseudo-scalars)
///   b_vec              b1..b3, epsilon-times-trace coefficients
///   c                  c1..c3, pseudo-trace-times-metric coefficients
///
/// The renaming c1 = a_{74}, c2 = a_{84}, c3 = a_{94} extends the trace rows
/// to the pseudo-trace; a7x()/a8x()/a9x() expose that 4-wide view.
struct ParameterSet {
  std::array<double, 6> a{};
  std::array<double, 3> a7{};
  std::array<double, 3> a8{};
  std::array<double, 3> a9{};
  std::array<std::array<double, 3>, 3> b{};
  std::array<double, 3> b_vec{};
  std::array<double, 3> c{};

  /// a_{7i} for i in 0..3, where index 3 is the alias a_{74} == c1.
  double a7x(int i) const { return i < 3 ? a7[i] : c[0]; }
  double a8x(int i) const { return i < 3 ? a8[i] : c[1]; }
  double a9x(int i) const { return i < 3 ? a9[i] : c[2]; }
  double& a74() { return c[0]; }
  double& a84() { return c[1]; }
  double& a94() { return c[2]; }

  /// Fixed serialization order: a1..a6, a71..a73, a81..a83, a91..a93,
  /// b11..b33 row-major, b1..b3, c1..c3.
  std::array<double, 30> flat() const {
    std::array<double, 30> f{};
    int k = 0;
    for (double x : a) f[k++] = x;
    for (double x : a7) f[k++] = x;
    for (double x : a8) f[k++] = x;
    for (double x : a9) f[k++] = x;
    for (const auto& row : b)
      for (double x : row) f[k++] = x;
    for (double x : b_vec) f[k++] = x;
    for (double x : c) f[k++] = x;
    return f;
  }

  static ParameterSet from_flat(const std::array<double, 30>& f) {
    ParameterSet p;
    int k = 0;
    for (double& x : p.a) x = f[k++];
    for (double& x : p.a7) x = f[k++];
    for (double& x : p.a8) x = f[k++];
    for (double& x : p.a9) x = f[k++];
    for (auto& row : p.b)
      for (double& x : row) x = f[k++];
    for (double& x : p.b_vec) x = f[k++];
    for (double& x : p.c) x = f[k++];
    return p;
  }

  ParameterSet scaled(double t) const {
    auto f = flat();
    for (double& x : f) x *= t;
    return from_flat(f);
  }
};

/// a1 = 1, everything else 0; the equation degenerates to N = B.
inline ParameterSet identity_params() {
  ParameterSet p;
  p.a[0] = 1.0;
  return p;
}

namespace detail {

/// splitmix64; fixed algorithm so that random parameter sets are
/// bit-reproducible across platforms and standard libraries.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// uniform double in [-scale, scale]
  double uniform(double scale) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;  // [0,1)
    return (2.0 * u - 1.0) * scale;
  }
};

}  // namespace detail

/// 30 i.i.d. uniform draws in [-scale, scale], deterministic per seed.
inline ParameterSet random_params(std::uint64_t seed, double scale) {
  detail::SplitMix64 rng(seed);
  std::array<double, 30> f{};
  for (double& x : f) x = rng.uniform(scale);
  return ParameterSet::from_flat(f);
}

}  // namespace tensolve
