#pragma once

#include <array>
#include <cmath>

namespace mrhweno {

// Integral of xi^n over the unit cell centered at offset m, i.e. over [m - 1/2, m + 1/2].
inline double monomial_average(int n, int m) {
  return (std::pow(m + 0.5, n + 1) - std::pow(m - 0.5, n + 1)) / (n + 1);
}

// Integral of xi^n (xi - m) over [m - 1/2, m + 1/2]: the first-moment functional of cell m.
inline double monomial_first_moment(int n, int m) {
  return monomial_average(n + 1, m) - m * monomial_average(n, m);
}

// Polynomial of degree <= 5 in the local coordinate xi = (x - x_i) / dx.
struct Poly1D {
  std::array<double, 6> c{};
  int degree = 0;

  double operator()(double xi) const {
    double r = 0.0;
    for (int k = degree; k >= 0; --k) r = r * xi + c[k];
    return r;
  }
  // d^order/dxi^order evaluated at xi.
  double derivative(double xi, int order) const {
    double r = 0.0;
    for (int k = degree; k >= order; --k) {
      double f = 1.0;
      for (int s = 0; s < order; ++s) f *= k - s;
      r = r * xi + f * c[k];
    }
    return r;
  }
};

// Bivariate monomials xi^a eta^b, a + b <= 5, ordered by total degree so that the bases of
// degree 0, 2, 3 and 5 are prefixes of length 1, 6, 10 and 21.
inline constexpr int kMonomials2D = 21;

inline constexpr int monomial_count_2d(int degree) { return (degree + 1) * (degree + 2) / 2; }

struct MonomialExponents {
  std::array<int, kMonomials2D> a{};
  std::array<int, kMonomials2D> b{};
};

inline constexpr MonomialExponents make_monomial_exponents() {
  MonomialExponents e;
  int idx = 0;
  for (int d = 0; d <= 5; ++d) {
    for (int b = 0; b <= d; ++b) {
      e.a[idx] = d - b;
      e.b[idx] = b;
      ++idx;
    }
  }
  return e;
}

inline constexpr MonomialExponents kExponents2D = make_monomial_exponents();

inline constexpr int monomial_index_2d(int a, int b) {
  const int d = a + b;
  return monomial_count_2d(d - 1) + b;
}

struct Poly2D {
  std::array<double, kMonomials2D> c{};
  int degree = 0;

  double operator()(double xi, double eta) const {
    double r = 0.0;
    const int n = monomial_count_2d(degree);
    for (int k = 0; k < n; ++k) {
      r += c[k] * std::pow(xi, kExponents2D.a[k]) * std::pow(eta, kExponents2D.b[k]);
    }
    return r;
  }
};

}  // namespace mrhweno
