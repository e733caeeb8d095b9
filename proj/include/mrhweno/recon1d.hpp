#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "mrhweno/polynomial.hpp"
#include "mrhweno/quadrature.hpp"
#include "mrhweno/weights.hpp"

namespace mrhweno::recon1d {

// Moments of one variable on cells i-1, i, i+1.
struct Window {
  std::array<double, 3> u{};
  std::array<double, 3> v{};
};

// Values at xi = -1/2, -sqrt(5)/10, +sqrt(5)/10, +1/2.
using GLValues = std::array<double, 4>;

struct ReconstructionSet {
  std::array<Poly1D, 4> q;
  std::array<Poly1D, 4> p;
  std::array<double, 4> beta{};
  double tau = 0.0;
  std::array<double, 4> omega{};
  std::array<double, 4> gamma{};
};

namespace detail {

struct Tables {
  // coefficient = fit * data for q2 (u-1,u0,u1), q3 (+v0), q4 (+v-1,v0,v1).
  Eigen::Matrix3d fit2;
  Eigen::Matrix4d fit3;
  Eigen::Matrix<double, 6, 6> fit4;
  // beta quadratic forms for kappa = 2, 3, 5.
  Eigen::Matrix3d beta2;
  Eigen::Matrix4d beta3;
  Eigen::Matrix<double, 6, 6> beta4;
  // monomial values at the four Gauss-Lobatto nodes.
  Eigen::Matrix<double, 4, 6> eval;
};

template <int N>
Eigen::Matrix<double, N, N> beta_form(int kappa) {
  Eigen::Matrix<double, N, N> b = Eigen::Matrix<double, N, N>::Zero();
  for (int alpha = 1; alpha <= kappa; ++alpha) {
    for (int r = alpha; r < N; ++r) {
      for (int s = alpha; s < N; ++s) {
        double fr = 1.0;
        double fs = 1.0;
        for (int k = 0; k < alpha; ++k) {
          fr *= r - k;
          fs *= s - k;
        }
        b(r, s) += fr * fs * monomial_average(r + s - 2 * alpha, 0);
      }
    }
  }
  return b;
}

inline Tables build_tables() {
  Tables t;
  Eigen::Matrix3d a2;
  Eigen::Matrix4d a3;
  Eigen::Matrix<double, 6, 6> a4;
  for (int m = -1; m <= 1; ++m) {
    for (int n = 0; n < 6; ++n) {
      if (n < 3) a2(m + 1, n) = monomial_average(n, m);
      if (n < 4) a3(m + 1, n) = monomial_average(n, m);
      a4(m + 1, n) = monomial_average(n, m);
      a4(m + 4, n) = monomial_first_moment(n, m);
    }
  }
  for (int n = 0; n < 4; ++n) a3(3, n) = monomial_first_moment(n, 0);
  t.fit2 = a2.inverse();
  t.fit3 = a3.inverse();
  t.fit4 = a4.fullPivLu().inverse();
  t.beta2 = beta_form<3>(2);
  t.beta3 = beta_form<4>(3);
  t.beta4 = beta_form<6>(5);
  for (int k = 0; k < 4; ++k) {
    for (int n = 0; n < 6; ++n) t.eval(k, n) = std::pow(QuadratureRule::nodes[k], n);
  }
  return t;
}

inline const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

}  // namespace detail

inline std::array<Poly1D, 4> fit_q_polys(const Window& w) {
  const auto& t = detail::tables();
  std::array<Poly1D, 4> q;
  q[0].degree = 0;
  q[0].c[0] = w.u[1];
  const Eigen::Vector3d d2(w.u[0], w.u[1], w.u[2]);
  const Eigen::Vector3d c2 = t.fit2 * d2;
  q[1].degree = 2;
  for (int k = 0; k < 3; ++k) q[1].c[k] = c2[k];
  const Eigen::Vector4d c3 = t.fit3 * Eigen::Vector4d(w.u[0], w.u[1], w.u[2], w.v[1]);
  q[2].degree = 3;
  for (int k = 0; k < 4; ++k) q[2].c[k] = c3[k];
  Eigen::Matrix<double, 6, 1> d4;
  d4 << w.u[0], w.u[1], w.u[2], w.v[0], w.v[1], w.v[2];
  const Eigen::Matrix<double, 6, 1> c4 = t.fit4 * d4;
  q[3].degree = 5;
  for (int k = 0; k < 6; ++k) q[3].c[k] = c4[k];
  return q;
}

inline std::array<Poly1D, 4> build_p_polys(const std::array<Poly1D, 4>& q,
                                           const LinearWeights& lw = LinearWeights{}) {
  static constexpr std::array<int, 4> kDegree = {0, 2, 3, 5};
  const auto& m = lw.p_from_q();
  std::array<Poly1D, 4> p;
  for (int l = 0; l < 4; ++l) {
    p[l].degree = kDegree[l];
    for (int s = 0; s <= l; ++s) {
      for (int k = 0; k <= q[s].degree; ++k) p[l].c[k] += m[l][s] * q[s].c[k];
    }
  }
  return p;
}

// sum_{alpha=1..kappa} int_{-1/2}^{1/2} (d^alpha p / dxi^alpha)^2 dxi, kappa = 2, 3, 5 for
// levels 2, 3, 4. Equal to the dx-scaled physical definition.
inline double smoothness_beta(const Poly1D& p, int level) {
  const auto& t = detail::tables();
  switch (level) {
    case 2: {
      const Eigen::Vector3d c(p.c[0], p.c[1], p.c[2]);
      return c.dot(t.beta2 * c);
    }
    case 3: {
      const Eigen::Vector4d c(p.c[0], p.c[1], p.c[2], p.c[3]);
      return c.dot(t.beta3 * c);
    }
    default: {
      const Eigen::Map<const Eigen::Matrix<double, 6, 1>> c(p.c.data());
      return c.dot(t.beta4 * c);
    }
  }
}

// beta_1 from the WENO-Z blend of the two one-sided linear polynomials.
inline double beta1_special(double u_left, double u_center, double u_right,
                            std::array<double, 2>* weights = nullptr) {
  const double dl = u_center - u_left;
  const double dr = u_right - u_center;
  const double bl = dl * dl;
  const double br = dr * dr;
  const double tau = (br - bl) * (br - bl);
  const double wl = 0.5 * (1.0 + tau / (bl + kWenoEpsilon));
  const double wr = 0.5 * (1.0 + tau / (br + kWenoEpsilon));
  const double ol = wl / (wl + wr);
  const double orr = wr / (wl + wr);
  if (weights) *weights = {ol, orr};
  const double s = ol * dl + orr * dr;
  return s * s;
}

inline GLValues reconstruct_cell(const Window& w, const LinearWeights& lw = LinearWeights{},
                                 ReconstructionSet* set = nullptr) {
  const auto q = fit_q_polys(w);
  const auto p = build_p_polys(q, lw);
  std::array<double, 4> beta;
  beta[0] = beta1_special(w.u[0], w.u[1], w.u[2]);
  beta[1] = smoothness_beta(p[1], 2);
  beta[2] = smoothness_beta(p[2], 3);
  beta[3] = smoothness_beta(p[3], 4);
  const auto gamma = lw.final_weights();
  double tau = 0.0;
  const auto omega = nonlinear_weights(beta, gamma, &tau);

  Eigen::Matrix<double, 6, 1> c = Eigen::Matrix<double, 6, 1>::Zero();
  for (int l = 0; l < 4; ++l) {
    for (int k = 0; k <= p[l].degree; ++k) c[k] += omega[l] * p[l].c[k];
  }
  const Eigen::Vector4d vals = detail::tables().eval * c;
  if (set) {
    set->q = q;
    set->p = p;
    set->beta = beta;
    set->tau = tau;
    set->omega = omega;
    set->gamma = gamma;
  }
  return {vals[0], vals[1], vals[2], vals[3]};
}

// Weighted polynomial u_i(xi) = sum_l omega_l p_l(xi) from a completed reconstruction set.
inline double evaluate(const ReconstructionSet& s, double xi) {
  double r = 0.0;
  for (int l = 0; l < 4; ++l) r += s.omega[l] * s.p[l](xi);
  return r;
}

}  // namespace mrhweno::recon1d
