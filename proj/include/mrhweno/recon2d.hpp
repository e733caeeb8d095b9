#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <vector>

#include "mrhweno/polynomial.hpp"
#include "mrhweno/quadrature.hpp"
#include "mrhweno/weights.hpp"

namespace mrhweno::recon2d {

// Moments of one variable on the 3x3 stencil. Label k = 1..9 is stored at k-1, with
// k-1 = (di + 1) + 3 (dj + 1) for the neighbor at offset (di, dj); label 5 is the target cell.
struct Window {
  std::array<double, 9> u{};
  std::array<double, 9> v{};
  std::array<double, 9> w{};
};

inline constexpr int label_offset_x(int label) { return (label - 1) % 3 - 1; }
inline constexpr int label_offset_y(int label) { return (label - 1) / 3 - 1; }

// Values on the 4x4 tensor Gauss-Lobatto grid, index k + 4 l for (xi_k, eta_l). The left,
// right, bottom and top face points are k = 0, k = 3, l = 0 and l = 3.
using GLValues = std::array<double, 16>;

inline constexpr int gl_index(int k, int l) { return k + 4 * l; }

struct ReconstructionSet {
  std::array<Poly2D, 4> q;
  std::array<Poly2D, 4> p;
  std::array<double, 4> beta{};
  double tau = 0.0;
  std::array<double, 4> omega{};
  std::array<double, 4> gamma{};
  std::array<double, 4> omega1{};  // weights of the four planes behind beta_1
};

// Data layouts of the least-squares fits.
inline constexpr std::array<int, 7> kQ4XMomentLabels = {1, 3, 4, 5, 6, 7, 9};
inline constexpr std::array<int, 7> kQ4YMomentLabels = {1, 2, 3, 5, 7, 8, 9};

using Fit2 = Eigen::Matrix<double, 6, 9, Eigen::RowMajor>;
using Fit3 = Eigen::Matrix<double, 10, 11, Eigen::RowMajor>;
using Fit4 = Eigen::Matrix<double, 21, 23, Eigen::RowMajor>;

namespace detail {

enum class Functional { average, x_moment, y_moment };

struct Condition {
  Functional kind;
  int label;
};

inline double functional_value(const Condition& c, int a, int b) {
  const int mx = label_offset_x(c.label);
  const int my = label_offset_y(c.label);
  switch (c.kind) {
    case Functional::average:
      return monomial_average(a, mx) * monomial_average(b, my);
    case Functional::x_moment:
      return monomial_first_moment(a, mx) * monomial_average(b, my);
    case Functional::y_moment:
      return monomial_average(a, mx) * monomial_first_moment(b, my);
  }
  return 0.0;
}

// Operator from the condition data to the monomial coefficients: exact match of the center
// cell average, equal-weight least squares for everything else (KKT system).
inline Eigen::MatrixXd constrained_fit(const std::vector<Condition>& conds, int ncoef) {
  // Solved in extended precision; the normal equations square the conditioning.
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const int m = static_cast<int>(conds.size());
  int center = -1;
  Mat a(m, ncoef);
  for (int r = 0; r < m; ++r) {
    if (conds[r].kind == Functional::average && conds[r].label == 5) center = r;
    for (int k = 0; k < ncoef; ++k) {
      a(r, k) = functional_value(conds[r], kExponents2D.a[k], kExponents2D.b[k]);
    }
  }
  Mat ls = a;
  ls.row(center).setZero();
  Mat kkt = Mat::Zero(ncoef + 1, ncoef + 1);
  kkt.topLeftCorner(ncoef, ncoef) = ls.transpose() * ls;
  kkt.block(0, ncoef, ncoef, 1) = a.row(center).transpose();
  kkt.block(ncoef, 0, 1, ncoef) = a.row(center);
  Mat rhs = Mat::Zero(ncoef + 1, m);
  rhs.topRows(ncoef) = ls.transpose();
  rhs(ncoef, center) = 1.0L;
  const Mat sol = kkt.fullPivLu().solve(rhs);
  return sol.topRows(ncoef).cast<double>();
}

inline std::vector<Condition> q2_conditions() {
  std::vector<Condition> c;
  for (int k = 1; k <= 9; ++k) c.push_back({Functional::average, k});
  return c;
}

inline std::vector<Condition> q3_conditions() {
  auto c = q2_conditions();
  c.push_back({Functional::x_moment, 5});
  c.push_back({Functional::y_moment, 5});
  return c;
}

inline std::vector<Condition> q4_conditions() {
  auto c = q2_conditions();
  for (int k : kQ4XMomentLabels) c.push_back({Functional::x_moment, k});
  for (int k : kQ4YMomentLabels) c.push_back({Functional::y_moment, k});
  return c;
}

// Condition matrix (rows = functionals applied to monomials), for rank checks in tests.
inline Eigen::MatrixXd condition_matrix(const std::vector<Condition>& conds, int ncoef) {
  Eigen::MatrixXd a(conds.size(), ncoef);
  for (int r = 0; r < static_cast<int>(conds.size()); ++r) {
    for (int k = 0; k < ncoef; ++k) {
      a(r, k) = functional_value(conds[r], kExponents2D.a[k], kExponents2D.b[k]);
    }
  }
  return a;
}

struct Fits {
  Fit2 fit2;
  Fit3 fit3;
  Fit4 fit4;
  Eigen::Matrix<double, 16, 21, Eigen::RowMajor> eval;
};

inline const Fits& fits() {
  static const Fits f = [] {
    Fits r;
    r.fit2 = constrained_fit(q2_conditions(), 6);
    r.fit3 = constrained_fit(q3_conditions(), 10);
    r.fit4 = constrained_fit(q4_conditions(), 21);
    for (int l = 0; l < 4; ++l) {
      for (int k = 0; k < 4; ++k) {
        for (int n = 0; n < kMonomials2D; ++n) {
          r.eval(gl_index(k, l), n) = std::pow(QuadratureRule::nodes[k], kExponents2D.a[n]) *
                                      std::pow(QuadratureRule::nodes[l], kExponents2D.b[n]);
        }
      }
    }
    return r;
  }();
  return f;
}

// Quadratic form of sum_{1<=|alpha|<=kappa} |I|^{|alpha|-1} int_I (D^alpha p)^2 in local
// coefficients; `ratio` = dy/dx enters as ratio^(alpha_x - alpha_y).
inline Eigen::MatrixXd beta_form(int ncoef, int kappa, double ratio) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(ncoef, ncoef);
  auto falling = [](int n, int k) {
    double f = 1.0;
    for (int s = 0; s < k; ++s) f *= n - s;
    return f;
  };
  for (int order = 1; order <= kappa; ++order) {
    for (int ax = 0; ax <= order; ++ax) {
      const int ay = order - ax;
      const double scale = std::pow(ratio, ax - ay);
      for (int r = 0; r < ncoef; ++r) {
        const int ra = kExponents2D.a[r];
        const int rb = kExponents2D.b[r];
        if (ra < ax || rb < ay) continue;
        for (int s = 0; s < ncoef; ++s) {
          const int sa = kExponents2D.a[s];
          const int sb = kExponents2D.b[s];
          if (sa < ax || sb < ay) continue;
          b(r, s) += scale * falling(ra, ax) * falling(rb, ay) * falling(sa, ax) *
                     falling(sb, ay) * monomial_average(ra + sa - 2 * ax, 0) *
                     monomial_average(rb + sb - 2 * ay, 0);
        }
      }
    }
  }
  return b;
}

}  // namespace detail

// Fitted hierarchy for the 3x3 stencil; reconstruction operators depend only on dy/dx.
class Reconstructor {
 public:
  explicit Reconstructor(double dx = 1.0, double dy = 1.0, LinearWeights lw = LinearWeights{})
      : ratio_(dy / dx), lw_(lw), gamma_(lw.final_weights()) {
    beta2_ = detail::beta_form(6, 2, ratio_);
    beta3_ = detail::beta_form(10, 3, ratio_);
    beta4_ = detail::beta_form(21, 5, ratio_);
    const auto& m = lw_.p_from_q();
    for (int l = 0; l < 4; ++l) {
      for (int s = 0; s < 4; ++s) pq_[l][s] = m[l][s];
    }
  }

  double ratio() const { return ratio_; }
  const LinearWeights& linear_weights() const { return lw_; }

  std::array<Poly2D, 4> fit_q(const Window& w) const {
    const auto& f = detail::fits();
    std::array<Poly2D, 4> q;
    q[0].degree = 0;
    q[0].c[0] = w.u[4];
    // Fitting deviations from the cell average keeps constant states exact.
    const Eigen::Matrix<double, 9, 1> u =
        Eigen::Map<const Eigen::Matrix<double, 9, 1>>(w.u.data()).array() - w.u[4];
    Eigen::Map<Eigen::Matrix<double, 6, 1>>(q[1].c.data()) = f.fit2 * u;
    q[1].degree = 2;
    Eigen::Matrix<double, 11, 1> d3;
    d3 << u, w.v[4], w.w[4];
    Eigen::Map<Eigen::Matrix<double, 10, 1>>(q[2].c.data()) = f.fit3 * d3;
    q[2].degree = 3;
    Eigen::Matrix<double, 23, 1> d4;
    d4.head<9>() = u;
    for (int k = 0; k < 7; ++k) {
      d4[9 + k] = w.v[kQ4XMomentLabels[k] - 1];
      d4[16 + k] = w.w[kQ4YMomentLabels[k] - 1];
    }
    Eigen::Map<Eigen::Matrix<double, 21, 1>>(q[3].c.data()) = f.fit4 * d4;
    q[3].degree = 5;
    for (int l = 1; l < 4; ++l) q[l].c[0] += w.u[4];
    return q;
  }

  std::array<Poly2D, 4> build_p(const std::array<Poly2D, 4>& q) const {
    static constexpr std::array<int, 4> kDegree = {0, 2, 3, 5};
    std::array<Poly2D, 4> p;
    for (int l = 0; l < 4; ++l) {
      p[l].degree = kDegree[l];
      for (int s = 0; s <= l; ++s) {
        const int n = monomial_count_2d(q[s].degree);
        for (int k = 0; k < n; ++k) p[l].c[k] += pq_[l][s] * q[s].c[k];
      }
    }
    return p;
  }

  double smoothness_beta(const Poly2D& p, int level) const {
    switch (level) {
      case 2: {
        const Eigen::Map<const Eigen::Matrix<double, 6, 1>> c(p.c.data());
        return c.dot(beta2_ * c);
      }
      case 3: {
        const Eigen::Map<const Eigen::Matrix<double, 10, 1>> c(p.c.data());
        return c.dot(beta3_ * c);
      }
      default: {
        const Eigen::Map<const Eigen::Matrix<double, 21, 1>> c(p.c.data());
        return c.dot(beta4_ * c);
      }
    }
  }

  // beta_1 from the WENO-Z blend of the four corner planes through cells {4,5,8}, {5,6,8},
  // {2,5,6} and {2,4,5}.
  double beta1(double u2, double u4, double u5, double u6, double u8,
               std::array<double, 4>* weights = nullptr) const {
    const std::array<double, 4> sx = {u5 - u4, u6 - u5, u6 - u5, u5 - u4};
    const std::array<double, 4> sy = {u8 - u5, u8 - u5, u5 - u2, u5 - u2};
    std::array<double, 4> b;
    for (int k = 0; k < 4; ++k) b[k] = sx[k] * sx[k] + sy[k] * sy[k];
    double spread = 0.0;
    for (int k = 0; k < 4; ++k) {
      for (int l = k + 1; l < 4; ++l) spread += std::abs(b[k] - b[l]);
    }
    const double tau = (spread / 6.0) * (spread / 6.0);
    std::array<double, 4> om;
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
      om[k] = 0.25 * (1.0 + tau / (b[k] + kWenoEpsilon));
      sum += om[k];
    }
    double gx = 0.0;
    double gy = 0.0;
    for (int k = 0; k < 4; ++k) {
      om[k] /= sum;
      gx += om[k] * sx[k];
      gy += om[k] * sy[k];
    }
    if (weights) *weights = om;
    return ratio_ * gx * gx + gy * gy / ratio_;
  }

  void reconstruct(const Window& w, GLValues& out, ReconstructionSet* set = nullptr) const {
    const auto q = fit_q(w);
    const auto p = build_p(q);
    std::array<double, 4> beta;
    std::array<double, 4> om1;
    beta[0] = beta1(w.u[1], w.u[3], w.u[4], w.u[5], w.u[7], &om1);
    beta[1] = smoothness_beta(p[1], 2);
    beta[2] = smoothness_beta(p[2], 3);
    beta[3] = smoothness_beta(p[3], 4);
    double tau = 0.0;
    const auto omega = nonlinear_weights(beta, gamma_, &tau);
    Eigen::Matrix<double, 21, 1> c = Eigen::Matrix<double, 21, 1>::Zero();
    for (int l = 0; l < 4; ++l) {
      const int n = monomial_count_2d(p[l].degree);
      for (int k = 0; k < n; ++k) c[k] += omega[l] * p[l].c[k];
    }
    Eigen::Map<Eigen::Matrix<double, 16, 1>>(out.data()) = detail::fits().eval * c;
    if (set) {
      set->q = q;
      set->p = p;
      set->beta = beta;
      set->tau = tau;
      set->omega = omega;
      set->gamma = gamma_;
      set->omega1 = om1;
    }
  }

  GLValues reconstruct(const Window& w, ReconstructionSet* set = nullptr) const {
    GLValues out;
    reconstruct(w, out, set);
    return out;
  }

 private:
  double ratio_;
  LinearWeights lw_;
  std::array<double, 4> gamma_;
  std::array<std::array<double, 4>, 4> pq_{};
  Eigen::Matrix<double, 6, 6> beta2_;
  Eigen::Matrix<double, 10, 10> beta3_;
  Eigen::Matrix<double, 21, 21> beta4_;
};

inline double evaluate(const ReconstructionSet& s, double xi, double eta) {
  double r = 0.0;
  for (int l = 0; l < 4; ++l) r += s.omega[l] * s.p[l](xi, eta);
  return r;
}

}  // namespace mrhweno::recon2d
