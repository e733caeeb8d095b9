#pragma once

#include <array>
#include <cmath>

namespace mrhweno {

// Guard added to smoothness indicators in the WENO-Z weight denominators.
inline constexpr double kWenoEpsilon = 1e-10;

// Linear weights of the nested hierarchy: gamma_{l1,l2} = base^(l1-1) / sum_{l<=l2} base^(l-1).
// Also the resulting combination p_l = sum_m to_q[l][m] q_m that makes sum_l gamma_{l,4} p_l = q_4.
class LinearWeights {
 public:
  explicit LinearWeights(double base = 10.0) : base_(base) {
    for (int l2 = 0; l2 < 4; ++l2) {
      double sum = 0.0;
      for (int l = 0; l <= l2; ++l) sum += std::pow(base, l);
      for (int l = 0; l <= l2; ++l) gamma_[l2][l] = std::pow(base, l) / sum;
    }
    to_q_ = {};
    to_q_[0][0] = 1.0;
    for (int l2 = 1; l2 < 4; ++l2) {
      const double diag = gamma_[l2][l2];
      to_q_[l2][l2] = 1.0 / diag;
      for (int l = 0; l < l2; ++l) {
        const double f = gamma_[l2][l] / diag;
        for (int m = 0; m < 4; ++m) to_q_[l2][m] -= f * to_q_[l][m];
      }
    }
  }

  double base() const { return base_; }
  // gamma_{l,4}, l = 1..4 (0-based).
  std::array<double, 4> final_weights() const { return gamma_[3]; }
  // gamma_{l1,l2} with 0-based indices.
  double gamma(int l1, int l2) const { return gamma_[l2][l1]; }
  const std::array<std::array<double, 4>, 4>& p_from_q() const { return to_q_; }

 private:
  double base_;
  std::array<std::array<double, 4>, 4> gamma_{};
  std::array<std::array<double, 4>, 4> to_q_{};
};

// WENO-Z weights with tau_4 = (mean_l |beta_4 - beta_l|)^2 over l = 1..3.
inline std::array<double, 4> nonlinear_weights(const std::array<double, 4>& beta,
                                               const std::array<double, 4>& gamma,
                                               double* tau_out = nullptr) {
  const double mean = (std::abs(beta[3] - beta[0]) + std::abs(beta[3] - beta[1]) +
                       std::abs(beta[3] - beta[2])) / 3.0;
  const double tau = mean * mean;
  std::array<double, 4> w{};
  double sum = 0.0;
  for (int l = 0; l < 4; ++l) {
    w[l] = gamma[l] * (1.0 + tau / (beta[l] + kWenoEpsilon));
    sum += w[l];
  }
  for (auto& x : w) x /= sum;
  if (tau_out) *tau_out = tau;
  return w;
}

}  // namespace mrhweno
