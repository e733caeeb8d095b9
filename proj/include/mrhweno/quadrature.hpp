#pragma once

#include <array>
#include <cmath>

namespace mrhweno {

// Four-point Gauss-Lobatto rule on the unit cell [-1/2, 1/2]; exact to degree 5.
struct QuadratureRule {
  static constexpr int size = 4;
  static constexpr std::array<double, 4> weights = {1.0 / 12.0, 5.0 / 12.0, 5.0 / 12.0,
                                                    1.0 / 12.0};
  static inline const std::array<double, 4> nodes = {-0.5, -std::sqrt(5.0) / 10.0,
                                                     std::sqrt(5.0) / 10.0, 0.5};
};

using GaussLobatto = QuadratureRule;

// Five-point Gauss-Legendre rule on [-1/2, 1/2]; exact to degree 9. Used for initial moments
// and reference cell averages.
struct GaussLegendre5 {
  static constexpr int size = 5;
  static inline const std::array<double, 5> nodes = {
      -0.5 * std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0,
      -0.5 * std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0, 0.0,
      0.5 * std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0,
      0.5 * std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0};
  static inline const std::array<double, 5> weights = {
      0.5 * (322.0 - 13.0 * std::sqrt(70.0)) / 900.0, 0.5 * (322.0 + 13.0 * std::sqrt(70.0)) / 900.0,
      0.5 * 128.0 / 225.0, 0.5 * (322.0 + 13.0 * std::sqrt(70.0)) / 900.0,
      0.5 * (322.0 - 13.0 * std::sqrt(70.0)) / 900.0};
};

}  // namespace mrhweno
