#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "mrhweno/quadrature.hpp"

namespace mrhweno {

// Degree parameter of the KXRCF normalization h^((l+1)/3).
inline constexpr int kKxrcfDegree = 5;

// Per-cell troubled flags over the interior cells (row-major in 2D).
struct TroubledMask {
  std::vector<char> flags;
  int count = 0;

  void reset(std::size_t cells) {
    flags.assign(cells, 0);
    count = 0;
  }
  void mark(std::size_t cell) {
    if (!flags[cell]) {
      flags[cell] = 1;
      ++count;
    }
  }
  double fraction() const {
    return flags.empty() ? 0.0 : static_cast<double>(count) / static_cast<double>(flags.size());
  }
};

inline double kxrcf_scale(double h) { return std::pow(h, (kKxrcfDegree + 1) / 3.0); }

inline double inflow_selector(double v) { return v > 0.0 ? 1.0 : 0.0; }

// KXRCF ratio of a 1D cell. `cell`, `left` and `right` are the four Gauss-Lobatto values of the
// indicator variable in the cell and its neighbors; v_left / v_right are face velocities.
inline double kxrcf_ratio_1d(const std::array<double, 4>& cell, const std::array<double, 4>& left,
                             const std::array<double, 4>& right, double v_left, double v_right,
                             double h) {
  double norm = 0.0;
  for (double x : cell) norm = std::max(norm, std::abs(x));
  if (norm == 0.0) return 0.0;
  const double jump = (cell[0] - left[3]) * inflow_selector(v_left) +
                      (cell[3] - right[0]) * inflow_selector(-v_right);
  return std::abs(jump) / (kxrcf_scale(h) * norm);
}

inline bool kxrcf_1d(const std::array<double, 4>& cell, const std::array<double, 4>& left,
                     const std::array<double, 4>& right, double v_left, double v_right, double h) {
  return kxrcf_ratio_1d(cell, left, right, v_left, v_right, h) > 1.0;
}

// Neighbor GL data of a 2D cell on the 4x4 tensor grid (index k + 4 l).
struct Neighbors2D {
  const std::array<double, 16>* left;
  const std::array<double, 16>* right;
  const std::array<double, 16>* bottom;
  const std::array<double, 16>* top;
};

// Face velocities of the four faces: normal velocity averaged along each face.
struct FaceVelocities2D {
  double left = 0.0;
  double right = 0.0;
  double bottom = 0.0;
  double top = 0.0;
};

// KXRCF ratio of a 2D cell: inflow-face jump integrals (four-point Gauss-Lobatto rule along
// each face) divided by the inflow length, h^2 and the maximum GL magnitude, h = min(dx, dy).
inline double kxrcf_ratio_2d(const std::array<double, 16>& cell, const Neighbors2D& nb,
                             const FaceVelocities2D& vel, double dx, double dy) {
  double norm = 0.0;
  for (double x : cell) norm = std::max(norm, std::abs(x));
  if (norm == 0.0) return 0.0;
  const auto& w = GaussLobatto::weights;
  double jump = 0.0;
  double length = 0.0;
  if (inflow_selector(vel.left) > 0.0) {
    for (int l = 0; l < 4; ++l) jump += dy * w[l] * (cell[4 * l] - (*nb.left)[3 + 4 * l]);
    length += dy;
  }
  if (inflow_selector(-vel.right) > 0.0) {
    for (int l = 0; l < 4; ++l) jump += dy * w[l] * (cell[3 + 4 * l] - (*nb.right)[4 * l]);
    length += dy;
  }
  if (inflow_selector(vel.bottom) > 0.0) {
    for (int k = 0; k < 4; ++k) jump += dx * w[k] * (cell[k] - (*nb.bottom)[k + 12]);
    length += dx;
  }
  if (inflow_selector(-vel.top) > 0.0) {
    for (int k = 0; k < 4; ++k) jump += dx * w[k] * (cell[k + 12] - (*nb.top)[k]);
    length += dx;
  }
  if (length == 0.0) return 0.0;
  return std::abs(jump) / (length * kxrcf_scale(std::min(dx, dy)) * norm);
}

inline bool kxrcf_2d(const std::array<double, 16>& cell, const Neighbors2D& nb,
                     const FaceVelocities2D& vel, double dx, double dy) {
  return kxrcf_ratio_2d(cell, nb, vel, dx, dy) > 1.0;
}

// First moment of the quartic matching the five moments {u_{i-1}, u_i, u_{i+1}, v_{i-1}, v_{i+1}}.
inline double modify_moment_1d(double u_left, double u_right, double v_left, double v_right) {
  return -5.0 / 76.0 * u_left + 5.0 / 76.0 * u_right - 11.0 / 38.0 * (v_left + v_right);
}

// Dimension-by-dimension modification: v from the x-row, w from the y-column.
inline std::pair<double, double> modify_moments_2d(double u_left, double u_right, double v_left,
                                                   double v_right, double u_bottom, double u_top,
                                                   double w_bottom, double w_top) {
  return {modify_moment_1d(u_left, u_right, v_left, v_right),
          modify_moment_1d(u_bottom, u_top, w_bottom, w_top)};
}

}  // namespace mrhweno
