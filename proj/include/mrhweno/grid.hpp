#pragma once

#include <cmath>
#include <string>

#include "mrhweno/errors.hpp"

namespace mrhweno {

inline constexpr int kGhostLayers = 2;

struct Grid1D {
  double x_lo = 0.0;
  double x_hi = 1.0;
  int n = 0;
  double dx = 0.0;
  static constexpr int n_ghost = kGhostLayers;

  double center(int i) const { return x_lo + (i + 0.5) * dx; }
  double face_left(int i) const { return x_lo + i * dx; }
  double length() const { return x_hi - x_lo; }
};

struct Grid2D {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  double dy = 0.0;
  static constexpr int n_ghost = kGhostLayers;

  double xc(int i) const { return x_lo + (i + 0.5) * dx; }
  double yc(int j) const { return y_lo + (j + 0.5) * dy; }
  double area() const { return (x_hi - x_lo) * (y_hi - y_lo); }
};

inline Grid1D build_grid(double x_lo, double x_hi, int n) {
  if (n < 4) throw ConfigError("grid needs at least 4 cells, got " + std::to_string(n));
  if (!(x_hi > x_lo)) throw ConfigError("grid bounds are inverted or empty");
  Grid1D g;
  g.x_lo = x_lo;
  g.x_hi = x_hi;
  g.n = n;
  g.dx = (x_hi - x_lo) / n;
  return g;
}

inline Grid2D build_grid(double x_lo, double x_hi, double y_lo, double y_hi, int nx, int ny) {
  if (nx < 4 || ny < 4) {
    throw ConfigError("grid needs at least 4 cells per direction, got " + std::to_string(nx) +
                      "x" + std::to_string(ny));
  }
  if (!(x_hi > x_lo) || !(y_hi > y_lo)) throw ConfigError("grid bounds are inverted or empty");
  Grid2D g;
  g.x_lo = x_lo;
  g.x_hi = x_hi;
  g.y_lo = y_lo;
  g.y_hi = y_hi;
  g.nx = nx;
  g.ny = ny;
  g.dx = (x_hi - x_lo) / nx;
  g.dy = (y_hi - y_lo) / ny;
  return g;
}

}  // namespace mrhweno
