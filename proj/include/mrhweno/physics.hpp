#pragma once

#include <array>
#include <cmath>
#include <sstream>

#include "mrhweno/boundary.hpp"
#include "mrhweno/errors.hpp"

namespace mrhweno {

template <int N>
using Vec = std::array<double, N>;

struct Primitive {
  double rho = 0.0;
  double u = 0.0;  // x velocity
  double v = 0.0;  // y velocity (2D)
  double p = 0.0;
  double c = 0.0;  // sound speed
};

// Ideal-gas Euler equations; conserved (rho, rho u, E) in 1D, (rho, rho u, rho v, E) in 2D.
template <int Dim>
struct Euler {
  static constexpr int dim = Dim;
  static constexpr int nvars = Dim + 2;
  static constexpr int energy = Dim + 1;
  static constexpr MomentumVars momentum = Dim == 1 ? MomentumVars{1, -1} : MomentumVars{1, 2};
  using State = Vec<nvars>;

  double gamma = 1.4;

  Primitive primitives(const State& s) const {
    Primitive q;
    q.rho = s[0];
    if (!(q.rho > 0.0)) {
      std::ostringstream msg;
      msg << "non-positive density " << q.rho;
      throw AdmissibilityError(msg.str());
    }
    q.u = s[1] / q.rho;
    q.v = Dim == 2 ? s[2] / q.rho : 0.0;
    q.p = (gamma - 1.0) * (s[energy] - 0.5 * q.rho * (q.u * q.u + q.v * q.v));
    if (!(q.p > 0.0)) {
      std::ostringstream msg;
      msg << "non-positive pressure " << q.p << " (rho " << q.rho << ")";
      throw AdmissibilityError(msg.str());
    }
    q.c = std::sqrt(gamma * q.p / q.rho);
    return q;
  }

  State conserved(double rho, double u, double v, double p) const {
    State s{};
    s[0] = rho;
    s[1] = rho * u;
    if constexpr (Dim == 2) s[2] = rho * v;
    s[energy] = p / (gamma - 1.0) + 0.5 * rho * (u * u + (Dim == 2 ? v * v : 0.0));
    return s;
  }

  // Flux in direction dir (0 = x, 1 = y).
  State flux(const State& s, int dir = 0) const { return flux(s, primitives(s), dir); }

  State flux(const State& s, const Primitive& q, int dir) const {
    State f{};
    const double un = dir == 0 ? q.u : q.v;
    f[0] = s[0] * un;
    f[1] = s[1] * un;
    if constexpr (Dim == 2) f[2] = s[2] * un;
    f[1 + dir] += q.p;
    f[energy] = un * (s[energy] + q.p);
    return f;
  }

  double wave_speed(const State& s, int dir = 0) const {
    const Primitive q = primitives(s);
    return std::abs(dir == 0 ? q.u : q.v) + q.c;
  }

  using Matrix = std::array<State, nvars>;

  // Right (columns) and left (rows) eigenvectors of the flux Jacobian in direction dir,
  // evaluated at s. Wave order: u-c, entropy, [shear,] u+c.
  struct Eigensystem {
    Matrix right{};
    Matrix left{};
  };

  Eigensystem eigensystem(const State& s, int dir = 0) const {
    const Primitive q = primitives(s);
    const double nx = dir == 0 ? 1.0 : 0.0;
    const double ny = 1.0 - nx;
    const double un = q.u * nx + q.v * ny;
    const double q2 = q.u * q.u + q.v * q.v;
    const double h = q.c * q.c / (gamma - 1.0) + 0.5 * q2;
    const double b1 = (gamma - 1.0) / (q.c * q.c);
    const double b2 = 0.5 * b1 * q2;
    const double ic = 1.0 / q.c;
    Eigensystem e;
    auto& r = e.right;
    auto& l = e.left;
    const int last = nvars - 1;
    // r[row][col]
    r[0][0] = 1.0;
    r[1][0] = q.u - q.c * nx;
    r[0][1] = 1.0;
    r[1][1] = q.u;
    r[0][last] = 1.0;
    r[1][last] = q.u + q.c * nx;
    r[energy][0] = h - un * q.c;
    r[energy][1] = 0.5 * q2;
    r[energy][last] = h + un * q.c;
    l[0][0] = 0.5 * (b2 + un * ic);
    l[0][1] = -0.5 * (b1 * q.u + nx * ic);
    l[0][energy] = 0.5 * b1;
    l[1][0] = 1.0 - b2;
    l[1][1] = b1 * q.u;
    l[1][energy] = -b1;
    l[last][0] = 0.5 * (b2 - un * ic);
    l[last][1] = -0.5 * (b1 * q.u - nx * ic);
    l[last][energy] = 0.5 * b1;
    if constexpr (Dim == 2) {
      const double tx = -ny;
      const double ty = nx;
      const double ut = q.u * tx + q.v * ty;
      r[2][0] = q.v - q.c * ny;
      r[2][1] = q.v;
      r[2][last] = q.v + q.c * ny;
      r[0][2] = 0.0;
      r[1][2] = tx;
      r[2][2] = ty;
      r[energy][2] = ut;
      l[0][2] = -0.5 * (b1 * q.v + ny * ic);
      l[1][2] = b1 * q.v;
      l[last][2] = -0.5 * (b1 * q.v - ny * ic);
      l[2][0] = -ut;
      l[2][1] = tx;
      l[2][2] = ty;
      l[2][energy] = 0.0;
    }
    return e;
  }

  // Indicator variable and advection velocity of the troubled-cell detector.
  double indicator(const State& s) const { return s[0]; }
  double velocity(const State& s, int dir) const {
    if (!(s[0] > 0.0)) throw AdmissibilityError("non-positive density in detector");
    return s[1 + dir] / s[0];
  }
  double face_velocity(const State& left, const State& right, int dir) const {
    return 0.5 * (velocity(left, dir) + velocity(right, dir));
  }
};

using Euler1D = Euler<1>;
using Euler2D = Euler<2>;

// Scalar law u_t + sum_d (u^2/2)_d = 0.
template <int Dim>
struct Burgers {
  static constexpr int dim = Dim;
  static constexpr int nvars = 1;
  static constexpr MomentumVars momentum{};
  using State = Vec<1>;

  State flux(const State& s, int = 0) const { return {0.5 * s[0] * s[0]}; }
  double derivative(const State& s, int = 0) const { return s[0]; }
  double wave_speed(const State& s, int = 0) const { return std::abs(s[0]); }
  double indicator(const State& s) const { return s[0]; }
  double face_velocity(const State& left, const State& right, int dir) const {
    return derivative({0.5 * (left[0] + right[0])}, dir);
  }
};

using Burgers1D = Burgers<1>;
using Burgers2D = Burgers<2>;

// Scalar law u_t + a u_x (+ b u_y) = 0.
template <int Dim>
struct LinearAdvection {
  static constexpr int dim = Dim;
  static constexpr int nvars = 1;
  static constexpr MomentumVars momentum{};
  using State = Vec<1>;

  std::array<double, 2> speed{1.0, 1.0};

  State flux(const State& s, int dir = 0) const { return {speed[dir] * s[0]}; }
  double derivative(const State&, int dir = 0) const { return speed[dir]; }
  double wave_speed(const State&, int dir = 0) const { return std::abs(speed[dir]); }
  double indicator(const State& s) const { return s[0]; }
  double face_velocity(const State&, const State&, int dir) const { return speed[dir]; }
};

template <class System>
inline constexpr bool is_euler = System::nvars == System::dim + 2 && System::nvars > 1;

}  // namespace mrhweno
