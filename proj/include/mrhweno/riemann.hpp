#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mrhweno/errors.hpp"
#include "mrhweno/physics.hpp"

namespace mrhweno {

struct HLLCWaves {
  double s_left = 0.0;
  double s_right = 0.0;
  double s_star = 0.0;
  double p_star = 0.0;
  double rho_star = 0.0;
  double c_star = 0.0;
  double coef_left = 1.0;
  double coef_right = 1.0;
};

// Wave estimates from the arithmetic-average pressure-velocity estimate of p* and s*.
// un_* are face-normal velocities. When those estimates are not ordered (strongly colliding
// or strongly expanding pairs), the outer speeds are widened to include the acoustic speeds
// of both states and s* is taken from the HLL contact-speed relation.
inline HLLCWaves hllc_waves(const Primitive& l, double un_l, const Primitive& r, double un_r,
                            double gamma) {
  HLLCWaves w;
  w.rho_star = 0.5 * (l.rho + r.rho);
  w.c_star = 0.5 * (l.c + r.c);
  const double z = w.c_star * w.rho_star;
  w.p_star = 0.5 * (l.p + r.p + (un_l - un_r) * z);
  w.s_star = 0.5 * (un_l + un_r + (l.p - r.p) / z);
  auto coef = [&](double pk) {
    if (w.p_star <= pk) return 1.0;
    return std::sqrt(1.0 + (gamma + 1.0) * (w.p_star / pk - 1.0) / (2.0 * gamma));
  };
  w.coef_left = coef(l.p);
  w.coef_right = coef(r.p);
  w.s_left = un_l - l.c * w.coef_left;
  w.s_right = un_r + r.c * w.coef_right;
  if (w.s_left <= w.s_star && w.s_star <= w.s_right) return w;

  w.s_left = std::min({w.s_left, un_l - l.c, un_r - r.c});
  w.s_right = std::max({w.s_right, un_l + l.c, un_r + r.c});
  const double ml = l.rho * (w.s_left - un_l);
  const double mr = r.rho * (w.s_right - un_r);
  w.s_star = (r.p - l.p + ml * un_l - mr * un_r) / (ml - mr);
  return w;
}

// HLLC flux of the Euler equations across a face normal to `dir`.
template <int Dim>
typename Euler<Dim>::State hllc_flux(const Euler<Dim>& sys, const typename Euler<Dim>::State& ul,
                                     const typename Euler<Dim>::State& ur, int dir = 0,
                                     HLLCWaves* waves = nullptr) {
  using State = typename Euler<Dim>::State;
  constexpr int e = Euler<Dim>::energy;
  const Primitive pl = sys.primitives(ul);
  const Primitive pr = sys.primitives(ur);
  const double nl = dir == 0 ? pl.u : pl.v;
  const double nr = dir == 0 ? pr.u : pr.v;
  const HLLCWaves w = hllc_waves(pl, nl, pr, nr, sys.gamma);
  if (waves) *waves = w;
  if (!(w.s_left <= w.s_star && w.s_star <= w.s_right)) {
    std::ostringstream msg;
    msg << "HLLC wave ordering violated: sL=" << w.s_left << " s*=" << w.s_star
        << " sR=" << w.s_right;
    throw FluxError(msg.str());
  }
  if (0.0 <= w.s_left) return sys.flux(ul, pl, dir);
  if (w.s_right <= 0.0) return sys.flux(ur, pr, dir);

  const bool left_star = 0.0 <= w.s_star;
  const State& u = left_star ? ul : ur;
  const Primitive& q = left_star ? pl : pr;
  const double un = left_star ? nl : nr;
  const double sk = left_star ? w.s_left : w.s_right;
  if (sk == w.s_star || sk == un) throw FluxError("HLLC degenerate star-state denominator");
  const double factor = q.rho * (sk - un) / (sk - w.s_star);
  State star{};
  star[0] = factor;
  star[1 + dir] = factor * w.s_star;
  if constexpr (Dim == 2) star[2 - dir] = factor * (dir == 0 ? q.v : q.u);
  star[e] = factor * (u[e] / q.rho + (w.s_star - un) * (w.s_star + q.p / (q.rho * (sk - un))));
  State f = sys.flux(u, q, dir);
  for (int k = 0; k < Euler<Dim>::nvars; ++k) f[k] += sk * (star[k] - u[k]);
  return f;
}

// Local Lax-Friedrichs flux for a scalar law with speed bound alpha.
template <class Flux>
double llf_flux(double ul, double ur, Flux&& f, double alpha) {
  return 0.5 * (f(ul) + f(ur)) - 0.5 * alpha * (ur - ul);
}

// Numerical flux dispatch used by the integrator.
template <int Dim>
typename Euler<Dim>::State numerical_flux(const Euler<Dim>& sys,
                                          const typename Euler<Dim>::State& ul,
                                          const typename Euler<Dim>::State& ur, int dir) {
  return hllc_flux(sys, ul, ur, dir);
}

template <class Scalar>
  requires(Scalar::nvars == 1)
Vec<1> numerical_flux(const Scalar& sys, const Vec<1>& ul, const Vec<1>& ur, int dir) {
  const double alpha = std::max(std::abs(sys.derivative(ul, dir)), std::abs(sys.derivative(ur, dir)));
  return {llf_flux(ul[0], ur[0], [&](double u) { return sys.flux(Vec<1>{u}, dir)[0]; }, alpha)};
}

}  // namespace mrhweno
