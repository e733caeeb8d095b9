#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mrhweno::reference {

// Root-finding failure of a reference solver.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bisection on a bracketing interval [lo, hi] with g(lo) and g(hi) of opposite sign.
template <class G>
double bisect(G&& g, double lo, double hi, int iterations = 200) {
  double glo = g(lo);
  for (int k = 0; k < iterations && hi - lo > 0.0; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double gm = g(mid);
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Safeguarded Newton on [lo, hi] for g with derivative dg; falls back to bisection steps.
template <class G, class DG>
double safe_newton(G&& g, DG&& dg, double lo, double hi, double x0, double tol = 1e-15) {
  double glo = g(lo);
  const double ghi = g(hi);
  if ((glo > 0.0) == (ghi > 0.0) && glo != 0.0 && ghi != 0.0) {
    std::ostringstream msg;
    msg << "root not bracketed in [" << lo << ", " << hi << "]";
    throw SolverError(msg.str());
  }
  double x = std::clamp(x0, lo, hi);
  for (int k = 0; k < 200; ++k) {
    const double gx = g(x);
    if (gx == 0.0) return x;
    if ((gx > 0.0) == (glo > 0.0)) {
      lo = x;
      glo = gx;
    } else {
      hi = x;
    }
    const double d = dg(x);
    double next = d != 0.0 ? x - gx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= tol * std::max(1.0, std::abs(x))) return next;
    x = next;
  }
  return x;
}

// ---------------------------------------------------------------------------------------
// Burgers u_t + (u^2/2)_x = 0 with u0(x) = a + b sin(pi x), period 2.

struct BurgersSine {
  double a = 0.5;
  double b = 1.0;

  double u0(double x) const { return a + b * std::sin(std::numbers::pi * x); }

  // Exact solution; before the shock time 1/(pi b) the characteristic root is unique. After
  // it the shock sits at x = 1 + a t (mod 2) by odd symmetry of the moving-frame profile.
  double operator()(double x, double t) const {
    if (t == 0.0) return u0(x);
    const double pi = std::numbers::pi;
    // Moving frame x' = x - a t in (-1, 1]; there w = b sin(pi xi) with x' = xi + w t.
    double xp = std::fmod(x - a * t + 1.0, 2.0);
    if (xp <= 0.0) xp += 2.0;
    xp -= 1.0;
    const double sign = xp < 0.0 ? -1.0 : 1.0;
    const double target = std::abs(xp);
    auto foot_map = [&](double xi) { return xi + t * b * std::sin(pi * xi); };
    // Increasing branch of the foot map on [0, 1]: up to the first critical point.
    double xi_hi = 1.0;
    const double c = -1.0 / (pi * t * b);
    if (c > -1.0) xi_hi = std::acos(c) / pi;
    // The shock at x' = 1 absorbs feet beyond the one mapped to 1.
    if (foot_map(xi_hi) > 1.0) {
      xi_hi = bisect([&](double xi) { return foot_map(xi) - 1.0; }, 0.0, xi_hi);
    }
    if (target >= foot_map(xi_hi)) return a + sign * b * std::sin(pi * xi_hi);
    const double xi = safe_newton([&](double s) { return foot_map(s) - target; },
                                  [&](double s) { return 1.0 + pi * t * b * std::cos(pi * s); },
                                  0.0, xi_hi, target / (1.0 + t * b));
    return a + sign * b * std::sin(pi * xi);
  }
};

// ---------------------------------------------------------------------------------------
// Smooth gamma = 3 Euler flow with u = c: rho(x, t) = rho0(x - 2 k rho t) for a profile
// rho0(x) = amp (1 + eps sin(x / scale)), k the characteristic speed per unit density.

struct SimpleWave {
  double amp = 1.0 / (2.0 * std::sqrt(3.0));
  double eps = 0.2;
  double scale = 1.0;
  double k = std::sqrt(3.0);  // u + c = 2 k rho

  double rho0(double z) const { return amp * (1.0 + eps * std::sin(z / scale)); }
  double drho0(double z) const { return amp * eps * std::cos(z / scale) / scale; }

  double rho(double z, double t) const {
    const double lo = amp * (1.0 - eps);
    const double hi = amp * (1.0 + eps);
    return safe_newton(
        [&](double r) { return r - rho0(z - 2.0 * k * r * t); },
        [&](double r) { return 1.0 + 2.0 * k * t * drho0(z - 2.0 * k * r * t); }, lo, hi,
        rho0(z));
  }
};

// ---------------------------------------------------------------------------------------
// Exact solution of the 1D Riemann problem for an ideal gas.

struct PrimitiveState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

class ExactRiemann {
 public:
  ExactRiemann(PrimitiveState left, PrimitiveState right, double gamma)
      : l_(left), r_(right), g_(gamma) {
    cl_ = std::sqrt(g_ * l_.p / l_.rho);
    cr_ = std::sqrt(g_ * r_.p / r_.rho);
    if (2.0 * (cl_ + cr_) / (g_ - 1.0) <= r_.u - l_.u) {
      throw SolverError("Riemann data generates vacuum");
    }
    solve_star();
  }

  double p_star() const { return ps_; }
  double u_star() const { return us_; }

  // State at similarity coordinate s = (x - x0) / t.
  PrimitiveState sample(double s) const {
    const double g = g_;
    if (s <= us_) {
      if (ps_ > l_.p) {
        const double pr = ps_ / l_.p;
        const double sl = l_.u - cl_ * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
        if (s <= sl) return l_;
        const double rho = l_.rho * (pr + (g - 1.0) / (g + 1.0)) / ((g - 1.0) / (g + 1.0) * pr + 1.0);
        return {rho, us_, ps_};
      }
      const double shl = l_.u - cl_;
      if (s <= shl) return l_;
      const double csl = cl_ * std::pow(ps_ / l_.p, (g - 1.0) / (2.0 * g));
      const double stl = us_ - csl;
      if (s > stl) return {l_.rho * std::pow(ps_ / l_.p, 1.0 / g), us_, ps_};
      const double c = 2.0 / (g + 1.0) * (cl_ + (g - 1.0) / 2.0 * (l_.u - s));
      const double u = 2.0 / (g + 1.0) * (cl_ + (g - 1.0) / 2.0 * l_.u + s);
      const double rho = l_.rho * std::pow(c / cl_, 2.0 / (g - 1.0));
      return {rho, u, l_.p * std::pow(c / cl_, 2.0 * g / (g - 1.0))};
    }
    if (ps_ > r_.p) {
      const double pr = ps_ / r_.p;
      const double sr = r_.u + cr_ * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
      if (s >= sr) return r_;
      const double rho = r_.rho * (pr + (g - 1.0) / (g + 1.0)) / ((g - 1.0) / (g + 1.0) * pr + 1.0);
      return {rho, us_, ps_};
    }
    const double shr = r_.u + cr_;
    if (s >= shr) return r_;
    const double csr = cr_ * std::pow(ps_ / r_.p, (g - 1.0) / (2.0 * g));
    const double str = us_ + csr;
    if (s < str) return {r_.rho * std::pow(ps_ / r_.p, 1.0 / g), us_, ps_};
    const double c = 2.0 / (g + 1.0) * (cr_ - (g - 1.0) / 2.0 * (r_.u - s));
    const double u = 2.0 / (g + 1.0) * (-cr_ + (g - 1.0) / 2.0 * r_.u + s);
    const double rho = r_.rho * std::pow(c / cr_, 2.0 / (g - 1.0));
    return {rho, u, r_.p * std::pow(c / cr_, 2.0 * g / (g - 1.0))};
  }

 private:
  // Pressure function of one side and its derivative.
  void side(double p, const PrimitiveState& k, double ck, double& f, double& df) const {
    const double g = g_;
    if (p > k.p) {
      const double a = 2.0 / ((g + 1.0) * k.rho);
      const double b = (g - 1.0) / (g + 1.0) * k.p;
      const double q = std::sqrt(a / (p + b));
      f = (p - k.p) * q;
      df = q * (1.0 - 0.5 * (p - k.p) / (b + p));
    } else {
      const double pr = p / k.p;
      f = 2.0 * ck / (g - 1.0) * (std::pow(pr, (g - 1.0) / (2.0 * g)) - 1.0);
      df = std::pow(pr, -(g + 1.0) / (2.0 * g)) / (k.rho * ck);
    }
  }

  void solve_star() {
    const double du = r_.u - l_.u;
    auto g = [&](double p) {
      double fl, dfl, fr, dfr;
      side(p, l_, cl_, fl, dfl);
      side(p, r_, cr_, fr, dfr);
      return fl + fr + du;
    };
    auto dg = [&](double p) {
      double fl, dfl, fr, dfr;
      side(p, l_, cl_, fl, dfl);
      side(p, r_, cr_, fr, dfr);
      return dfl + dfr;
    };
    double hi = std::max(l_.p, r_.p);
    while (g(hi) < 0.0) hi *= 2.0;
    const double lo = 1e-14 * std::min(l_.p, r_.p);
    const double guess = 0.5 * (l_.p + r_.p);
    ps_ = safe_newton(g, dg, lo, hi, guess, 1e-15);
    double fl, dfl, fr, dfr;
    side(ps_, l_, cl_, fl, dfl);
    side(ps_, r_, cr_, fr, dfr);
    us_ = 0.5 * (l_.u + r_.u) + 0.5 * (fr - fl);
  }

  PrimitiveState l_;
  PrimitiveState r_;
  double g_;
  double cl_ = 0.0;
  double cr_ = 0.0;
  double ps_ = 0.0;
  double us_ = 0.0;
};

// ---------------------------------------------------------------------------------------
// Planar Sedov-Taylor blast wave into a cold gas of density rho0. In self-similar variables
// lambda = |x| / R(t), R ~ t^(2/3): u = delta (x/t) V, rho = rho0 G, c^2 = delta^2 (x/t)^2 Z.

class SedovPlanar {
 public:
  SedovPlanar(double gamma, double energy, double rho0 = 1.0, int steps = 20000)
      : g_(gamma), energy_(energy), rho0_(rho0) {
    integrate(steps);
  }

  double gamma() const { return g_; }
  double energy_integral() const { return integral_; }
  // Peak (post-shock) density.
  double peak_density() const { return rho0_ * (g_ + 1.0) / (g_ - 1.0); }
  double shock_radius(double t) const {
    return std::cbrt(energy_ * t * t / (2.0 * rho0_ * kDelta * kDelta * integral_));
  }

  // Density, velocity and pressure at position x (blast centered at 0) and time t > 0.
  PrimitiveState operator()(double x, double t) const {
    const double r = std::abs(x);
    const double big_r = shock_radius(t);
    if (r >= big_r) return {rho0_, 0.0, 0.0};
    const double lambda = r / big_r;
    double v, gg, z;
    profile(lambda, v, gg, z);
    const double rho = rho0_ * gg;
    const double u = kDelta * x / t * v;
    const double p = rho * kDelta * kDelta * x * x / (t * t) * z / g_;
    return {rho, u, p};
  }

  // Similarity functions V, G, Z at lambda in (0, 1].
  void profile(double lambda, double& v, double& g, double& z) const {
    const double s = std::log(std::max(lambda, lambda_.back()));
    // s_ is decreasing from 0.
    auto it = std::lower_bound(s_.begin(), s_.end(), s, std::greater<double>());
    std::size_t k = static_cast<std::size_t>(it - s_.begin());
    if (k == 0) k = 1;
    if (k >= s_.size()) k = s_.size() - 1;
    const double w = (s - s_[k - 1]) / (s_[k] - s_[k - 1]);
    v = y_[k - 1][0] + w * (y_[k][0] - y_[k - 1][0]);
    g = std::exp(y_[k - 1][1] + w * (y_[k][1] - y_[k - 1][1]));
    z = y_[k - 1][2] + w * (y_[k][2] - y_[k - 1][2]);
  }

 private:
  static constexpr double kDelta = 2.0 / 3.0;

  // d/d ln(lambda) of (V, ln G, Z).
  std::array<double, 3> rates(const std::array<double, 3>& y) const {
    const double v = y[0];
    const double z = y[2];
    const double g = g_;
    // Unknowns a = (ln G)', b = V', c = Z'.
    const double m[3][3] = {{v - 1.0, 1.0, 0.0},
                            {z / g, v - 1.0, 1.0 / g},
                            {(v - 1.0) * (1.0 - g), 0.0, (v - 1.0) / z}};
    const double rhs[3] = {-v, v / kDelta - v * v - 2.0 * z / g, 2.0 / kDelta - 2.0 * v};
    // Cramer's rule.
    auto det3 = [](const double a[3][3]) {
      return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
             a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
             a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    const double d = det3(m);
    std::array<double, 3> out{};
    for (int col = 0; col < 3; ++col) {
      double a[3][3];
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) a[r][c] = c == col ? rhs[r] : m[r][c];
      }
      out[col] = det3(a) / d;
    }
    // out = (a, b, c) -> derivatives of (V, ln G, Z).
    return {out[1], out[0], out[2]};
  }

  void integrate(int steps) {
    const double g = g_;
    std::array<double, 3> y = {2.0 / (g + 1.0), std::log((g + 1.0) / (g - 1.0)),
                               2.0 * g * (g - 1.0) / ((g + 1.0) * (g + 1.0))};
    const double s_end = std::log(1e-8);
    const double h = s_end / steps;
    double s = 0.0;
    s_.push_back(s);
    y_.push_back(y);
    lambda_.push_back(1.0);
    auto add = [](const std::array<double, 3>& a, const std::array<double, 3>& b, double f) {
      return std::array<double, 3>{a[0] + f * b[0], a[1] + f * b[1], a[2] + f * b[2]};
    };
    // The energy integral over lambda is carried along with the ODE in s = ln(lambda).
    auto integrand = [&](const std::array<double, 3>& yy, double lam) {
      return std::exp(yy[1]) * lam * lam * lam * (0.5 * yy[0] * yy[0] + yy[2] / (g * (g - 1.0)));
    };
    double integral = 0.0;
    for (int k = 0; k < steps; ++k) {
      const double lam0 = std::exp(s);
      const double lam_half = std::exp(s + 0.5 * h);
      const double lam1 = std::exp(s + h);
      const auto k1 = rates(y);
      const auto y2 = add(y, k1, 0.5 * h);
      const auto k2 = rates(y2);
      const auto y3 = add(y, k2, 0.5 * h);
      const auto k3 = rates(y3);
      const auto y4 = add(y, k3, h);
      const auto k4 = rates(y4);
      integral -= h / 6.0 *
                  (integrand(y, lam0) + 2.0 * integrand(y2, lam_half) +
                   2.0 * integrand(y3, lam_half) + integrand(y4, lam1));
      for (int c = 0; c < 3; ++c) y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
      s += h;
      if (!std::isfinite(y[0]) || !std::isfinite(y[1]) || !std::isfinite(y[2])) {
        throw SolverError("Sedov similarity integration diverged");
      }
      s_.push_back(s);
      y_.push_back(y);
      lambda_.push_back(lam1);
    }
    integral_ = integral;
  }

  double g_;
  double energy_;
  double rho0_;
  double integral_ = 0.0;
  std::vector<double> s_;
  std::vector<std::array<double, 3>> y_;
  std::vector<double> lambda_;
};

}  // namespace mrhweno::reference
