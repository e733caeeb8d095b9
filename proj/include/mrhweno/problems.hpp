#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mrhweno/boundary.hpp"
#include "mrhweno/errors.hpp"
#include "mrhweno/fields.hpp"
#include "mrhweno/grid.hpp"
#include "mrhweno/physics.hpp"
#include "mrhweno/quadrature.hpp"
#include "mrhweno/reference.hpp"

namespace mrhweno {

enum class SystemKind { burgers1d, burgers2d, euler1d, euler2d };

inline int dimension(SystemKind s) {
  return s == SystemKind::burgers1d || s == SystemKind::euler1d ? 1 : 2;
}
inline bool is_euler_system(SystemKind s) {
  return s == SystemKind::euler1d || s == SystemKind::euler2d;
}

enum class ReferenceKind { none, analytic, stored_profile };

// Conserved state as a function of position.
using PointState = std::function<StateVec(double x, double y)>;
// Conserved state as a function of position and time.
using ExactState = std::function<StateVec(double x, double y, double t)>;

struct ProblemSpec {
  std::string name;
  std::string title;
  SystemKind system = SystemKind::burgers1d;
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
  double gamma = 1.4;
  double t_final = 1.0;
  int nx = 100;
  int ny = 0;
  // Grid sizes of the default convergence study (empty for shock problems).
  std::vector<int> grids;
  bool smooth = false;
  PointState initial;
  // 1D discontinuity locations of the initial data; cells containing one in their interior
  // are integrated piecewise.
  std::vector<double> x_jumps;
  // 2D initial data with discontinuities along curves: every cell integrated on sub-cells.
  int subcells_2d = 1;
  std::function<void(MomentField1D&, const Grid1D&)> post_init_1d;
  BoundarySet1D bc1;
  BoundarySet2D bc2;
  std::optional<StepObstacle> step;
  bool require_odd_n = false;
  ReferenceKind reference = ReferenceKind::none;
  ExactState exact;
  std::string profile_file;
};

namespace detail {

inline StateVec euler_state(double gamma, int dim, double rho, double u, double v, double p) {
  StateVec s{};
  s[0] = rho;
  s[1] = rho * u;
  if (dim == 2) {
    s[2] = rho * v;
    s[3] = p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v);
  } else {
    s[2] = p / (gamma - 1.0) + 0.5 * rho * u * u;
  }
  return s;
}

}  // namespace detail

// Default location of stored reference profiles; overridable with MRHWENO_DATA_DIR.
inline std::string data_directory() {
  if (const char* env = std::getenv("MRHWENO_DATA_DIR")) return env;
#ifdef MRHWENO_DEFAULT_DATA_DIR
  return MRHWENO_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

// Mach 10 shock into (1.4, 0, 0, 1), gamma = 1.4, inclined 60 degrees to the x axis.
struct DoubleMachStates {
  double rho_post, u_post, v_post, p_post;
  double rho_pre, u_pre, v_pre, p_pre;
  double x0;
  double shock_speed;  // normal speed
};

inline DoubleMachStates double_mach_states(double gamma = 1.4) {
  const double mach = 10.0;
  const double rho1 = 1.4;
  const double p1 = 1.0;
  const double c1 = std::sqrt(gamma * p1 / rho1);
  const double m2 = mach * mach;
  const double rho2 = rho1 * (gamma + 1.0) * m2 / ((gamma - 1.0) * m2 + 2.0);
  const double p2 = p1 * (2.0 * gamma * m2 - (gamma - 1.0)) / (gamma + 1.0);
  const double speed = mach * c1;
  const double un = speed * (1.0 - rho1 / rho2);
  const double angle = std::numbers::pi / 6.0;
  return {rho2, un * std::cos(angle), -un * std::sin(angle), p2, rho1, 0.0, 0.0, p1,
          1.0 / 6.0, speed};
}

inline std::vector<std::string> problem_names() {
  return {"burgers1d", "burgers2d",   "euler-smooth-1d", "euler-smooth-2d", "lax",
          "shu-osher", "blast",       "sedov",           "double-mach",     "forward-step"};
}

// Problem catalog. A NaN gamma keeps the problem's default ratio of specific heats.
inline ProblemSpec make_problem(const std::string& name,
                                double gamma = std::numeric_limits<double>::quiet_NaN()) {
  using std::numbers::pi;
  ProblemSpec s;
  s.name = name;
  auto set_gamma = [&](double def) { s.gamma = std::isnan(gamma) ? def : gamma; };
  if (name == "burgers1d") {
    s.title = "1D Burgers, u0 = 0.5 + sin(pi x), periodic";
    s.system = SystemKind::burgers1d;
    s.x_lo = 0.0;
    s.x_hi = 2.0;
    s.t_final = 0.5 / pi;
    s.nx = 80;
    s.grids = {40, 80, 160, 320};
    s.smooth = true;
    const reference::BurgersSine b;
    s.initial = [b](double x, double) { return StateVec{b.u0(x)}; };
    s.bc1 = {EdgePolicy::periodic(), EdgePolicy::periodic()};
    s.reference = ReferenceKind::analytic;
    s.exact = [b](double x, double, double t) { return StateVec{b(x, t)}; };
  } else if (name == "burgers2d") {
    s.title = "2D Burgers, u0 = 0.5 + sin(pi (x + y) / 2), periodic";
    s.system = SystemKind::burgers2d;
    s.x_lo = s.y_lo = 0.0;
    s.x_hi = s.y_hi = 4.0;
    s.t_final = 0.5 / pi;
    s.nx = s.ny = 40;
    s.grids = {20, 40, 80, 160};
    s.smooth = true;
    const reference::BurgersSine b;
    s.initial = [b](double x, double y) { return StateVec{b.u0(0.5 * (x + y))}; };
    s.bc2 = {EdgePolicy::periodic(), EdgePolicy::periodic(), EdgePolicy::periodic(),
             EdgePolicy::periodic()};
    s.reference = ReferenceKind::analytic;
    s.exact = [b](double x, double y, double t) { return StateVec{b(0.5 * (x + y), t)}; };
  } else if (name == "euler-smooth-1d") {
    s.title = "1D Euler simple wave (gamma = 3), periodic";
    s.system = SystemKind::euler1d;
    set_gamma(3.0);
    if (s.gamma != 3.0) throw ConfigError("euler-smooth-1d requires gamma = 3");
    s.x_lo = 0.0;
    s.x_hi = 2.0 * pi;
    s.t_final = 3.0;
    s.nx = 80;
    s.grids = {40, 80, 160, 320};
    s.smooth = true;
    const reference::SimpleWave w{1.0 / (2.0 * std::sqrt(3.0)), 0.2, 1.0, std::sqrt(3.0)};
    auto state = [](double rho) {
      return detail::euler_state(3.0, 1, rho, std::sqrt(3.0) * rho, 0.0, rho * rho * rho);
    };
    s.initial = [w, state](double x, double) { return state(w.rho0(x)); };
    s.bc1 = {EdgePolicy::periodic(), EdgePolicy::periodic()};
    s.reference = ReferenceKind::analytic;
    s.exact = [w, state](double x, double, double t) { return state(w.rho(x, t)); };
  } else if (name == "euler-smooth-2d") {
    s.title = "2D Euler simple wave along the diagonal (gamma = 3), periodic";
    s.system = SystemKind::euler2d;
    set_gamma(3.0);
    if (s.gamma != 3.0) throw ConfigError("euler-smooth-2d requires gamma = 3");
    s.x_lo = s.y_lo = 0.0;
    s.x_hi = s.y_hi = 4.0 * pi;
    s.t_final = 3.0;
    s.nx = s.ny = 40;
    s.grids = {20, 40, 80, 160};
    s.smooth = true;
    // In z = x + y: u = v = sqrt(3/2) rho, c = sqrt(3) rho, dz/dt = 2 sqrt(6) rho.
    const reference::SimpleWave w{1.0 / std::sqrt(6.0), 0.2, 2.0, std::sqrt(6.0)};
    auto state = [](double rho) {
      const double vel = std::sqrt(1.5) * rho;
      return detail::euler_state(3.0, 2, rho, vel, vel, rho * rho * rho);
    };
    s.initial = [w, state](double x, double y) { return state(w.rho0(x + y)); };
    s.bc2 = {EdgePolicy::periodic(), EdgePolicy::periodic(), EdgePolicy::periodic(),
             EdgePolicy::periodic()};
    s.reference = ReferenceKind::analytic;
    s.exact = [w, state](double x, double y, double t) { return state(w.rho(x + y, t)); };
  } else if (name == "lax") {
    s.title = "Lax shock tube";
    s.system = SystemKind::euler1d;
    set_gamma(1.4);
    s.x_lo = -0.5;
    s.x_hi = 0.5;
    s.t_final = 0.16;
    s.nx = 200;
    const double g = s.gamma;
    const reference::PrimitiveState l{0.445, 0.698, 3.528};
    const reference::PrimitiveState r{0.5, 0.0, 0.571};
    s.initial = [g, l, r](double x, double) {
      const auto& q = x < 0.0 ? l : r;
      return detail::euler_state(g, 1, q.rho, q.u, 0.0, q.p);
    };
    s.x_jumps = {0.0};
    s.bc1 = {EdgePolicy::outflow(), EdgePolicy::outflow()};
    s.reference = ReferenceKind::analytic;
    const auto riemann = std::make_shared<reference::ExactRiemann>(l, r, g);
    s.exact = [g, l, r, riemann](double x, double, double t) {
      const auto q = t > 0.0 ? riemann->sample(x / t) : (x < 0.0 ? l : r);
      return detail::euler_state(g, 1, q.rho, q.u, 0.0, q.p);
    };
  } else if (name == "shu-osher") {
    s.title = "Shu-Osher shock / density-wave interaction";
    s.system = SystemKind::euler1d;
    set_gamma(1.4);
    s.x_lo = -5.0;
    s.x_hi = 5.0;
    s.t_final = 1.8;
    s.nx = 400;
    const double g = s.gamma;
    s.initial = [g](double x, double) {
      if (x < -4.0) return detail::euler_state(g, 1, 3.857143, 2.629369, 0.0, 10.333333);
      return detail::euler_state(g, 1, 1.0 + 0.2 * std::sin(5.0 * x), 0.0, 0.0, 1.0);
    };
    s.x_jumps = {-4.0};
    s.bc1 = {EdgePolicy::outflow(), EdgePolicy::outflow()};
    s.reference = ReferenceKind::stored_profile;
    s.profile_file = "shu_osher_ref.dat";
  } else if (name == "blast") {
    s.title = "Woodward-Colella interacting blast waves";
    s.system = SystemKind::euler1d;
    set_gamma(1.4);
    s.x_lo = 0.0;
    s.x_hi = 1.0;
    s.t_final = 0.038;
    s.nx = 800;
    const double g = s.gamma;
    s.initial = [g](double x, double) {
      const double p = x < 0.1 ? 1e3 : (x < 0.9 ? 1e-2 : 1e2);
      return detail::euler_state(g, 1, 1.0, 0.0, 0.0, p);
    };
    s.x_jumps = {0.1, 0.9};
    s.bc1 = {EdgePolicy::reflective(), EdgePolicy::reflective()};
    s.reference = ReferenceKind::stored_profile;
    s.profile_file = "blast_ref.dat";
  } else if (name == "sedov") {
    s.title = "Planar Sedov blast wave";
    s.system = SystemKind::euler1d;
    set_gamma(1.4);
    s.x_lo = -2.0;
    s.x_hi = 2.0;
    s.t_final = 0.001;
    s.nx = 401;
    s.require_odd_n = true;
    s.initial = [](double, double) { return StateVec{1.0, 0.0, 1e-12}; };
    s.post_init_1d = [](MomentField1D& f, const Grid1D& grid) {
      f.u(2, grid.n / 2) = 3200000.0 / grid.dx;
    };
    s.bc1 = {EdgePolicy::outflow(), EdgePolicy::outflow()};
    s.reference = ReferenceKind::analytic;
    const double g = s.gamma;
    const auto sedov = std::make_shared<reference::SedovPlanar>(g, 3200000.0);
    s.exact = [g, sedov](double x, double, double t) {
      const auto q = (*sedov)(x, t);
      // Cold background: the tiny initial internal energy is kept outside the blast.
      const double p = std::max(q.p, 1e-12 * (g - 1.0));
      return detail::euler_state(g, 1, q.rho, q.u, 0.0, p);
    };
  } else if (name == "double-mach") {
    s.title = "Double Mach reflection";
    s.system = SystemKind::euler2d;
    set_gamma(1.4);
    s.x_lo = 0.0;
    s.x_hi = 4.0;
    s.y_lo = 0.0;
    s.y_hi = 1.0;
    s.t_final = 0.2;
    s.nx = 480;
    s.ny = 120;
    const double g = s.gamma;
    const DoubleMachStates d = double_mach_states(g);
    const StateVec post = detail::euler_state(g, 2, d.rho_post, d.u_post, d.v_post, d.p_post);
    const StateVec pre = detail::euler_state(g, 2, d.rho_pre, d.u_pre, d.v_pre, d.p_pre);
    const double sx = d.shock_speed / std::sin(std::numbers::pi / 3.0);
    auto shock_x = [d, sx](double y, double t) { return d.x0 + y / std::sqrt(3.0) + sx * t; };
    s.initial = [=](double x, double y) { return x < shock_x(y, 0.0) ? post : pre; };
    s.subcells_2d = 4;
    s.bc2.left = EdgePolicy::inflow(post);
    s.bc2.right = EdgePolicy::outflow();
    s.bc2.bottom.segments = {EdgeSegment{.kind = BoundaryKind::inflow, .state = post},
                             EdgeSegment{.from = d.x0, .kind = BoundaryKind::reflective_wall}};
    s.bc2.top = EdgePolicy::dirichlet(
        [=](double x, double y, double t) { return x < shock_x(y, t) ? post : pre; });
    s.reference = ReferenceKind::none;
  } else if (name == "forward-step") {
    s.title = "Mach 3 wind tunnel with a forward-facing step";
    s.system = SystemKind::euler2d;
    set_gamma(1.4);
    s.x_lo = 0.0;
    s.x_hi = 3.0;
    s.y_lo = 0.0;
    s.y_hi = 1.0;
    s.t_final = 4.0;
    s.nx = 300;
    s.ny = 100;
    const StateVec inflow = detail::euler_state(s.gamma, 2, 1.4, 3.0, 0.0, 1.0);
    s.initial = [inflow](double, double) { return inflow; };
    s.bc2.left = EdgePolicy::inflow(inflow);
    s.bc2.right = EdgePolicy::outflow();
    s.bc2.bottom = EdgePolicy::reflective();
    s.bc2.top = EdgePolicy::reflective();
    s.step = StepObstacle{0.6, 0.2};
    s.reference = ReferenceKind::none;
  } else {
    std::string known;
    for (const auto& n : problem_names()) known += " " + n;
    throw ConfigError("unknown problem '" + name + "' (known:" + known + ")");
  }
  return s;
}

inline int nvars_of(const ProblemSpec& s) {
  switch (s.system) {
    case SystemKind::burgers1d:
    case SystemKind::burgers2d:
      return 1;
    case SystemKind::euler1d:
      return 3;
    case SystemKind::euler2d:
      return 4;
  }
  return 1;
}

inline Grid1D make_grid_1d(const ProblemSpec& s, int n) {
  if (s.require_odd_n && n % 2 == 0) {
    throw ConfigError("problem '" + s.name + "' needs an odd cell count (center cell)");
  }
  return build_grid(s.x_lo, s.x_hi, n);
}

inline Grid2D make_grid_2d(const ProblemSpec& s, int nx, int ny) {
  return build_grid(s.x_lo, s.x_hi, s.y_lo, s.y_hi, nx, ny);
}

namespace detail {

// Zeroth and first moments of `fn` over [a, b] inside the cell centered at xc, width dx.
template <class Fn>
void accumulate_moments_1d(Fn&& fn, double a, double b, double xc, double dx, int nv,
                           double* u, double* v) {
  const auto& nodes = GaussLegendre5::nodes;
  const auto& w = GaussLegendre5::weights;
  const double mid = 0.5 * (a + b);
  const double len = b - a;
  for (int q = 0; q < 5; ++q) {
    const double x = mid + nodes[q] * len;
    const double xi = (x - xc) / dx;
    const StateVec st = fn(x);
    const double wt = w[q] * len / dx;
    for (int k = 0; k < nv; ++k) {
      u[k] += wt * st[k];
      v[k] += wt * st[k] * xi;
    }
  }
}

}  // namespace detail

// Cell moments of the problem's initial data (Gauss-Legendre quadrature; cells cut by a
// discontinuity are integrated piecewise).
inline MomentField1D init_moments(const ProblemSpec& s, const Grid1D& g) {
  if (dimension(s.system) != 1) throw ConfigError("init_moments: 1D grid for a 2D problem");
  const int nv = nvars_of(s);
  MomentField1D f(nv, g.n);
  const double tol = 1e-12 * g.dx;
  for (int i = 0; i < g.n; ++i) {
    const double a = g.face_left(i);
    const double b = a + g.dx;
    std::vector<double> cuts = {a};
    for (double xj : s.x_jumps) {
      if (xj > a + tol && xj < b - tol) {
        cuts.push_back(xj);
        std::clog << "warning: discontinuity at x = " << xj << " is not on a cell face of '"
                  << s.name << "'; integrating the cut cell piecewise\n";
      }
    }
    cuts.push_back(b);
    double u[4] = {0, 0, 0, 0};
    double v[4] = {0, 0, 0, 0};
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
      detail::accumulate_moments_1d([&](double x) { return s.initial(x, 0.0); }, cuts[p],
                                    cuts[p + 1], g.center(i), g.dx, nv, u, v);
    }
    for (int k = 0; k < nv; ++k) {
      f.u(k, i) = u[k];
      f.v(k, i) = v[k];
    }
  }
  if (s.post_init_1d) s.post_init_1d(f, g);
  return f;
}

// Zeroth, x- and y-moments of a state function over one cell using m x m sub-cells of
// 5 x 5 Gauss-Legendre points.
template <class Fn>
void cell_moments_2d(Fn&& fn, const Grid2D& g, int i, int j, int m, int nv, double* u, double* v,
                     double* w) {
  const auto& nodes = GaussLegendre5::nodes;
  const auto& wt = GaussLegendre5::weights;
  for (int k = 0; k < nv; ++k) u[k] = v[k] = w[k] = 0.0;
  const double h = 1.0 / m;
  for (int sj = 0; sj < m; ++sj) {
    for (int si = 0; si < m; ++si) {
      for (int q = 0; q < 5; ++q) {
        const double eta = -0.5 + (sj + 0.5 + nodes[q]) * h;
        for (int p = 0; p < 5; ++p) {
          const double xi = -0.5 + (si + 0.5 + nodes[p]) * h;
          const StateVec st = fn(g.xc(i) + xi * g.dx, g.yc(j) + eta * g.dy);
          const double c = wt[p] * wt[q] * h * h;
          for (int k = 0; k < nv; ++k) {
            u[k] += c * st[k];
            v[k] += c * st[k] * xi;
            w[k] += c * st[k] * eta;
          }
        }
      }
    }
  }
}

inline MomentField2D init_moments(const ProblemSpec& s, const Grid2D& g) {
  if (dimension(s.system) != 2) throw ConfigError("init_moments: 2D grid for a 1D problem");
  const int nv = nvars_of(s);
  MomentField2D f(nv, g.nx, g.ny);
  double u[4], v[4], w[4];
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      cell_moments_2d(s.initial, g, i, j, s.subcells_2d, nv, u, v, w);
      const int c = f.cell(i, j);
      for (int k = 0; k < nv; ++k) {
        f.u(k, c) = u[k];
        f.v(k, c) = v[k];
        f.w(k, c) = w[k];
      }
    }
  }
  return f;
}

// Fine-grid profile of cell averages: x centers and one column per conserved variable.
struct StoredProfile {
  double x_lo = 0.0;
  double x_hi = 0.0;
  std::vector<double> x;
  std::vector<StateVec> state;
};

inline StoredProfile load_profile(const std::string& path, int nv) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open reference profile '" + path + "'");
  StoredProfile p;
  std::string line;
  bool have_bounds = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key;
      hs >> key;
      if (key == "domain") {
        hs >> p.x_lo >> p.x_hi;
        have_bounds = true;
      }
      continue;
    }
    std::istringstream ls(line);
    double x;
    StateVec st{};
    ls >> x;
    for (int k = 0; k < nv; ++k) ls >> st[k];
    if (!ls) throw ConfigError("malformed line in reference profile '" + path + "'");
    p.x.push_back(x);
    p.state.push_back(st);
  }
  if (!have_bounds || p.x.size() < 2) {
    throw ConfigError("reference profile '" + path + "' lacks a '# domain lo hi' header");
  }
  return p;
}

inline void save_profile(const std::string& path, const std::string& comment, double x_lo,
                         double x_hi, const std::vector<double>& x,
                         const std::vector<StateVec>& state, int nv) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write reference profile '" + path + "'");
  out << "# " << comment << "\n# domain " << x_lo << " " << x_hi << "\n";
  out.precision(17);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << x[i];
    for (int k = 0; k < nv; ++k) out << " " << state[i][k];
    out << "\n";
  }
}

// Averages of a piecewise-constant fine profile over the cells of a coarser grid.
inline std::vector<StateVec> average_profile(const StoredProfile& p, const Grid1D& g, int nv) {
  const std::size_t nf = p.x.size();
  const double hf = (p.x_hi - p.x_lo) / static_cast<double>(nf);
  std::vector<StateVec> out(g.n, StateVec{});
  for (int i = 0; i < g.n; ++i) {
    const double a = g.face_left(i);
    const double b = a + g.dx;
    const long first = std::max(0L, static_cast<long>(std::floor((a - p.x_lo) / hf)));
    const long last = std::min(static_cast<long>(nf) - 1,
                               static_cast<long>(std::floor((b - p.x_lo) / hf)));
    for (long f = first; f <= last; ++f) {
      const double fa = p.x_lo + f * hf;
      const double overlap = std::min(b, fa + hf) - std::max(a, fa);
      if (overlap <= 0.0) continue;
      for (int k = 0; k < nv; ++k) out[i][k] += overlap / g.dx * p.state[f][k];
    }
  }
  return out;
}

// Reference cell averages at time t on a 1D grid; empty if the problem has no reference.
inline std::vector<StateVec> reference_averages(const ProblemSpec& s, const Grid1D& g, double t) {
  const int nv = nvars_of(s);
  if (s.reference == ReferenceKind::analytic) {
    std::vector<StateVec> out(g.n, StateVec{});
    double u[4], v[4];
    for (int i = 0; i < g.n; ++i) {
      for (int k = 0; k < 4; ++k) u[k] = v[k] = 0.0;
      detail::accumulate_moments_1d([&](double x) { return s.exact(x, 0.0, t); },
                                    g.face_left(i), g.face_left(i) + g.dx, g.center(i), g.dx,
                                    nv, u, v);
      for (int k = 0; k < nv; ++k) out[i][k] = u[k];
    }
    return out;
  }
  if (s.reference == ReferenceKind::stored_profile) {
    const auto p = load_profile(data_directory() + "/" + s.profile_file, nv);
    return average_profile(p, g, nv);
  }
  return {};
}

inline std::vector<StateVec> reference_averages(const ProblemSpec& s, const Grid2D& g, double t) {
  if (s.reference != ReferenceKind::analytic) return {};
  const int nv = nvars_of(s);
  std::vector<StateVec> out(static_cast<std::size_t>(g.nx) * g.ny, StateVec{});
  double u[4], v[4], w[4];
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      cell_moments_2d([&](double x, double y) { return s.exact(x, y, t); }, g, i, j, 1, nv, u, v,
                      w);
      for (int k = 0; k < nv; ++k) out[static_cast<std::size_t>(i) + g.nx * j][k] = u[k];
    }
  }
  return out;
}

}  // namespace mrhweno
