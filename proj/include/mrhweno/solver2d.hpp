#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "mrhweno/boundary.hpp"
#include "mrhweno/errors.hpp"
#include "mrhweno/fields.hpp"
#include "mrhweno/grid.hpp"
#include "mrhweno/physics.hpp"
#include "mrhweno/quadrature.hpp"
#include "mrhweno/recon2d.hpp"
#include "mrhweno/riemann.hpp"
#include "mrhweno/rk3.hpp"
#include "mrhweno/scheme.hpp"
#include "mrhweno/troubled.hpp"
#include "mrhweno/weights.hpp"

namespace mrhweno {

// Physical fluxes f and g at one state, sharing the primitive-variable evaluation.
template <class System>
void point_fluxes(const System& sys, const typename System::State& s,
                  typename System::State& f, typename System::State& g) {
  if constexpr (requires { sys.primitives(s); }) {
    const Primitive q = sys.primitives(s);
    f = sys.flux(s, q, 0);
    g = sys.flux(s, q, 1);
  } else {
    f = sys.flux(s, 0);
    g = sys.flux(s, 1);
  }
}

// Semi-discrete moment scheme on a 2D Cartesian grid (optionally with a step obstacle) advanced
// with TVD RK3.
template <class System>
class Solver2D {
 public:
  using Field = MomentField2D;
  using State = typename System::State;
  static constexpr int nvars = System::nvars;

  Solver2D(System sys, Grid2D grid, BoundarySet2D bc, SchemeOptions opt = {},
           std::optional<StepObstacle> step = std::nullopt)
      : sys_(sys), grid_(grid), bc_(std::move(bc)), opt_(opt), step_(step),
        recon_(grid.dx, grid.dy, LinearWeights(opt.weight_base)) {
    validate(bc_);
    if (!(opt_.cfl > 0.0)) throw ConfigError("CFL number must be positive");
    if (opt_.characteristic) {
      throw ConfigError("characteristic reconstruction is available for 1D Euler only");
    }
    const int nx = grid_.nx;
    const int ny = grid_.ny;
    const Field probe(1, nx, ny);
    cells_ = probe.cells();
    sx_ = probe.sx();
    if (step_) {
      sc_ = step_cells(*step_, grid_);
      if (sc_.i0 <= 0 || sc_.i0 >= nx || sc_.j0 <= 0 || sc_.j0 >= ny) {
        throw ConfigError("step obstacle must lie strictly inside the domain");
      }
    }
    fluid_.assign(cells_, 0);
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        if (is_fluid(i, j)) fluid_[probe.cell(i, j)] = 1;
      }
    }
    std::vector<char> active(cells_, 0);
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        if (!is_fluid(i, j)) continue;
        fluid_cells_.push_back(probe.cell(i, j));
        active[probe.cell(i, j)] = 1;
        active[probe.cell(i - 1, j)] = 1;
        active[probe.cell(i + 1, j)] = 1;
        active[probe.cell(i, j - 1)] = 1;
        active[probe.cell(i, j + 1)] = 1;
      }
    }
    for (int c = 0; c < cells_; ++c) {
      if (active[c]) active_cells_.push_back(c);
    }
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i <= nx; ++i) {
        if (is_fluid(i - 1, j) || is_fluid(i, j)) xfaces_.push_back({i, j});
      }
    }
    for (int j = 0; j <= ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        if (is_fluid(i, j - 1) || is_fluid(i, j)) yfaces_.push_back({i, j});
      }
    }
    gl_.assign(static_cast<std::size_t>(nvars) * cells_, {});
    fx_.assign(static_cast<std::size_t>(nx + 1) * ny, {});
    fy_.assign(static_cast<std::size_t>(nx) * (ny + 1), {});
    stage_mask_.reset(static_cast<std::size_t>(nx) * ny);
    step_mask_.reset(static_cast<std::size_t>(nx) * ny);
  }

  const System& system() const { return sys_; }
  const Grid2D& grid() const { return grid_; }
  const SchemeOptions& options() const { return opt_; }
  Field make_field() const { return Field(nvars, grid_.nx, grid_.ny); }

  // Interior cell (i, j) inside the flow domain (not inside the step obstacle).
  bool is_fluid(int i, int j) const {
    if (i < 0 || j < 0 || i >= grid_.nx || j >= grid_.ny) return false;
    return !(step_ && sc_.solid(i, j));
  }
  long fluid_count() const { return static_cast<long>(fluid_cells_.size()); }

  // Tensor Gauss-Lobatto values of variable k in storage cell c from the last reconstruction.
  const recon2d::GLValues& gl(int k, int c) const { return gl_[index(k, c)]; }
  const TroubledMask& stage_troubled() const { return stage_mask_; }
  const TroubledMask& step_troubled() const { return step_mask_; }
  const recon2d::Reconstructor& reconstructor() const { return recon_; }

  void rhs(Field& u, double t, Field& du) {
    const int nx = grid_.nx;
    const StepObstacle* obstacle = step_ ? &*step_ : nullptr;
    stage_mask_.reset(static_cast<std::size_t>(nx) * grid_.ny);
    if (opt_.scheme == Scheme::m5_ni) {
      apply_boundary(u, grid_, bc_, t, System::momentum, obstacle);
      for (int c : fluid_cells_) stage_mask_.mark(linear(u, c));
      modify(u);
    }
    apply_boundary(u, grid_, bc_, t, System::momentum, obstacle, &sources_);
    parallel_for(0, static_cast<int>(active_cells_.size()), opt_.threads,
                 [&](int a) { reconstruct(u, active_cells_[a]); });

    if (opt_.scheme == Scheme::m5_i) {
      detect(u);
      if (stage_mask_.count > 0) {
        modify(u);
        apply_boundary(u, grid_, bc_, t, System::momentum, obstacle, &sources_);
        redo_.clear();
        for (int c : active_cells_) {
          const int src = sources_[c];
          if (src >= 0 && stage_mask_.flags[linear(u, src)]) redo_.push_back(c);
        }
        parallel_for(0, static_cast<int>(redo_.size()), opt_.threads,
                     [&](int a) { reconstruct(u, redo_[a]); });
      }
    }
    for (std::size_t k = 0; k < stage_mask_.flags.size(); ++k) {
      if (stage_mask_.flags[k]) step_mask_.mark(k);
    }

    compute_face_fluxes(u);
    assemble(u, du);
  }

  double compute_dt(const Field& u, double t, double t_final) const {
    const double remaining = t_final - t;
    double lx = 0.0;
    double ly = 0.0;
    for (int c : fluid_cells_) {
      const State s = cell_average(u, c);
      double ax;
      double ay;
      try {
        ax = sys_.wave_speed(s, 0);
        ay = sys_.wave_speed(s, 1);
      } catch (const AdmissibilityError& e) {
        throw located(e.what(), u, c);
      }
      if (!std::isfinite(ax) || !std::isfinite(ay)) throw located("non-finite state", u, c);
      lx = std::max(lx, ax);
      ly = std::max(ly, ay);
    }
    const double rate = lx / grid_.dx + ly / grid_.dy;
    if (rate == 0.0) return remaining;
    double dt = opt_.cfl / rate;
    if (opt_.accuracy) dt *= std::min(1.0, std::max(grid_.dx, grid_.dy) / opt_.l_ref);
    return std::min(dt, remaining);
  }

  void step(Field& u, double t, double dt) {
    if (ws_.rhs.cells() != cells_) ws_ = RK3Workspace<Field>{make_field(), make_field()};
    step_mask_.reset(static_cast<std::size_t>(grid_.nx) * grid_.ny);
    rk3_step(u, t, dt, [this](Field& x, double tt, Field& dx) { rhs(x, tt, dx); }, ws_);
  }

  RunResult run(Field& u, double t0, double t_final, const StepCallback& cb = {}) {
    check_run_interval(t0, t_final);
    RunResult r;
    double t = t0;
    const double fluid = static_cast<double>(fluid_cells_.size());
    while (t < t_final) {
      double dt = compute_dt(u, t, t_final);
      const bool last = t + dt >= t_final;
      if (last) dt = t_final - t;
      step(u, t, dt);
      t = last ? t_final : t + dt;
      ++r.steps;
      const double frac = step_mask_.count / fluid;
      r.max_troubled_fraction = std::max(r.max_troubled_fraction, frac);
      if (step_mask_.count > 0) ++r.troubled_cell_steps;
      if (cb) cb(StepInfo{r.steps, t, dt, step_mask_.count, frac, &step_mask_.flags});
    }
    r.t = t;
    return r;
  }

  State cell_average(const Field& u, int c) const {
    State s{};
    for (int k = 0; k < nvars; ++k) s[k] = u.u(k, c);
    return s;
  }

 private:
  std::size_t index(int k, int c) const {
    return static_cast<std::size_t>(k) * cells_ + static_cast<std::size_t>(c);
  }
  std::size_t linear(const Field& u, int c) const {
    return static_cast<std::size_t>(u.ci(c)) + static_cast<std::size_t>(grid_.nx) * u.cj(c);
  }

  State gl_state(int c, int node) const {
    State s{};
    for (int k = 0; k < nvars; ++k) s[k] = gl_[index(k, c)][node];
    return s;
  }

  AdmissibilityError located(const char* what, const Field& u, int c) const {
    const int i = u.ci(c);
    const int j = u.cj(c);
    std::ostringstream msg;
    msg << what << " at cell (" << i << ", " << j << ") (x = " << grid_.xc(i)
        << ", y = " << grid_.yc(j) << ")";
    return AdmissibilityError(msg.str(), static_cast<long>(i) + static_cast<long>(grid_.nx) * j);
  }

  void reconstruct(const Field& u, int c) {
    for (int k = 0; k < nvars; ++k) {
      recon2d::Window w;
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int src = c + di + dj * sx_;
          const int slot = (di + 1) + 3 * (dj + 1);
          w.u[slot] = u.u(k, src);
          w.v[slot] = u.v(k, src);
          w.w[slot] = u.w(k, src);
        }
      }
      recon_.reconstruct(w, gl_[index(k, c)]);
    }
  }

  std::array<double, 16> indicator_gl(int c) const {
    std::array<double, 16> r;
    for (int n = 0; n < 16; ++n) r[n] = sys_.indicator(gl_state(c, n));
    return r;
  }

  // GL-weighted mean of the face velocity along the face between cells a (left/bottom) and
  // b (right/top).
  double face_velocity(int a, int b, int dir) const {
    const auto& w = GaussLobatto::weights;
    double v = 0.0;
    for (int m = 0; m < 4; ++m) {
      const int na = dir == 0 ? recon2d::gl_index(3, m) : recon2d::gl_index(m, 3);
      const int nb = dir == 0 ? recon2d::gl_index(0, m) : recon2d::gl_index(m, 0);
      v += w[m] * sys_.face_velocity(gl_state(a, na), gl_state(b, nb), dir);
    }
    return v;
  }

  void detect(const Field& u) {
    std::vector<char>& flags = stage_mask_.flags;
    parallel_for(0, static_cast<int>(fluid_cells_.size()), opt_.threads, [&](int a) {
      const int c = fluid_cells_[a];
      try {
        const auto left = indicator_gl(c - 1);
        const auto right = indicator_gl(c + 1);
        const auto bottom = indicator_gl(c - sx_);
        const auto top = indicator_gl(c + sx_);
        FaceVelocities2D vel;
        vel.left = face_velocity(c - 1, c, 0);
        vel.right = face_velocity(c, c + 1, 0);
        vel.bottom = face_velocity(c - sx_, c, 1);
        vel.top = face_velocity(c, c + sx_, 1);
        if (kxrcf_2d(indicator_gl(c), Neighbors2D{&left, &right, &bottom, &top}, vel, grid_.dx,
                     grid_.dy)) {
          flags[linear(u, c)] = 1;
        }
      } catch (const AdmissibilityError& e) {
        throw located(e.what(), u, c);
      }
    });
    int count = 0;
    for (char f : flags) count += f;
    stage_mask_.count = count;
  }

  // Dimension-by-dimension modification of flagged cells from a frozen snapshot.
  void modify(Field& u) {
    snap_v_ = u.v_data();
    snap_w_ = u.w_data();
    for (int c : fluid_cells_) {
      if (!stage_mask_.flags[linear(u, c)]) continue;
      for (int k = 0; k < nvars; ++k) {
        const auto [v, w] = modify_moments_2d(
            u.u(k, c - 1), u.u(k, c + 1), snap_v_[u.at(k, c - 1)], snap_v_[u.at(k, c + 1)],
            u.u(k, c - sx_), u.u(k, c + sx_), snap_w_[u.at(k, c - sx_)],
            snap_w_[u.at(k, c + sx_)]);
        u.v(k, c) = v;
        u.w(k, c) = w;
      }
    }
  }

  void compute_face_fluxes(const Field& u) {
    const int nx = grid_.nx;
    parallel_for(0, static_cast<int>(xfaces_.size()), opt_.threads, [&](int a) {
      const auto [i, j] = xfaces_[a];
      const int left = u.cell(i - 1, j);
      const int right = u.cell(i, j);
      auto& f = fx_[static_cast<std::size_t>(i) + static_cast<std::size_t>(nx + 1) * j];
      for (int m = 0; m < 4; ++m) {
        const State sl = gl_state(left, recon2d::gl_index(3, m));
        const State sr = gl_state(right, recon2d::gl_index(0, m));
        f[m] = face_flux(u, sl, sr, 0, is_fluid(i, j) ? right : left);
      }
    });
    parallel_for(0, static_cast<int>(yfaces_.size()), opt_.threads, [&](int a) {
      const auto [i, j] = yfaces_[a];
      const int bottom = u.cell(i, j - 1);
      const int top = u.cell(i, j);
      auto& g = fy_[static_cast<std::size_t>(i) + static_cast<std::size_t>(nx) * j];
      for (int m = 0; m < 4; ++m) {
        const State sb = gl_state(bottom, recon2d::gl_index(m, 3));
        const State st = gl_state(top, recon2d::gl_index(m, 0));
        g[m] = face_flux(u, sb, st, 1, is_fluid(i, j) ? top : bottom);
      }
    });
  }

  State face_flux(const Field& u, const State& a, const State& b, int dir, int c) const {
    try {
      return numerical_flux(sys_, a, b, dir);
    } catch (const AdmissibilityError& e) {
      throw located(e.what(), u, c);
    } catch (const FluxError& e) {
      throw FluxError(std::string(e.what()) + " next to cell (" + std::to_string(u.ci(c)) +
                      ", " + std::to_string(u.cj(c)) + ")");
    }
  }

  void assemble(const Field& u, Field& du) {
    const int nx = grid_.nx;
    const double idx = 1.0 / grid_.dx;
    const double idy = 1.0 / grid_.dy;
    const auto& w = GaussLobatto::weights;
    const auto& xi = GaussLobatto::nodes;
    parallel_for(0, static_cast<int>(fluid_cells_.size()), opt_.threads, [&](int a) {
      const int c = fluid_cells_[a];
      const int i = u.ci(c);
      const int j = u.cj(c);
      const auto& fl = fx_[static_cast<std::size_t>(i) + static_cast<std::size_t>(nx + 1) * j];
      const auto& fr =
          fx_[static_cast<std::size_t>(i + 1) + static_cast<std::size_t>(nx + 1) * j];
      const auto& gb = fy_[static_cast<std::size_t>(i) + static_cast<std::size_t>(nx) * j];
      const auto& gt = fy_[static_cast<std::size_t>(i) + static_cast<std::size_t>(nx) * (j + 1)];
      State vf{};
      State vg{};
      try {
        for (int n = 0; n < 16; ++n) {
          State f;
          State g;
          point_fluxes(sys_, gl_state(c, n), f, g);
          const double wt = w[n % 4] * w[n / 4];
          for (int k = 0; k < nvars; ++k) {
            vf[k] += wt * f[k];
            vg[k] += wt * g[k];
          }
        }
      } catch (const AdmissibilityError& e) {
        throw located(e.what(), u, c);
      }
      for (int k = 0; k < nvars; ++k) {
        double fdiff = 0.0;
        double fsum = 0.0;
        double fdiff_eta = 0.0;
        double gdiff = 0.0;
        double gsum = 0.0;
        double gdiff_xi = 0.0;
        for (int m = 0; m < 4; ++m) {
          const double dfm = fr[m][k] - fl[m][k];
          const double dgm = gt[m][k] - gb[m][k];
          fdiff += w[m] * dfm;
          fsum += w[m] * (fr[m][k] + fl[m][k]);
          fdiff_eta += w[m] * xi[m] * dfm;
          gdiff += w[m] * dgm;
          gsum += w[m] * (gt[m][k] + gb[m][k]);
          gdiff_xi += w[m] * xi[m] * dgm;
        }
        du.u(k, c) = -fdiff * idx - gdiff * idy;
        du.v(k, c) = -0.5 * fsum * idx + vf[k] * idx - gdiff_xi * idy;
        du.w(k, c) = -fdiff_eta * idx - 0.5 * gsum * idy + vg[k] * idy;
      }
    });
  }

  System sys_;
  Grid2D grid_;
  BoundarySet2D bc_;
  SchemeOptions opt_;
  std::optional<StepObstacle> step_;
  StepCells sc_{};
  recon2d::Reconstructor recon_;
  int cells_ = 0;
  int sx_ = 0;
  std::vector<char> fluid_;
  std::vector<int> fluid_cells_;
  std::vector<int> active_cells_;
  std::vector<int> redo_;
  std::vector<std::array<int, 2>> xfaces_;
  std::vector<std::array<int, 2>> yfaces_;
  std::vector<recon2d::GLValues> gl_;
  std::vector<std::array<State, 4>> fx_;
  std::vector<std::array<State, 4>> fy_;
  std::vector<int> sources_;
  std::vector<double> snap_v_;
  std::vector<double> snap_w_;
  TroubledMask stage_mask_;
  TroubledMask step_mask_;
  RK3Workspace<Field> ws_;
};

}  // namespace mrhweno
