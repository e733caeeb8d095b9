#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "mrhweno/boundary.hpp"
#include "mrhweno/errors.hpp"
#include "mrhweno/fields.hpp"
#include "mrhweno/grid.hpp"
#include "mrhweno/physics.hpp"
#include "mrhweno/quadrature.hpp"
#include "mrhweno/recon1d.hpp"
#include "mrhweno/riemann.hpp"
#include "mrhweno/rk3.hpp"
#include "mrhweno/scheme.hpp"
#include "mrhweno/troubled.hpp"
#include "mrhweno/weights.hpp"

namespace mrhweno {

// Semi-discrete moment scheme in 1D advanced with TVD RK3.
template <class System>
class Solver1D {
 public:
  using Field = MomentField1D;
  using State = typename System::State;
  static constexpr int nvars = System::nvars;

  Solver1D(System sys, Grid1D grid, BoundarySet1D bc, SchemeOptions opt = {})
      : sys_(sys), grid_(grid), bc_(std::move(bc)), opt_(opt), lw_(opt.weight_base) {
    validate(bc_);
    if (!(opt_.cfl > 0.0)) throw ConfigError("CFL number must be positive");
    if (opt_.characteristic && !is_euler<System>) {
      throw ConfigError("characteristic reconstruction needs the Euler equations");
    }
    const int stride = grid_.n + 2 * kGhostLayers;
    gl_.assign(static_cast<std::size_t>(nvars) * stride, {});
    flux_.assign(grid_.n + 1, State{});
    stage_mask_.reset(grid_.n);
    step_mask_.reset(grid_.n);
  }

  const System& system() const { return sys_; }
  const Grid1D& grid() const { return grid_; }
  const SchemeOptions& options() const { return opt_; }
  Field make_field() const { return Field(nvars, grid_.n); }

  // Gauss-Lobatto values of variable k in cell i from the last reconstruction.
  const recon1d::GLValues& gl(int k, int i) const { return gl_[index(k, i)]; }
  const TroubledMask& stage_troubled() const { return stage_mask_; }
  const TroubledMask& step_troubled() const { return step_mask_; }

  // L(u) at time t. Fills ghosts and, depending on the scheme, overwrites first moments of u.
  void rhs(Field& u, double t, Field& du) {
    const int n = grid_.n;
    stage_mask_.reset(n);
    if (opt_.scheme == Scheme::m5_ni) {
      apply_boundary(u, grid_, bc_, t, System::momentum);
      for (int i = 0; i < n; ++i) stage_mask_.mark(i);
      modify(u);
    }
    apply_boundary(u, grid_, bc_, t, System::momentum, &sources_);
    for (int i = -1; i <= n; ++i) reconstruct(u, i);

    if (opt_.scheme == Scheme::m5_i) {
      detect();
      if (stage_mask_.count > 0) {
        modify(u);
        apply_boundary(u, grid_, bc_, t, System::momentum, &sources_);
        for (int i = -1; i <= n; ++i) {
          const int src = sources_[u.cell(i)];
          if (src >= 0 && stage_mask_.flags[src - kGhostLayers]) reconstruct(u, i);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (stage_mask_.flags[i]) step_mask_.mark(i);
    }

    for (int f = 0; f <= n; ++f) {
      try {
        flux_[f] = numerical_flux(sys_, gl_state(f - 1, 3), gl_state(f, 0), 0);
      } catch (const AdmissibilityError& e) {
        throw located(e.what(), "face", f, grid_.face_left(f));
      } catch (const FluxError& e) {
        throw FluxError(std::string(e.what()) + " at face " + std::to_string(f));
      }
    }
    const double inv = 1.0 / grid_.dx;
    const auto& w = GaussLobatto::weights;
    for (int i = 0; i < n; ++i) {
      State vol{};
      try {
        for (int l = 0; l < 4; ++l) {
          const State fl = sys_.flux(gl_state(i, l), 0);
          for (int k = 0; k < nvars; ++k) vol[k] += w[l] * fl[k];
        }
      } catch (const AdmissibilityError& e) {
        throw located(e.what(), "cell", i, grid_.center(i));
      }
      for (int k = 0; k < nvars; ++k) {
        du.u(k, i) = -(flux_[i + 1][k] - flux_[i][k]) * inv;
        du.v(k, i) = -0.5 * (flux_[i + 1][k] + flux_[i][k]) * inv + vol[k] * inv;
      }
    }
  }

  double max_signal_speed(const Field& u) const {
    double lam = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
      try {
        const double s = sys_.wave_speed(cell_average(u, i), 0);
        if (!std::isfinite(s)) throw AdmissibilityError("non-finite state");
        lam = std::max(lam, s);
      } catch (const AdmissibilityError& e) {
        throw located(e.what(), "cell", i, grid_.center(i));
      }
    }
    return lam;
  }

  double compute_dt(const Field& u, double t, double t_final) const {
    const double remaining = t_final - t;
    const double lam = max_signal_speed(u);
    if (lam == 0.0) return remaining;
    double dt = opt_.cfl * grid_.dx / lam;
    if (opt_.accuracy) dt *= std::min(1.0, grid_.dx / opt_.l_ref);
    return std::min(dt, remaining);
  }

  void step(Field& u, double t, double dt) {
    if (ws_.rhs.n() != grid_.n) ws_ = RK3Workspace<Field>{make_field(), make_field()};
    step_mask_.reset(grid_.n);
    rk3_step(u, t, dt, [this](Field& x, double tt, Field& dx) { rhs(x, tt, dx); }, ws_);
  }

  RunResult run(Field& u, double t0, double t_final, const StepCallback& cb = {}) {
    check_run_interval(t0, t_final);
    RunResult r;
    double t = t0;
    while (t < t_final) {
      double dt = compute_dt(u, t, t_final);
      const bool last = t + dt >= t_final;
      if (last) dt = t_final - t;
      step(u, t, dt);
      t = last ? t_final : t + dt;
      ++r.steps;
      r.max_troubled_fraction = std::max(r.max_troubled_fraction, step_mask_.fraction());
      if (step_mask_.count > 0) ++r.troubled_cell_steps;
      if (cb) {
        cb(StepInfo{r.steps, t, dt, step_mask_.count, step_mask_.fraction(), &step_mask_.flags});
      }
    }
    r.t = t;
    return r;
  }

  State cell_average(const Field& u, int i) const {
    State s{};
    for (int k = 0; k < nvars; ++k) s[k] = u.u(k, i);
    return s;
  }

 private:
  std::size_t index(int k, int i) const {
    return static_cast<std::size_t>(k) * (grid_.n + 2 * kGhostLayers) + i + kGhostLayers;
  }

  State gl_state(int i, int node) const {
    State s{};
    for (int k = 0; k < nvars; ++k) s[k] = gl_[index(k, i)][node];
    return s;
  }

  static AdmissibilityError located(const char* what, const char* kind, int i, double x) {
    std::ostringstream msg;
    msg << what << " at " << kind << " " << i << " (x = " << x << ")";
    return AdmissibilityError(msg.str(), i);
  }

  void reconstruct(const Field& u, int i) {
    if constexpr (is_euler<System>) {
      if (opt_.characteristic) {
        reconstruct_characteristic(u, i);
        return;
      }
    }
    for (int k = 0; k < nvars; ++k) {
      recon1d::Window w;
      for (int m = -1; m <= 1; ++m) {
        w.u[m + 1] = u.u(k, i + m);
        w.v[m + 1] = u.v(k, i + m);
      }
      gl_[index(k, i)] = recon1d::reconstruct_cell(w, lw_);
    }
  }

  void reconstruct_characteristic(const Field& u, int i) {
    typename System::Eigensystem es;
    try {
      es = sys_.eigensystem(cell_average(u, i), 0);
    } catch (const AdmissibilityError& e) {
      throw located(e.what(), "cell", i, grid_.center(i));
    }
    std::array<recon1d::GLValues, nvars> w{};
    for (int c = 0; c < nvars; ++c) {
      recon1d::Window win{};
      for (int m = -1; m <= 1; ++m) {
        for (int k = 0; k < nvars; ++k) {
          win.u[m + 1] += es.left[c][k] * u.u(k, i + m);
          win.v[m + 1] += es.left[c][k] * u.v(k, i + m);
        }
      }
      w[c] = recon1d::reconstruct_cell(win, lw_);
    }
    for (int k = 0; k < nvars; ++k) {
      auto& g = gl_[index(k, i)];
      g = {};
      for (int c = 0; c < nvars; ++c) {
        for (int l = 0; l < 4; ++l) g[l] += es.right[k][c] * w[c][l];
      }
    }
  }

  std::array<double, 4> indicator_gl(int i) const {
    std::array<double, 4> r;
    for (int l = 0; l < 4; ++l) r[l] = sys_.indicator(gl_state(i, l));
    return r;
  }

  void detect() {
    const int n = grid_.n;
    for (int i = 0; i < n; ++i) {
      try {
        const double vl = sys_.face_velocity(gl_state(i - 1, 3), gl_state(i, 0), 0);
        const double vr = sys_.face_velocity(gl_state(i, 3), gl_state(i + 1, 0), 0);
        if (kxrcf_1d(indicator_gl(i), indicator_gl(i - 1), indicator_gl(i + 1), vl, vr,
                     grid_.dx)) {
          stage_mask_.mark(i);
        }
      } catch (const AdmissibilityError& e) {
        throw located(e.what(), "cell", i, grid_.center(i));
      }
    }
  }

  // Replace the first moments of flagged cells; neighbors read from a frozen snapshot.
  void modify(Field& u) {
    snapshot_ = u.v_data();
    const int n = grid_.n;
    for (int k = 0; k < nvars; ++k) {
      for (int i = 0; i < n; ++i) {
        if (!stage_mask_.flags[i]) continue;
        u.v(k, i) = modify_moment_1d(u.u(k, i - 1), u.u(k, i + 1), snapshot_[u.at(k, i - 1)],
                                     snapshot_[u.at(k, i + 1)]);
      }
    }
  }

  System sys_;
  Grid1D grid_;
  BoundarySet1D bc_;
  SchemeOptions opt_;
  LinearWeights lw_;
  std::vector<recon1d::GLValues> gl_;
  std::vector<State> flux_;
  std::vector<int> sources_;
  std::vector<double> snapshot_;
  TroubledMask stage_mask_;
  TroubledMask step_mask_;
  RK3Workspace<Field> ws_;
};

}  // namespace mrhweno
