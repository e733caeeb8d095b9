#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mrhweno/harness.hpp"
#include "mrhweno/physics.hpp"
#include "mrhweno/problems.hpp"
#include "mrhweno/scheme.hpp"
#include "mrhweno/solver1d.hpp"
#include "mrhweno/solver2d.hpp"

namespace mrhweno {

struct RunRequest {
  SchemeOptions options;
  int nx = 0;  // 0: problem default
  int ny = 0;
  double t_final = std::numeric_limits<double>::quiet_NaN();  // NaN: problem default
  bool log_troubled = true;
  StepCallback on_step;
};

// Extremes of density and pressure over the cell averages of all accepted steps (Euler only).
struct StateBounds {
  double rho_min = std::numeric_limits<double>::infinity();
  double rho_max = -std::numeric_limits<double>::infinity();
  double p_min = std::numeric_limits<double>::infinity();
  double p_max = -std::numeric_limits<double>::infinity();
  bool finite = true;
};

struct RunOutput {
  int dim = 1;
  Grid1D grid1;
  Grid2D grid2;
  MomentField1D field1;
  MomentField2D field2;
  std::vector<char> fluid;  // 2D: interior cells outside obstacles
  RunResult result;
  StateBounds bounds;
  std::vector<TroubledRecord> troubled_log;
  std::vector<char> final_troubled;
  double t_final = 0.0;
};

namespace detail {

template <class S>
void track_bounds(StateBounds& b, const S& s, int dim, double gamma) {
  for (int k = 0; k < dim + 2; ++k) {
    if (!std::isfinite(s[k])) b.finite = false;
  }
  const double rho = s[0];
  double ke = 0.5 * s[1] * s[1] / rho;
  if (dim == 2) ke += 0.5 * s[2] * s[2] / rho;
  const double p = (gamma - 1.0) * (s[dim + 1] - ke);
  b.rho_min = std::min(b.rho_min, rho);
  b.rho_max = std::max(b.rho_max, rho);
  b.p_min = std::min(b.p_min, p);
  b.p_max = std::max(b.p_max, p);
}

template <class System>
void run_1d(const ProblemSpec& spec, System sys, const RunRequest& req, RunOutput& out) {
  const int n = req.nx > 0 ? req.nx : spec.nx;
  out.dim = 1;
  out.grid1 = make_grid_1d(spec, n);
  out.field1 = init_moments(spec, out.grid1);
  Solver1D<System> solver(sys, out.grid1, spec.bc1, req.options);
  constexpr bool euler = is_euler<System>;
  auto scan = [&] {
    if constexpr (euler) {
      for (int i = 0; i < n; ++i) {
        track_bounds(out.bounds, solver.cell_average(out.field1, i), 1, spec.gamma);
      }
    }
  };
  scan();
  out.result = solver.run(out.field1, 0.0, out.t_final, [&](const StepInfo& info) {
    if (req.log_troubled && info.troubled_count > 0) {
      for (int i = 0; i < n; ++i) {
        if ((*info.troubled)[i]) out.troubled_log.push_back({info.step, info.t, i, 0});
      }
    }
    scan();
    if (req.on_step) req.on_step(info);
  });
  out.final_troubled = solver.step_troubled().flags;
}

template <class System>
void run_2d(const ProblemSpec& spec, System sys, const RunRequest& req, RunOutput& out) {
  const int nx = req.nx > 0 ? req.nx : spec.nx;
  const int ny = req.ny > 0 ? req.ny
                            : (req.nx > 0 ? static_cast<int>(std::lround(
                                                static_cast<double>(req.nx) * spec.ny / spec.nx))
                                          : spec.ny);
  out.dim = 2;
  out.grid2 = make_grid_2d(spec, nx, ny);
  out.field2 = init_moments(spec, out.grid2);
  Solver2D<System> solver(sys, out.grid2, spec.bc2, req.options, spec.step);
  out.fluid.assign(static_cast<std::size_t>(nx) * ny, 0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) out.fluid[static_cast<std::size_t>(i) + nx * j] = solver.is_fluid(i, j);
  }
  constexpr bool euler = is_euler<System>;
  auto scan = [&] {
    if constexpr (euler) {
      for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
          if (!solver.is_fluid(i, j)) continue;
          track_bounds(out.bounds, solver.cell_average(out.field2, out.field2.cell(i, j)), 2,
                       spec.gamma);
        }
      }
    }
  };
  scan();
  out.result = solver.run(out.field2, 0.0, out.t_final, [&](const StepInfo& info) {
    if (req.log_troubled && info.troubled_count > 0) {
      for (std::size_t c = 0; c < info.troubled->size(); ++c) {
        if ((*info.troubled)[c]) {
          out.troubled_log.push_back({info.step, info.t, static_cast<int>(c % nx),
                                      static_cast<int>(c / nx)});
        }
      }
    }
    scan();
    if (req.on_step) req.on_step(info);
  });
  out.final_troubled = solver.step_troubled().flags;
}

}  // namespace detail

// Runs one problem to its final time on one grid.
inline RunOutput run_problem(const ProblemSpec& spec, const RunRequest& req) {
  RunOutput out;
  out.t_final = std::isnan(req.t_final) ? spec.t_final : req.t_final;
  switch (spec.system) {
    case SystemKind::burgers1d:
      detail::run_1d(spec, Burgers1D{}, req, out);
      break;
    case SystemKind::euler1d: {
      Euler1D sys;
      sys.gamma = spec.gamma;
      detail::run_1d(spec, sys, req, out);
      break;
    }
    case SystemKind::burgers2d:
      detail::run_2d(spec, Burgers2D{}, req, out);
      break;
    case SystemKind::euler2d: {
      Euler2D sys;
      sys.gamma = spec.gamma;
      detail::run_2d(spec, sys, req, out);
      break;
    }
  }
  return out;
}

// Errors of the first conserved component against the problem's reference at the final time.
inline ErrorNorms reference_errors(const ProblemSpec& spec, const RunOutput& out) {
  if (out.dim == 1) {
    const auto ref = reference_averages(spec, out.grid1, out.t_final);
    if (ref.empty()) throw ConfigError("problem '" + spec.name + "' has no reference solution");
    return error_norms(out.field1, out.grid1, ref);
  }
  const auto ref = reference_averages(spec, out.grid2, out.t_final);
  if (ref.empty()) throw ConfigError("problem '" + spec.name + "' has no reference solution");
  return error_norms(out.field2, out.grid2, ref);
}

struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  std::vector<RunResult> runs;
};

// Grid-refinement study: grids are cell counts per direction.
inline ConvergenceStudy run_convergence(const ProblemSpec& spec, const RunRequest& base,
                                        const std::vector<int>& grids) {
  if (grids.empty()) throw ConfigError("convergence study needs at least one grid");
  ConvergenceStudy study;
  std::vector<ErrorNorms> errors;
  for (int n : grids) {
    RunRequest req = base;
    req.nx = n;
    req.ny = dimension(spec.system) == 2 ? n : 0;
    req.log_troubled = false;
    const RunOutput out = run_problem(spec, req);
    errors.push_back(reference_errors(spec, out));
    study.runs.push_back(out.result);
  }
  study.rows = convergence_table(grids, errors);
  return study;
}

}  // namespace mrhweno
