#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "mrhweno/errors.hpp"
#include "mrhweno/fields.hpp"
#include "mrhweno/grid.hpp"

namespace mrhweno {

enum class BoundaryKind { periodic, reflective_wall, inflow, outflow_extrapolate, dirichlet_function };

// Time-dependent prescribed conserved state at (x, y, t).
using StateFunction = std::function<StateVec(double x, double y, double t)>;

// One piece of an edge, active for ghost cells whose tangential center coordinate is >= from.
struct EdgeSegment {
  double from = -std::numeric_limits<double>::infinity();
  BoundaryKind kind = BoundaryKind::outflow_extrapolate;
  StateVec state{};
  StateFunction fn{};
};

struct EdgePolicy {
  std::vector<EdgeSegment> segments;

  static EdgePolicy make(BoundaryKind kind) { return EdgePolicy{{EdgeSegment{.kind = kind}}}; }
  static EdgePolicy periodic() { return make(BoundaryKind::periodic); }
  static EdgePolicy reflective() { return make(BoundaryKind::reflective_wall); }
  static EdgePolicy outflow() { return make(BoundaryKind::outflow_extrapolate); }
  static EdgePolicy inflow(const StateVec& s) {
    return EdgePolicy{{EdgeSegment{.kind = BoundaryKind::inflow, .state = s}}};
  }
  static EdgePolicy dirichlet(StateFunction fn) {
    return EdgePolicy{{EdgeSegment{.kind = BoundaryKind::dirichlet_function, .fn = std::move(fn)}}};
  }

  bool is_periodic() const {
    return !segments.empty() && segments.front().kind == BoundaryKind::periodic;
  }
  const EdgeSegment& at(double along) const {
    const EdgeSegment* chosen = &segments.front();
    for (const auto& s : segments) {
      if (along >= s.from) chosen = &s;
    }
    return *chosen;
  }
};

struct BoundarySet1D {
  EdgePolicy left = EdgePolicy::outflow();
  EdgePolicy right = EdgePolicy::outflow();
};

struct BoundarySet2D {
  EdgePolicy left = EdgePolicy::outflow();
  EdgePolicy right = EdgePolicy::outflow();
  EdgePolicy bottom = EdgePolicy::outflow();
  EdgePolicy top = EdgePolicy::outflow();
};

// Indices of the momentum components, -1 for scalar laws. Reflection negates the normal one.
struct MomentumVars {
  int x = -1;
  int y = -1;
};

// Solid block occupying x >= x_from, y <= y_to (forward-facing step). Walls are reflective.
struct StepObstacle {
  double x_from = 0.0;
  double y_to = 0.0;
};

namespace detail {

inline void check_edges(const EdgePolicy& a, const EdgePolicy& b, const char* axis) {
  if (a.segments.empty() || b.segments.empty()) {
    throw ConfigError(std::string("missing boundary policy on ") + axis + " edge");
  }
  auto has_periodic = [](const EdgePolicy& e) {
    for (const auto& s : e.segments) {
      if (s.kind == BoundaryKind::periodic) return true;
    }
    return false;
  };
  const bool pa = has_periodic(a);
  const bool pb = has_periodic(b);
  if (pa != pb || (pa && (a.segments.size() != 1 || b.segments.size() != 1))) {
    throw ConfigError(std::string("periodic boundary on ") + axis + " must be paired on both edges");
  }
}

}  // namespace detail

inline void validate(const BoundarySet1D& bc) { detail::check_edges(bc.left, bc.right, "x"); }
inline void validate(const BoundarySet2D& bc) {
  detail::check_edges(bc.left, bc.right, "x");
  detail::check_edges(bc.bottom, bc.top, "y");
}

// Fill ghost moments. When `sources` is non-null it receives, per storage cell, the interior
// storage cell a ghost was copied or mirrored from (itself for interior cells, -1 for
// prescribed states).
inline void apply_boundary(MomentField1D& f, const Grid1D& g, const BoundarySet1D& bc, double t,
                           MomentumVars mv = {}, std::vector<int>* sources = nullptr) {
  validate(bc);
  const int n = f.n();
  const int nv = f.nvars();
  if (sources) {
    sources->assign(f.stride(), -1);
    for (int i = 0; i < n; ++i) (*sources)[f.cell(i)] = f.cell(i);
  }
  for (int side = 0; side < 2; ++side) {
    const EdgePolicy& edge = side == 0 ? bc.left : bc.right;
    const EdgeSegment& seg = edge.at(0.0);
    for (int m = 0; m < kGhostLayers; ++m) {
      const int ghost = side == 0 ? -1 - m : n + m;
      int src = -1;
      switch (seg.kind) {
        case BoundaryKind::periodic:
          src = side == 0 ? n - 1 - m : m;
          for (int k = 0; k < nv; ++k) {
            f.u(k, ghost) = f.u(k, src);
            f.v(k, ghost) = f.v(k, src);
          }
          break;
        case BoundaryKind::reflective_wall:
          src = side == 0 ? m : n - 1 - m;
          for (int k = 0; k < nv; ++k) {
            const double s = k == mv.x ? -1.0 : 1.0;
            f.u(k, ghost) = s * f.u(k, src);
            f.v(k, ghost) = -s * f.v(k, src);
          }
          break;
        case BoundaryKind::outflow_extrapolate:
          src = side == 0 ? 0 : n - 1;
          for (int k = 0; k < nv; ++k) {
            f.u(k, ghost) = f.u(k, src);
            f.v(k, ghost) = f.v(k, src);
          }
          break;
        case BoundaryKind::inflow:
        case BoundaryKind::dirichlet_function: {
          const StateVec s = seg.kind == BoundaryKind::inflow ? seg.state
                                                              : seg.fn(g.center(ghost), 0.0, t);
          for (int k = 0; k < nv; ++k) {
            f.u(k, ghost) = s[k];
            f.v(k, ghost) = 0.0;
          }
          break;
        }
      }
      if (sources) (*sources)[f.cell(ghost)] = src < 0 ? -1 : f.cell(src);
    }
  }
}

namespace detail {

enum class Mirror { none, x, y, xy };

inline void copy_cell(MomentField2D& f, int dst, int src, Mirror mirror, MomentumVars mv) {
  for (int k = 0; k < f.nvars(); ++k) {
    double su = 1.0;
    double sv = 1.0;
    double sw = 1.0;
    if (mirror == Mirror::x || mirror == Mirror::xy) {
      const double s = k == mv.x ? -1.0 : 1.0;
      su *= s;
      sv *= -s;
      sw *= s;
    }
    if (mirror == Mirror::y || mirror == Mirror::xy) {
      const double s = k == mv.y ? -1.0 : 1.0;
      su *= s;
      sv *= s;
      sw *= -s;
    }
    f.u(k, dst) = su * f.u(k, src);
    f.v(k, dst) = sv * f.v(k, src);
    f.w(k, dst) = sw * f.w(k, src);
  }
}

inline void set_state(MomentField2D& f, int dst, const StateVec& s) {
  for (int k = 0; k < f.nvars(); ++k) {
    f.u(k, dst) = s[k];
    f.v(k, dst) = 0.0;
    f.w(k, dst) = 0.0;
  }
}

}  // namespace detail

// Cell indices of a step obstacle on the given grid: solid iff i >= i0 and j < j0.
struct StepCells {
  int i0 = 0;
  int j0 = 0;
  bool solid(int i, int j) const { return i >= i0 && j < j0 && i >= 0 && j >= 0; }
};

inline StepCells step_cells(const StepObstacle& s, const Grid2D& g) {
  StepCells c;
  c.i0 = static_cast<int>(std::lround((s.x_from - g.x_lo) / g.dx));
  c.j0 = static_cast<int>(std::lround((s.y_to - g.y_lo) / g.dy));
  return c;
}

inline void apply_boundary(MomentField2D& f, const Grid2D& g, const BoundarySet2D& bc, double t,
                           MomentumVars mv = {}, const StepObstacle* step = nullptr,
                           std::vector<int>* sources = nullptr) {
  validate(bc);
  using detail::Mirror;
  const int nx = f.nx();
  const int ny = f.ny();
  std::vector<int> local;
  std::vector<int>& src_of = sources ? *sources : local;
  src_of.assign(f.cells(), -1);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) src_of[f.cell(i, j)] = f.cell(i, j);
  }

  auto fill = [&](int dst, const EdgeSegment& seg, int periodic_src, int mirror_src,
                  int outflow_src, Mirror mirror, double x, double y) {
    switch (seg.kind) {
      case BoundaryKind::periodic:
        detail::copy_cell(f, dst, periodic_src, Mirror::none, mv);
        src_of[dst] = src_of[periodic_src];
        break;
      case BoundaryKind::reflective_wall:
        detail::copy_cell(f, dst, mirror_src, mirror, mv);
        src_of[dst] = src_of[mirror_src];
        break;
      case BoundaryKind::outflow_extrapolate:
        detail::copy_cell(f, dst, outflow_src, Mirror::none, mv);
        src_of[dst] = src_of[outflow_src];
        break;
      case BoundaryKind::inflow:
        detail::set_state(f, dst, seg.state);
        src_of[dst] = -1;
        break;
      case BoundaryKind::dirichlet_function:
        detail::set_state(f, dst, seg.fn(x, y, t));
        src_of[dst] = -1;
        break;
    }
  };

  // Solid step cells first (their sources are fluid cells), so edge ghosts see filled values.
  if (step) {
    const StepCells sc = step_cells(*step, g);
    for (int j = 0; j < std::min(sc.j0, ny); ++j) {
      for (int i = std::max(sc.i0, 0); i < nx; ++i) {
        const int d_top = sc.j0 - 1 - j;
        const int d_front = i - sc.i0;
        int src;
        Mirror mirror;
        if (d_top < d_front) {
          src = f.cell(i, sc.j0 + d_top);
          mirror = Mirror::y;
        } else if (d_front < d_top) {
          src = f.cell(sc.i0 - 1 - d_front, j);
          mirror = Mirror::x;
        } else {
          src = f.cell(sc.i0 - 1 - d_front, sc.j0 + d_top);
          mirror = Mirror::xy;
        }
        const int dst = f.cell(i, j);
        detail::copy_cell(f, dst, src, mirror, mv);
        src_of[dst] = src_of[src];
      }
    }
  }

  // x edges over interior rows, then y edges over full rows (fills the corners).
  for (int j = 0; j < ny; ++j) {
    for (int m = 0; m < kGhostLayers; ++m) {
      const int gl = -1 - m;
      fill(f.cell(gl, j), bc.left.at(g.yc(j)), f.cell(nx - 1 - m, j), f.cell(m, j), f.cell(0, j),
           Mirror::x, g.xc(gl), g.yc(j));
      const int gr = nx + m;
      fill(f.cell(gr, j), bc.right.at(g.yc(j)), f.cell(m, j), f.cell(nx - 1 - m, j),
           f.cell(nx - 1, j), Mirror::x, g.xc(gr), g.yc(j));
    }
  }
  for (int i = -kGhostLayers; i < nx + kGhostLayers; ++i) {
    for (int m = 0; m < kGhostLayers; ++m) {
      const int gb = -1 - m;
      fill(f.cell(i, gb), bc.bottom.at(g.xc(i)), f.cell(i, ny - 1 - m), f.cell(i, m),
           f.cell(i, 0), Mirror::y, g.xc(i), g.yc(gb));
      const int gt = ny + m;
      fill(f.cell(i, gt), bc.top.at(g.xc(i)), f.cell(i, m), f.cell(i, ny - 1 - m),
           f.cell(i, ny - 1), Mirror::y, g.xc(i), g.yc(gt));
    }
  }
}

}  // namespace mrhweno
