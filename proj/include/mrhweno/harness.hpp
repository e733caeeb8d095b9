#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mrhweno/errors.hpp"
#include "mrhweno/fields.hpp"
#include "mrhweno/grid.hpp"

namespace mrhweno {

struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

// Errors of component `var` of the cell averages against reference averages. L1 is normalized
// by the domain measure.
inline ErrorNorms error_norms(const MomentField1D& f, const Grid1D& g,
                              const std::vector<StateVec>& ref, int var = 0) {
  if (static_cast<int>(ref.size()) != g.n) throw ConfigError("reference size mismatch");
  ErrorNorms e;
  for (int i = 0; i < g.n; ++i) {
    const double d = std::abs(f.u(var, i) - ref[i][var]);
    e.l1 += d * g.dx;
    e.linf = std::max(e.linf, d);
  }
  e.l1 /= g.length();
  return e;
}

inline ErrorNorms error_norms(const MomentField2D& f, const Grid2D& g,
                              const std::vector<StateVec>& ref, int var = 0) {
  if (ref.size() != static_cast<std::size_t>(g.nx) * g.ny) {
    throw ConfigError("reference size mismatch");
  }
  ErrorNorms e;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double d = std::abs(f.u(var, f.cell(i, j)) - ref[static_cast<std::size_t>(i) + g.nx * j][var]);
      e.l1 += d * g.dx * g.dy;
      e.linf = std::max(e.linf, d);
    }
  }
  e.l1 /= g.area();
  return e;
}

struct ConvergenceRow {
  int n = 0;
  double l1 = 0.0;
  double l1_order = std::nan("");
  double linf = 0.0;
  double linf_order = std::nan("");
};

// Observed orders log(e_{k-1}/e_k) / log(n_k/n_{k-1}); the first row has no order.
inline std::vector<ConvergenceRow> convergence_table(const std::vector<int>& n,
                                                     const std::vector<ErrorNorms>& errors) {
  if (n.size() != errors.size()) throw ConfigError("grid and error lists differ in length");
  std::vector<ConvergenceRow> rows(n.size());
  for (std::size_t k = 0; k < n.size(); ++k) {
    rows[k].n = n[k];
    rows[k].l1 = errors[k].l1;
    rows[k].linf = errors[k].linf;
    if (k > 0) {
      const double r = std::log(static_cast<double>(n[k]) / n[k - 1]);
      rows[k].l1_order = std::log(errors[k - 1].l1 / errors[k].l1) / r;
      rows[k].linf_order = std::log(errors[k - 1].linf / errors[k].linf) / r;
    }
  }
  return rows;
}

// Human-readable table by default; full_precision writes 17 significant digits for data files.
inline std::string format_table(const std::vector<ConvergenceRow>& rows, int dim,
                                bool full_precision = false) {
  std::ostringstream out;
  char buf[200];
  out << "# grid L1 order Linf order\n";
  auto order = [full_precision](double o) {
    char b[40];
    if (std::isnan(o)) return std::string("-");
    std::snprintf(b, sizeof b, full_precision ? "%.17g" : "%.2f", o);
    return std::string(b);
  };
  for (const auto& r : rows) {
    const std::string grid = dim == 2 ? std::to_string(r.n) + "x" + std::to_string(r.n)
                                      : std::to_string(r.n);
    if (full_precision) {
      std::snprintf(buf, sizeof buf, "%s %.17g %s %.17g %s\n", grid.c_str(), r.l1,
                    order(r.l1_order).c_str(), r.linf, order(r.linf_order).c_str());
    } else {
      std::snprintf(buf, sizeof buf, "%-9s %.3e %6s %.3e %6s\n", grid.c_str(), r.l1,
                    order(r.l1_order).c_str(), r.linf, order(r.linf_order).c_str());
    }
    out << buf;
  }
  return out.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

// One record per (accepted step, flagged interior cell).
struct TroubledRecord {
  long step = 0;
  double t = 0.0;
  int i = 0;
  int j = 0;
};

inline void dump_troubled(const std::vector<TroubledRecord>& log, int dim,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << (dim == 2 ? "# step t i j\n" : "# step t i\n");
  out.precision(17);
  for (const auto& r : log) {
    out << r.step << " " << r.t << " " << r.i;
    if (dim == 2) out << " " << r.j;
    out << "\n";
  }
}

// Primitive columns appended to a solution row: names and a converter from conserved values.
struct PrimitiveColumns {
  std::vector<std::string> names;
  std::function<std::vector<double>(const StateVec&)> convert;
};

inline PrimitiveColumns primitive_columns(int dim, int nvars, double gamma) {
  if (nvars == 1) return {{"u"}, [](const StateVec& s) { return std::vector<double>{s[0]}; }};
  if (dim == 1) {
    return {{"rho", "vel", "p"}, [gamma](const StateVec& s) {
              const double u = s[1] / s[0];
              return std::vector<double>{s[0], u, (gamma - 1.0) * (s[2] - 0.5 * s[0] * u * u)};
            }};
  }
  return {{"rho", "velx", "vely", "p"}, [gamma](const StateVec& s) {
            const double u = s[1] / s[0];
            const double v = s[2] / s[0];
            return std::vector<double>{s[0], u, v,
                                       (gamma - 1.0) * (s[3] - 0.5 * s[0] * (u * u + v * v))};
          }};
}

inline void dump_solution(const MomentField1D& f, const Grid1D& g, double gamma,
                          const std::vector<char>& troubled, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  const int nv = f.nvars();
  const auto prim = primitive_columns(1, nv, gamma);
  out << "# x";
  for (int k = 0; k < nv; ++k) out << " ubar" << k;
  for (int k = 0; k < nv; ++k) out << " vbar" << k;
  for (const auto& n : prim.names) out << " " << n;
  out << " troubled\n";
  char buf[32];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, " %.17g", x);
    out << buf;
  };
  for (int i = 0; i < g.n; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", g.center(i));
    out << buf;
    StateVec s{};
    for (int k = 0; k < nv; ++k) {
      s[k] = f.u(k, i);
      put(s[k]);
    }
    for (int k = 0; k < nv; ++k) put(f.v(k, i));
    for (double p : prim.convert(s)) put(p);
    out << " " << (troubled.empty() ? 0 : static_cast<int>(troubled[i])) << "\n";
  }
}

// Rows in row-major order (x fastest). Cells inside an obstacle are written with
// troubled = -1.
inline void dump_solution(const MomentField2D& f, const Grid2D& g, double gamma,
                          const std::vector<char>& troubled, const std::vector<char>& fluid,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  const int nv = f.nvars();
  const auto prim = primitive_columns(2, nv, gamma);
  out << "# x y";
  for (int k = 0; k < nv; ++k) out << " ubar" << k;
  for (int k = 0; k < nv; ++k) out << " vbar" << k;
  for (int k = 0; k < nv; ++k) out << " wbar" << k;
  for (const auto& n : prim.names) out << " " << n;
  out << " troubled\n";
  char buf[32];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, " %.17g", x);
    out << buf;
  };
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t lin = static_cast<std::size_t>(i) + static_cast<std::size_t>(g.nx) * j;
      const bool is_fluid = fluid.empty() || fluid[lin];
      std::snprintf(buf, sizeof buf, "%.17g", g.xc(i));
      out << buf;
      put(g.yc(j));
      const int c = f.cell(i, j);
      StateVec s{};
      for (int k = 0; k < nv; ++k) {
        s[k] = f.u(k, c);
        put(s[k]);
      }
      for (int k = 0; k < nv; ++k) put(f.v(k, c));
      for (int k = 0; k < nv; ++k) put(f.w(k, c));
      if (is_fluid) {
        for (double p : prim.convert(s)) put(p);
      } else {
        for (std::size_t p = 0; p < prim.names.size(); ++p) put(0.0);
      }
      const int flag = !is_fluid ? -1 : (troubled.empty() ? 0 : static_cast<int>(troubled[lin]));
      out << " " << flag << "\n";
    }
  }
}

// Numeric columns of a dump file (header and comment lines skipped).
inline std::vector<std::vector<double>> read_columns(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<double> row;
    double x;
    while (ls >> x) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mrhweno
