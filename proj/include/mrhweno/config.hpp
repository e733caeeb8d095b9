#pragma once

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "mrhweno/driver.hpp"
#include "mrhweno/errors.hpp"
#include "mrhweno/harness.hpp"
#include "mrhweno/problems.hpp"
#include "mrhweno/scheme.hpp"

namespace mrhweno {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_config = 2,
  exit_admissibility = 3,
};

struct RunConfig {
  std::string problem;
  std::string scheme = "m5-i";
  int nx = 0;  // 0: problem default
  int ny = 0;
  double cfl = 0.6;
  double t_final = std::numeric_limits<double>::quiet_NaN();
  double gamma = std::numeric_limits<double>::quiet_NaN();
  std::string out;  // empty: no files written
  bool accuracy = false;
  std::vector<int> grids;  // non-empty: convergence table
  int threads = 1;
  double weight_base = 10.0;
  bool characteristic = false;
};

namespace detail {

inline void add_options(CLI::App& app, RunConfig& c) {
  app.add_option("--problem", c.problem, "problem name")
      ->check(CLI::IsMember(problem_names()));
  app.add_option("--scheme", c.scheme, "hweno6, m5-i or m5-ni")
      ->check(CLI::IsMember({"hweno6", "m5-i", "m5-ni", "m5_i", "m5_ni"}));
  app.add_option("--nx", c.nx, "cells in x (default: problem grid)")
      ->check(CLI::PositiveNumber);
  app.add_option("--ny", c.ny, "cells in y (default: scaled with nx)")->check(CLI::PositiveNumber);
  app.add_option("--cfl", c.cfl, "CFL number")->check(CLI::PositiveNumber);
  app.add_option("--tfinal", c.t_final, "final time (default: problem time)")
      ->check(CLI::PositiveNumber);
  app.add_option("--gamma", c.gamma, "ratio of specific heats")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "output directory");
  app.add_flag("--accuracy", c.accuracy, "accuracy-test time step (dt ~ dx^2)");
  app.add_option("--grids", c.grids, "comma-separated grid sizes for a convergence table")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", c.threads, "worker threads for 2D runs")
      ->check(CLI::PositiveNumber);
  app.add_option("--weight-base", c.weight_base, "linear-weight base (weights base^(l-1))")
      ->check(CLI::PositiveNumber);
  app.add_flag("--characteristic", c.characteristic,
               "1D Euler: reconstruct in local characteristic variables");
}

}  // namespace detail

// Parses flags and an optional `--config file` (key = value lines, # comments). Flags override
// file values. Throws CLI::ParseError (help, usage errors) or ConfigError.
inline RunConfig parse_config(int argc, const char* const* argv) {
  RunConfig c;
  CLI::App app{"Multi-resolution HWENO solver for Burgers and Euler equations", "mrhweno"};
  app.set_config("--config", "", "read options from a key = value file");
  app.allow_config_extras(CLI::config_extras_mode::error);
  detail::add_options(app, c);
  app.parse(argc, argv);
  if (c.problem.empty()) throw ConfigError("--problem is required");
  return c;
}

inline SchemeOptions scheme_options(const RunConfig& c) {
  SchemeOptions o;
  o.scheme = parse_scheme(c.scheme);
  o.cfl = c.cfl;
  o.accuracy = c.accuracy;
  o.weight_base = c.weight_base;
  o.threads = c.threads;
  o.characteristic = c.characteristic;
  return o;
}

namespace detail {

inline bool has_reference(const ProblemSpec& spec) {
  if (spec.reference == ReferenceKind::analytic) return true;
  if (spec.reference == ReferenceKind::stored_profile) {
    return std::filesystem::exists(data_directory() + "/" + spec.profile_file);
  }
  return false;
}

inline std::string summary_line(double t, long steps, double max_fraction) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "final time %.10g, steps %ld, max troubled fraction %.4f", t,
                steps, max_fraction);
  return buf;
}

inline void prepare_out(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
}

inline int run_table(const RunConfig& c, const ProblemSpec& spec, const RunRequest& base,
                     std::ostream& log) {
  const ConvergenceStudy study = run_convergence(spec, base, c.grids);
  const std::string table = format_table(study.rows, dimension(spec.system));
  log << table;
  if (!c.out.empty()) {
    prepare_out(c.out);
    write_text(c.out + "/table.dat", format_table(study.rows, dimension(spec.system), true));
  }
  const RunResult& last = study.runs.back();
  double worst = 0.0;
  for (const auto& r : study.runs) worst = std::max(worst, r.max_troubled_fraction);
  log << summary_line(last.t, last.steps, worst) << "\n";
  return exit_ok;
}

inline int run_single(const RunConfig& c, const ProblemSpec& spec, RunRequest req,
                      std::ostream& log) {
  req.nx = c.nx;
  req.ny = c.ny;
  req.t_final = c.t_final;
  req.log_troubled = !c.out.empty();
  const RunOutput out = run_problem(spec, req);
  if (has_reference(spec)) {
    const ErrorNorms e = reference_errors(spec, out);
    char buf[128];
    std::snprintf(buf, sizeof buf, "L1 error %.6e, Linf error %.6e\n", e.l1, e.linf);
    log << buf;
    if (!c.out.empty()) {
      const int n = out.dim == 1 ? out.grid1.n : out.grid2.nx;
      prepare_out(c.out);
      write_text(c.out + "/table.dat", format_table(convergence_table({n}, {e}), out.dim, true));
    }
  }
  if (!c.out.empty()) {
    prepare_out(c.out);
    if (out.dim == 1) {
      dump_solution(out.field1, out.grid1, spec.gamma, out.final_troubled,
                    c.out + "/solution.dat");
    } else {
      dump_solution(out.field2, out.grid2, spec.gamma, out.final_troubled, out.fluid,
                    c.out + "/solution.dat");
    }
    dump_troubled(out.troubled_log, out.dim, c.out + "/troubled.dat");
  }
  log << summary_line(out.result.t, out.result.steps, out.result.max_troubled_fraction) << "\n";
  return exit_ok;
}

}  // namespace detail

// Executes a configured run or convergence table; returns the process exit code.
inline int run(const RunConfig& c, std::ostream& log = std::cout, std::ostream& err = std::cerr) {
  try {
    const ProblemSpec spec = make_problem(c.problem, c.gamma);
    RunRequest req;
    req.options = scheme_options(c);
    if (!c.grids.empty()) {
      RunRequest base = req;
      base.t_final = c.t_final;
      return detail::run_table(c, spec, base, log);
    }
    return detail::run_single(c, spec, req, log);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return exit_config;
  } catch (const AdmissibilityError& e) {
    err << "admissibility failure: " << e.what() << "\n";
    return exit_admissibility;
  } catch (const FluxError& e) {
    err << "admissibility failure: " << e.what() << "\n";
    return exit_admissibility;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

// Full command-line entry point.
inline int main_entry(int argc, const char* const* argv, std::ostream& log = std::cout,
                      std::ostream& err = std::cerr) {
  RunConfig c;
  try {
    c = parse_config(argc, argv);
  } catch (const CLI::CallForHelp&) {
    CLI::App app{"Multi-resolution HWENO solver for Burgers and Euler equations", "mrhweno"};
    app.set_config("--config", "", "read options from a key = value file");
    RunConfig dummy;
    detail::add_options(app, dummy);
    log << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "configuration error: " << e.what() << "\n";
    return exit_config;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return exit_config;
  }
  return run(c, log, err);
}

}  // namespace mrhweno
