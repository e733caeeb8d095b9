// Computes a fine-grid 1D solution and stores its cell averages as a reference profile.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "mrhweno/config.hpp"

int main(int argc, char** argv) {
  using namespace mrhweno;
  std::string problem = "shu-osher";
  std::string scheme = "m5-i";
  std::string out;
  int nx = 8000;
  bool characteristic = false;
  CLI::App app{"Fine-grid reference profile generator", "mrhweno_reference"};
  app.add_option("--problem", problem, "1D problem name")->check(CLI::IsMember(problem_names()));
  app.add_option("--scheme", scheme, "hweno6, m5-i or m5-ni");
  app.add_option("--nx", nx, "cells")->check(CLI::PositiveNumber);
  app.add_option("--out", out, "output file (default: data directory / profile name)");
  app.add_flag("--characteristic", characteristic, "characteristic-wise reconstruction");
  CLI11_PARSE(app, argc, argv);
  try {
    const ProblemSpec spec = make_problem(problem);
    if (dimension(spec.system) != 1) throw ConfigError("reference profiles are 1D only");
    if (out.empty()) {
      if (spec.profile_file.empty()) throw ConfigError("problem has no stored profile name");
      out = data_directory() + "/" + spec.profile_file;
    }
    RunRequest req;
    req.options.scheme = parse_scheme(scheme);
    req.options.characteristic = characteristic;
    req.nx = nx;
    req.log_troubled = false;
    const RunOutput run = run_problem(spec, req);
    std::vector<double> x(run.grid1.n);
    std::vector<StateVec> state(run.grid1.n);
    for (int i = 0; i < run.grid1.n; ++i) {
      x[i] = run.grid1.center(i);
      state[i] = StateVec{};
      for (int k = 0; k < run.field1.nvars(); ++k) state[i][k] = run.field1.u(k, i);
    }
    const std::string comment = problem + " reference: scheme " + scheme +
                                (characteristic ? " (characteristic)" : "") + ", n = " +
                                std::to_string(nx) + ", t = " + std::to_string(run.result.t);
    save_profile(out, comment, spec.x_lo, spec.x_hi, x, state, run.field1.nvars());
    std::cout << "wrote " << out << " (" << run.result.steps << " steps)\n";
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return exit_config;
  } catch (const AdmissibilityError& e) {
    std::cerr << "admissibility failure: " << e.what() << "\n";
    return exit_admissibility;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_ok;
}
