#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mrhweno/errors.hpp"

namespace mrhweno {

// hweno6: reconstruction only. m5_i: KXRCF-gated first-moment modification.
// m5_ni: first moments of every cell modified unconditionally.
enum class Scheme { hweno6, m5_i, m5_ni };

inline Scheme parse_scheme(const std::string& name) {
  if (name == "hweno6") return Scheme::hweno6;
  if (name == "m5-i" || name == "m5_i") return Scheme::m5_i;
  if (name == "m5-ni" || name == "m5_ni") return Scheme::m5_ni;
  throw ConfigError("unknown scheme '" + name + "' (expected hweno6, m5-i or m5-ni)");
}

inline std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::hweno6:
      return "hweno6";
    case Scheme::m5_i:
      return "m5-i";
    case Scheme::m5_ni:
      return "m5-ni";
  }
  return "?";
}

struct SchemeOptions {
  Scheme scheme = Scheme::m5_i;
  double cfl = 0.6;
  // Accuracy-test mode: dt scaled by min(1, dx / l_ref) so the time error drops below the
  // spatial error.
  bool accuracy = false;
  double l_ref = 1.0;
  double weight_base = 10.0;
  // Euler only: reconstruct in local characteristic variables of the cell average instead of
  // component by component.
  bool characteristic = false;
  int threads = 1;
};

// Summary of one accepted time step. `troubled` lists the interior cells flagged in any of the
// three stages (linear index i in 1D, i + nx j in 2D).
struct StepInfo {
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
  int troubled_count = 0;
  double troubled_fraction = 0.0;
  const std::vector<char>* troubled = nullptr;
};

using StepCallback = std::function<void(const StepInfo&)>;

struct RunResult {
  double t = 0.0;
  long steps = 0;
  double max_troubled_fraction = 0.0;
  long troubled_cell_steps = 0;
};

inline void check_run_interval(double t0, double t_final) {
  if (!(t_final > t0)) throw ConfigError("final time must exceed the start time");
}

}  // namespace mrhweno
