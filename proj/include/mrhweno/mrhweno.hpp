#pragma once

// Umbrella header for the solver library (the command-line layer lives in config.hpp).

#include "mrhweno/boundary.hpp"
#include "mrhweno/driver.hpp"
#include "mrhweno/errors.hpp"
#include "mrhweno/fields.hpp"
#include "mrhweno/grid.hpp"
#include "mrhweno/harness.hpp"
#include "mrhweno/physics.hpp"
#include "mrhweno/polynomial.hpp"
#include "mrhweno/problems.hpp"
#include "mrhweno/quadrature.hpp"
#include "mrhweno/recon1d.hpp"
#include "mrhweno/recon2d.hpp"
#include "mrhweno/reference.hpp"
#include "mrhweno/riemann.hpp"
#include "mrhweno/rk3.hpp"
#include "mrhweno/scheme.hpp"
#include "mrhweno/solver1d.hpp"
#include "mrhweno/solver2d.hpp"
#include "mrhweno/troubled.hpp"
#include "mrhweno/weights.hpp"
