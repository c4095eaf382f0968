#pragma once

// Umbrella header: twistor lifts of slice-regular quaternionic polynomials,
// orbit classification on the Klein quadric, planarity analysis, and normal
// forms under the lower-triangular quaternionic group.

#include "twistor/cpoly.hpp"
#include "twistor/errors.hpp"
#include "twistor/gl2h.hpp"
#include "twistor/json_io.hpp"
#include "twistor/klein.hpp"
#include "twistor/orbits.hpp"
#include "twistor/planarity.hpp"
#include "twistor/polynomial.hpp"
#include "twistor/quaternion.hpp"
#include "twistor/roots.hpp"
#include "twistor/service.hpp"
#include "twistor/tolerance.hpp"
