#pragma once

/// Umbrella header for the thermogeom library: Hessian thermodynamic
/// metrics, their degeneracy loci and scalar curvature for single-component
/// gases, closed-system chemical reactions and open multicomponent
/// solutions.

#include "thermogeom/csv.hpp"
#include "thermogeom/errors.hpp"
#include "thermogeom/gas.hpp"
#include "thermogeom/jet.hpp"
#include "thermogeom/linalg.hpp"
#include "thermogeom/metric.hpp"
#include "thermogeom/numdiff.hpp"
#include "thermogeom/reaction.hpp"
#include "thermogeom/scan.hpp"
#include "thermogeom/solution.hpp"
#include "thermogeom/standard_state.hpp"
