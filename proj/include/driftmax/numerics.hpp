#pragma once

#include "driftmax/numerics/normal.hpp"
#include "driftmax/numerics/quadrature.hpp"
#include "driftmax/numerics/rng.hpp"
#include "driftmax/numerics/roots.hpp"
#include "driftmax/numerics/sampling.hpp"
#include "driftmax/numerics/special_functions.hpp"
