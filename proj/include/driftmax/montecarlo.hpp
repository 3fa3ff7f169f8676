#pragma once

#include "driftmax/montecarlo/engine.hpp"
#include "driftmax/montecarlo/estimate.hpp"
#include "driftmax/montecarlo/estimators.hpp"
