#pragma once

#include "driftmax/constants/ledger.hpp"
#include "driftmax/constants/magnitude.hpp"
#include "driftmax/constants/theorem_constants.hpp"
#include "driftmax/constants/tilt.hpp"
