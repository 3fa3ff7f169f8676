#pragma once

#include "driftmax/walks/assumptions.hpp"
#include "driftmax/walks/path.hpp"
#include "driftmax/walks/step_distribution.hpp"
