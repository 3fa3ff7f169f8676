#pragma once

#include "driftmax/oracles/bounds.hpp"
#include "driftmax/oracles/exact.hpp"
