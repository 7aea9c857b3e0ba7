#pragma once

// Umbrella header for the strip-cover / sensor-cover solver suite.

#include "rsc/approx.hpp"
#include "rsc/core.hpp"
#include "rsc/error.hpp"
#include "rsc/exact.hpp"
#include "rsc/gen.hpp"
#include "rsc/grouping.hpp"
#include "rsc/io.hpp"
#include "rsc/rational.hpp"
#include "rsc/render.hpp"
#include "rsc/rng.hpp"
#include "rsc/setcover.hpp"
