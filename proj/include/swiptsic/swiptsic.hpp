#pragma once
// Umbrella header for the whole library.

#include "swiptsic/analytic.hpp"
#include "swiptsic/config_io.hpp"
#include "swiptsic/errors.hpp"
#include "swiptsic/optimizer.hpp"
#include "swiptsic/params.hpp"
#include "swiptsic/simulator.hpp"
#include "swiptsic/specfun.hpp"
#include "swiptsic/sweep.hpp"
