#pragma once

// Symmetric vaccine efficacy: estimators, variances, confidence intervals,
// and the Monte Carlo harness for their operating characteristics.

#include "sve/config.hpp"
#include "sve/errors.hpp"
#include "sve/estimands.hpp"
#include "sve/intervals.hpp"
#include "sve/labbe.hpp"
#include "sve/likelihood.hpp"
#include "sve/numerics.hpp"
#include "sve/output.hpp"
#include "sve/quantiles.hpp"
#include "sve/rng.hpp"
#include "sve/simulation.hpp"
#include "sve/variance.hpp"
#include "sve/vax004.hpp"
