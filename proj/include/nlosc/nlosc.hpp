#pragma once

// Umbrella header for the nlosc library: the period of the oscillator
// x'' + (1 + x'^2) x = 0 by quadrature, direct integration, and
// small-amplitude series analysis (exact rational coefficients, Pade
// singularity scans, radius-of-convergence estimation).

#include "errors.hpp"
#include "ode.hpp"
#include "oscillator_series.hpp"
#include "pade.hpp"
#include "period.hpp"
#include "poly_roots.hpp"
#include "power_series.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "selftest.hpp"
#include "singularity.hpp"
#include "version.hpp"
