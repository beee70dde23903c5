#pragma once

// Umbrella header.

#include "coefficients.hpp"
#include "curves.hpp"
#include "diagnostics.hpp"
#include "errors.hpp"
#include "fe_data.hpp"
#include "io.hpp"
#include "numeric.hpp"
#include "powers.hpp"
#include "primes.hpp"
#include "satake.hpp"
#include "siegel.hpp"
