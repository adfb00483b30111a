#pragma once

// Umbrella header.

#include "binomia/rational.hpp"
#include "binomia/gaussian_rational.hpp"
#include "binomia/scalar.hpp"
#include "binomia/exponent.hpp"
#include "binomia/stirling.hpp"
#include "binomia/ff_poly.hpp"
#include "binomia/derivation.hpp"
#include "binomia/series.hpp"
#include "binomia/numeric.hpp"
