#pragma once

// Umbrella header: exact q-series, partition enumeration, the restricted
// family counters, the rho construction, and the identity catalog.

#include "rhoq/catalog.hpp"
#include "rhoq/errors.hpp"
#include "rhoq/family.hpp"
#include "rhoq/integer.hpp"
#include "rhoq/merca.hpp"
#include "rhoq/partition.hpp"
#include "rhoq/render.hpp"
#include "rhoq/rho.hpp"
#include "rhoq/series.hpp"
