#pragma once

// Umbrella header for the library.

#include "toric/dag.hpp"
#include "toric/enriched.hpp"
#include "toric/error.hpp"
#include "toric/integer.hpp"
#include "toric/orderpoly.hpp"
#include "toric/perm.hpp"
#include "toric/qsym.hpp"
#include "toric/series.hpp"
#include "toric/subset.hpp"
