#pragma once

// Recovery of strictly proper rational functions from unit-circle coefficient
// windows via split Hankel matrix pencils, with per-pole sensitivity analysis
// and an AAA baseline for comparison experiments.

#include "ratrec/aaa.hpp"
#include "ratrec/experiments.hpp"
#include "ratrec/exponential.hpp"
#include "ratrec/json_io.hpp"
#include "ratrec/rational.hpp"
#include "ratrec/sensitivity.hpp"
#include "ratrec/types.hpp"
