#pragma once

// Exact-arithmetic foundation: arbitrary-precision integers, reduced
// rationals, and truncating fixed-point decimals.

#include "metallic/error.hpp"
#include "metallic/fixed_real.hpp"
#include "metallic/integer.hpp"
#include "metallic/rational.hpp"
