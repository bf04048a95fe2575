#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symrep {

// All engine arithmetic is exact. Int for coordinates, g matrices and
// group-algebra coefficients; Rat only where a division by the scale
// factor is semantically required (unit idempotents, dual expansions).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace symrep
