// Exact arithmetic aliases.  Everything that counts codewords is integral;
// mean values are exact rationals, never floating point.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace wit
