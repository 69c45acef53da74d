// Arbitrary-precision integer type used for all exact coefficients.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ttk {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace ttk
