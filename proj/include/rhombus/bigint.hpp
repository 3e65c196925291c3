#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rhombus {

// Exact integer type for sequence values and the integer rhombus.
// Center entries grow like 3.56^n and overflow 64 bits near n = 35.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(int e) { return BigInt(1) << e; }

}  // namespace rhombus
