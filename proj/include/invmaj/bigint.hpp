#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace invmaj {

/// Exact integer for counts and polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace invmaj
