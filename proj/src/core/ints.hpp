#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace rf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floored division (quotient rounded toward minus infinity). cpp_int's
// operator/ truncates toward zero; the SNF reduction loops assume floored
// quotients.
inline Int floordiv(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Accepts "p", "-p", "p/q". Throws std::runtime_error on garbage.
Rat parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rat& r);

}  // namespace rf
