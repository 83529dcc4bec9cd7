#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bforge {

// Exact arithmetic for all cost values. Costs divide by the total job
// frequency, and several tests require exact zero detection, so floats are
// out of the question.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Prints "p/q" when q != 1, else just "p". Exact zero prints "0".
inline std::string rational_to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace bforge
