#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace repvar {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace repvar
