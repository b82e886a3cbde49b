#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace patree {

/// Exact coefficient type for every symbolic computation.
using Rational = boost::multiprecision::cpp_rational;

/// Parses `p`, `-p` or `p/q` (decimal integers of any length).
Rational parse_rational(const std::string& text);

/// Lowest-terms text form: `3`, `-1/2`.
std::string to_string(const Rational& r);

}  // namespace patree
