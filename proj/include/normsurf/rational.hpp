// Exact rational scalars. Every number in the library is an Integer or a
// Rational; no floating-point value is ever constructed or consumed.
//
// Rational is boost::multiprecision::cpp_rational, which keeps values in
// lowest terms with a positive denominator as an internal invariant.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "normsurf/errors.hpp"

namespace normsurf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Builds p/q with sign normalization. q must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p", "+p", "-p", or "p/q" (q a positive digit string). Anything
// else, including floats, raises ParseError.
Rational parse_rational(std::string_view text);

// Lowest-terms rendering: "p/q", or just "p" when the value is integral.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integral(const Rational& value);

// lcm of denominators, i.e. the least m > 0 with m*v integral for all v.
Integer denominator_lcm(const RatVec& values);

} // namespace normsurf
