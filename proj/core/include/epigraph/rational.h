#ifndef EPIGRAPH_RATIONAL_H_
#define EPIGRAPH_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace epigraph {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "3", "-7/2", "0.25", "1e-3" exactly.
Rational parse_rational(std::string_view text);

// "p/q" or "p" when q == 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// log10 of a positive rational without converting through double first,
// so values far beyond the double range still work.
double log10_of(const Rational& value);

}  // namespace epigraph

#endif  // EPIGRAPH_RATIONAL_H_
