#include "epigraph/rational.h"

#include <cctype>
#include <cmath>
#include <string>

#include "epigraph/error.h"

namespace epigraph {
namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) return 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad number '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits));
}

BigInt pow10(long exponent) {
  BigInt out = 1;
  for (long i = 0; i < exponent; ++i) out *= 10;
  return out;
}

double log10_of_positive(const BigInt& x) {
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log10(x.convert_to<double>());
  const unsigned shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log10(top.convert_to<double>()) + shift * std::log10(2.0);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");
  const std::string_view whole = text;
  if (const size_t slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    return num / den;
  }
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const size_t e = text.find_first_of("eE"); e != std::string_view::npos) {
    const std::string exp_text(text.substr(e + 1));
    char* end = nullptr;
    exponent = std::strtol(exp_text.c_str(), &end, 10);
    if (exp_text.empty() || end != exp_text.c_str() + exp_text.size() || std::labs(exponent) > 4000) {
      throw ParseError("bad exponent in '" + std::string(whole) + "'");
    }
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (const size_t dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw ParseError("bad number '" + std::string(whole) + "'");
  const BigInt mantissa = parse_digits(int_part, whole) * pow10(static_cast<long>(frac_part.size())) +
                          parse_digits(frac_part, whole);
  Rational value(mantissa, pow10(static_cast<long>(frac_part.size())));
  if (exponent > 0) value *= Rational(pow10(exponent));
  if (exponent < 0) value /= Rational(pow10(-exponent));
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return value.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

double log10_of(const Rational& value) {
  if (value <= 0) throw DomainError("log10 of a nonpositive value");
  return log10_of_positive(boost::multiprecision::numerator(value)) -
         log10_of_positive(boost::multiprecision::denominator(value));
}

}  // namespace epigraph
