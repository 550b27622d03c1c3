#include "relaxmatch/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

#include "relaxmatch/errors.hpp"

namespace relaxmatch {

namespace {

BigInt pow10(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 0; i < n; ++i) result *= 10;
  return result;
}

Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  std::size_t frac_len = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) throw ParseError("invalid rational literal: " + text);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      digits.push_back(c);
      if (seen_point) ++frac_len;
    } else {
      throw ParseError("invalid rational literal: " + text);
    }
  }
  if (!seen_digit) throw ParseError("invalid rational literal: " + text);
  // Leading zeros would make cpp_int read the string as octal.
  std::size_t first = digits.find_first_not_of('0');
  BigInt numerator(first == std::string::npos ? "0" : digits.substr(first));
  if (negative) numerator = -numerator;
  return Rational(numerator, pow10(frac_len));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  if (slash == 0 || slash + 1 >= text.size() || text.find('/', slash + 1) != std::string::npos)
    throw ParseError("invalid rational literal: " + text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational literal: " + text);
  return num / den;
}

std::string format_rational(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  // Count factors of 2 and 5 in the denominator.
  BigInt rest = den;
  std::size_t twos = 0;
  std::size_t fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();

  std::size_t shift = std::max(twos, fives);
  BigInt scaled = num;
  for (std::size_t i = twos; i < shift; ++i) scaled *= 2;
  for (std::size_t i = fives; i < shift; ++i) scaled *= 5;

  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= shift) digits.insert(0, shift - digits.size() + 1, '0');
  digits.insert(digits.size() - shift, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (negative ? "-" : "") + digits;
}

std::string format_fixed(const Rational& value, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  num *= pow10(digits);
  BigInt rounded = (num * 2 + den) / (den * 2);
  std::string text = rounded.str();
  if (text.size() <= digits) text.insert(0, digits - text.size() + 1, '0');
  if (digits > 0) text.insert(text.size() - digits, ".");
  return (negative && rounded != 0 ? "-" : "") + text;
}

Bound parse_bound(const std::string& text) {
  std::string lower;
  lower.reserve(text.size());
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf" || lower == "infinity") return std::nullopt;
  Rational value = parse_rational(text);
  if (value < 0) throw ParseError("cost bound must be nonnegative, got " + text);
  return value;
}

std::string format_bound(const Bound& bound) {
  return bound.has_value() ? format_rational(*bound) : "inf";
}

}  // namespace relaxmatch
