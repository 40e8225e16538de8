#include "ocpoly/rational.hpp"

#include "ocpoly/error.hpp"

namespace ocpoly {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_compact_string(const Rational& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return to_string(value);
}

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational");
  auto slash = s.find('/');
  Integer num, den = 1;
  auto parse_int = [](const std::string& part, Integer& out) {
    if (part.empty() || out.set_str(part, 10) != 0)
      fail(ErrorKind::ParseError, "malformed rational component '" + part + "'");
  };
  if (slash == std::string::npos) {
    parse_int(s, num);
  } else {
    parse_int(s.substr(0, slash), num);
    parse_int(s.substr(slash + 1), den);
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string format_point(const Point& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ", ";
    out += to_compact_string(point[i]);
  }
  return out + ")";
}

Integer factorial(int n) {
  Integer result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

}  // namespace ocpoly
