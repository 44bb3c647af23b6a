#include "semiord/rational.hpp"

#include <sstream>

#include "semiord/errors.hpp"

namespace semiord {

std::string rat_str(const Rational& q) {
  std::ostringstream os;
  os << rat_num(q);
  if (rat_den(q) != 1) os << '/' << rat_den(q);
  return os.str();
}

Rational rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: " + text);
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational: " + text);
  }
}

Int rat_ceil(const Rational& q) {
  Int n = rat_num(q), d = rat_den(q);  // d > 0 canonical
  Int quo = n / d;
  if (quo * d < n) ++quo;  // round toward +inf
  return quo;
}

}  // namespace semiord
