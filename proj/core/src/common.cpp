#include "surfaut/common.hpp"

namespace surfaut {

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rational& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw parse_error("rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw parse_error(std::string("not a rational: ") + text);
  }
}

}  // namespace surfaut
