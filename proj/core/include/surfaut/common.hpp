#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace surfaut {

// Every computation in this library is exact: arbitrary-precision integers
// and rationals throughout, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Input that cannot be parsed at all (malformed file, bad flag syntax,
// unknown keys).  The CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input parses but violates a hypothesis of the requested operation
// (incompatible type/curve pair, inconsistent covering datum, ...).
// The message names the violated hypothesis.  CLI exit code 3.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_string(const Int& n);

// Lowest terms; integral values print without the "/1".
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& text);  // "p/q" or "p"

}  // namespace surfaut
