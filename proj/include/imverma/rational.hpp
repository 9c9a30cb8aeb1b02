#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace imverma {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "a" or "a/b" with optional sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Canonical text: "a" for integers, "a/b" otherwise (b > 0).
std::string rational_text(const Rational& r);

}  // namespace imverma
