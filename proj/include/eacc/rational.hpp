#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eacc {

// All bound arithmetic is exact: the optimality thresholds sit right next
// to integer boundaries, where floating point would misclassify.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "a/b" in lowest terms, or just "a" when the denominator is 1.
std::string format_rational(const Rational& r);

// Accepts "a/b", decimal strings like "0.25", and plain integers.
Rational parse_rational(const std::string& text);

}  // namespace eacc
