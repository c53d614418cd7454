#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace downup {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool rat_is_zero(const Rational& x) { return x.is_zero(); }

inline std::string rat_to_string(const Rational& x) { return x.str(); }

}  // namespace downup
