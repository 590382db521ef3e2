#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dp1 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "a/b" or "a"
Rat parse_rational(const std::string& s);
std::string rational_string(const Rat& r);

inline int sign_of(const Rat& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

}  // namespace dp1
