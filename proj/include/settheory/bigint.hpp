#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace settheory {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace settheory
