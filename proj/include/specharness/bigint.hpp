#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace specharness {

// Arbitrary-precision signed integer used for mathematical-integer
// arithmetic in contract evaluation.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace specharness
