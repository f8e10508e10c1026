#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chains {

/// Arbitrary-precision signed integer. Chain counts and walk counts are
/// stored in this type; they are never rounded and cannot wrap.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace chains
