#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace simhom {

/// Exact arbitrary-precision integer. Chain coefficients and all matrix
/// arithmetic use this type; Smith reduction can blow up intermediate
/// entries well past 64 bits even on small inputs.
using Int = boost::multiprecision::cpp_int;

} // namespace simhom
