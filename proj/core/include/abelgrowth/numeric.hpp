#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace abelgrowth {

// Ball sizes and sphere sizes overflow 64 bits quickly (a rank-4 ball of
// radius 40 is already ~10^6, higher ranks and radii grow like r^d), so all
// counting is done in arbitrary precision and only converted at the edges.
using Count = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

} // namespace abelgrowth
