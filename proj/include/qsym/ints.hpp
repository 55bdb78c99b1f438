#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qsym {

// Exact signed coefficients. All structure constants handled by this
// library are integers, so no rational arithmetic is needed.
using Int = boost::multiprecision::cpp_int;

inline Int neg_one_pow(int k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

} // namespace qsym
