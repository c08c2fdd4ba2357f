#pragma once

#include "w15j/half_int.hpp"

namespace w15j {

// Reduced rotation matrix element d^s_{nu mu}(theta) (rotation about y),
// Wigner's closed-form sum. Throws std::invalid_argument for out-of-range or
// non-integral index combinations.
double wigner_d(HalfInt s, HalfInt nu, HalfInt mu, double theta);

} // namespace w15j
