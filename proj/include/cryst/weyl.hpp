#pragma once

#include "cryst/kn.hpp"

#include <cstdint>

namespace cryst {

// Dimension of the irreducible module with highest weight omega_lambda, by the
// product formula over the positive roots; exact integer arithmetic.
std::int64_t weyl_dim(LieType t, int n, const Shape& shape);

} // namespace cryst
