#pragma once

#include <vector>

#include "hs/test_function.hpp"

namespace hs {

// Seeded collection of compactly supported functions on the open half-space
// in R^{n+1}: piecewise-linear radial bumps and cutoff closed-form profiles,
// all with support a positive distance from t = 0 so every weighted integral
// the checkers form is finite, including negative-exponent weights.
std::vector<TestFunction> make_corpus(int n, unsigned long seed, int count);

}  // namespace hs
