#pragma once

#include <vector>

#include "figrf/math.hpp"
#include "figrf/rng.hpp"

namespace figrf {

// Weighted sampling without replacement by sequential renormalization: each
// draw picks index i with probability p_i over the remaining mass, then
// removes it. Returns m distinct indices in draw order.
std::vector<int> weighted_sample_without_replacement(const Eigen::Ref<const Vector>& probabilities,
                                                     int m, Rng& rng);

}  // namespace figrf
