#pragma once

#include "legcount/rational.hpp"

#include <cstdint>
#include <vector>

namespace legcount {

// The torus weights lambda_0..lambda_N, exact and pairwise distinct.
struct WeightAssignment {
    std::vector<Rational> lambdas;

    int label_bound() const { return static_cast<int>(lambdas.size()) - 1; }

    // Throws std::invalid_argument unless the entries are pairwise distinct.
    void validate() const;
};

WeightAssignment make_weights(const std::vector<long>& values);

// Deterministic in (seed, attempt): label_bound+1 pairwise-distinct nonzero
// integers spread over the full signed 64-bit range. Identical on every
// platform; no std::uniform_int_distribution involved.
WeightAssignment draw_weights(int label_bound, std::uint64_t seed,
                              std::uint32_t attempt);

}  // namespace legcount
