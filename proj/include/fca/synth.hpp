#pragma once

#include <cstdint>
#include <vector>

#include "fca/context.hpp"

namespace fca {

/// Parameters of a coin-toss random context.
struct CoinTossSpec {
    std::size_t n_objects = 0;
    std::size_t n_attributes = 0;
    double density = 0.5;
    std::uint64_t seed = 0;
    // Optional per-object probabilities overriding `density` row by row
    // (size n_objects when set); a hook for indirect coin-toss variants.
    std::vector<double> object_density;
};

/// Every cell is set independently with its row's probability. The stream is
/// std::mt19937_64 seeded with `seed`, consumed row-major, one draw per cell;
/// a cell is set iff (draw >> 11) * 2^-53 < p. Objects are "g1".."gN",
/// attributes "m1".."mM". Throws DomainError(InvalidSpec) on a bad spec.
FormalContext coin_toss_context(const CoinTossSpec& spec);

}  // namespace fca
