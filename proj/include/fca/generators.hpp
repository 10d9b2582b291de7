#pragma once

#include <vector>

#include "fca/lattice.hpp"

namespace fca {

/// Minimal generators of one intent, sorted by (size, lexicographic attribute order).
struct GeneratorSet {
    std::vector<AttrSet> generators;

    std::size_t size() const { return generators.size(); }
    bool empty() const { return generators.empty(); }
    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// One face B \ B_u per upper cover (A_u, B_u) of the concept, in cover order.
/// Empty for the supremum.
std::vector<AttrSet> faces(const ConceptLattice& lattice, ConceptId c);

/// Minigen: the inclusion-minimal transversals of the face family, built one
/// face at a time over the minimal faces, smallest first. Each face either already meets a partial generator or
/// forces it to grow by one face attribute; non-minimal sets are dropped
/// after every face. The supremum yields {{}}.
GeneratorSet minimal_generators(const ConceptLattice& lattice, ConceptId c);

/// Test oracle over the powerset of the intent. Throws
/// GuardError(IntentTooLarge) when |B| > 20.
GeneratorSet brute_force_minimal_generators(const FormalContext& ctx, const FormalConcept& c);

/// Sorts and removes non-minimal members in place.
void keep_minimal(std::vector<AttrSet>& sets);

}  // namespace fca
