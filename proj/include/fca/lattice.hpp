#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fca/context.hpp"

namespace fca {

struct FormalConcept {
    ObjSet extent;
    AttrSet intent;

    friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

/// 0-based position of a concept in lectic order of intents.
using ConceptId = std::size_t;

inline constexpr std::size_t kDefaultConceptBudget = 1'000'000;

/// Every concept of `ctx` exactly once, sorted in lectic order of intents
/// (the supremum first, the infimum last). Close-by-One enumeration.
/// Throws GuardError(ConceptBudgetExceeded) once more than `budget` concepts exist.
std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx, std::size_t budget = kDefaultConceptBudget);

/// Test oracle: closes every subset of G. Throws GuardError(ContextTooLarge) for |G| > 20.
std::vector<FormalConcept> brute_force_concepts(const FormalContext& ctx);

/// Concepts with their cover relation. c <= d iff extent(c) is a subset of extent(d).
class ConceptLattice {
public:
    ConceptLattice() = default;

    std::size_t size() const { return concepts_.size(); }
    const FormalConcept& at(ConceptId id) const { return concepts_[id]; }
    const std::vector<FormalConcept>& concepts() const { return concepts_; }

    /// Immediate superconcepts, in increasing id order.
    const std::vector<ConceptId>& upper_covers(ConceptId id) const { return upper_[id]; }
    /// Immediate subconcepts, in increasing id order.
    const std::vector<ConceptId>& lower_covers(ConceptId id) const { return lower_[id]; }

    ConceptId supremum() const { return supremum_; }
    ConceptId infimum() const { return infimum_; }

    std::optional<ConceptId> find(const AttrSet& intent) const;
    std::optional<ConceptId> find(const FormalConcept& c) const { return find(c.intent); }

    /// c <= d in the concept order.
    bool leq(ConceptId c, ConceptId d) const { return concepts_[c].extent.is_subset_of(concepts_[d].extent); }

    friend ConceptLattice build_covers(std::vector<FormalConcept> concepts);

private:
    std::vector<FormalConcept> concepts_;
    std::vector<std::vector<ConceptId>> upper_;
    std::vector<std::vector<ConceptId>> lower_;
    std::unordered_map<AttrSet, ConceptId, IndexSetHash> by_intent_;
    ConceptId supremum_ = 0;
    ConceptId infimum_ = 0;
};

/// `concepts` must be a complete concept set (as from enumerate_concepts).
ConceptLattice build_covers(std::vector<FormalConcept> concepts);

/// enumerate_concepts + build_covers.
ConceptLattice build_lattice(const FormalContext& ctx, std::size_t budget = kDefaultConceptBudget);

/// The attribute concept (m', m'').
FormalConcept attribute_concept(const FormalContext& ctx, AttributeId m);
ConceptId attribute_concept(const ConceptLattice& lattice, const FormalContext& ctx, AttributeId m);

}  // namespace fca
