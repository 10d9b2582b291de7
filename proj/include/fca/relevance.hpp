#pragma once

#include <cstdint>

#include "fca/generators.hpp"

namespace fca {

/// Which attributes are removed together with m in the base-attribute test.
enum class BaseRule {
    /// {m} plus intent attributes whose extent is strictly inside m'.
    /// Reproduces the hand-worked alpha = 1/3 for ({1,2,3},{c,d,g}).
    WorkedExample,
    /// Every intent attribute y with y' a subset of m' (m itself included),
    /// read literally from the set-builder formula.
    LiteralNonStrict,
};

struct StabilityScore {
    std::uint64_t numerator = 0;    // subsets e of B with e' = A
    std::uint64_t denominator = 1;  // 2^|B|

    Rational value() const {
        return Rational(static_cast<std::int64_t>(numerator), static_cast<std::int64_t>(denominator));
    }
    double as_double() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    friend bool operator==(const StabilityScore&, const StabilityScore&) = default;
};

inline constexpr std::size_t kMaxStabilityIntent = 30;

struct AlphaTerm {
    Rational value;
    AttrSet base_attributes;
    AttrSet equivalent_attributes;
};

struct BecrBreakdown {
    Rational alpha;
    Rational beta;
    Rational becr;  // (alpha + beta) / 2
    AttrSet base_attributes;
    AttrSet equivalent_attributes;
    GeneratorSet generators;

    std::size_t generator_count() const { return generators.size(); }
};

/// m is a base attribute of B iff m is not in (B \ R(m))'', with R(m) chosen
/// by `rule`. Throws DomainError(AttributeNotInIntent) if m is not in B.
bool is_base_attribute(const FormalContext& ctx, const FormalConcept& c, AttributeId m,
                       BaseRule rule = BaseRule::WorkedExample);

/// Removes every intent attribute with exactly m's extent before closing.
bool is_extremal_attribute(const FormalContext& ctx, const FormalConcept& c, AttributeId m);

/// {m in B | m' = A and |m''| > 1}
AttrSet equivalent_attributes(const FormalContext& ctx, const FormalConcept& c);

/// Ratio of base attributes in B; when there are none, ratio of equivalent
/// attributes instead. Zero for an empty intent.
AlphaTerm alpha_term(const FormalContext& ctx, const FormalConcept& c, BaseRule rule = BaseRule::WorkedExample);

Rational beta_term(const FormalConcept& c, const GeneratorSet& generators);

/// End to end: Minigen over the lattice covers, then alpha and beta.
BecrBreakdown becr(const FormalContext& ctx, const ConceptLattice& lattice, ConceptId c,
                   BaseRule rule = BaseRule::WorkedExample);

/// BECR as an unreduced fraction: (alpha + beta) / 2 = numerator / (2|B|).
struct BecrScore {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    Rational value() const {
        return Rational(static_cast<std::int64_t>(numerator), static_cast<std::int64_t>(denominator));
    }
    double as_double() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// The BECR value alone, without materializing generator or witness sets.
/// Same Minigen and alpha computation as `becr`; this is what the benchmark times.
BecrScore becr_value(const FormalContext& ctx, const ConceptLattice& lattice, ConceptId c,
                    BaseRule rule = BaseRule::WorkedExample);

/// Extensional stability by exhaustive enumeration of the intent's powerset,
/// extending the running extent one attribute at a time.
/// Throws GuardError(IntentTooLarge) for |B| > 30.
StabilityScore stability(const FormalContext& ctx, const FormalConcept& c);

/// Same count, recomputing each subset's extent from scratch.
StabilityScore stability_oracle(const FormalContext& ctx, const FormalConcept& c);

}  // namespace fca
