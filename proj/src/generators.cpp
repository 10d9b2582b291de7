#include "fca/generators.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include "fca/errors.hpp"
#include "minigen_word.hpp"

namespace fca {

void keep_minimal(std::vector<AttrSet>& sets) {
    std::sort(sets.begin(), sets.end(), size_lex_less<AttributeTag>);
    std::vector<AttrSet> kept;
    kept.reserve(sets.size());
    for (auto& s : sets) {
        // kept is size-sorted, so only earlier (no larger) sets can be subsets;
        // an equal duplicate is caught the same way.
        const bool dominated =
            std::any_of(kept.begin(), kept.end(), [&](const AttrSet& k) { return k.is_subset_of(s); });
        if (!dominated) kept.push_back(std::move(s));
    }
    sets = std::move(kept);
}

std::vector<AttrSet> faces(const ConceptLattice& lattice, ConceptId c) {
    const AttrSet& intent = lattice.at(c).intent;
    std::vector<AttrSet> out;
    out.reserve(lattice.upper_covers(c).size());
    for (ConceptId u : lattice.upper_covers(c)) out.push_back(intent - lattice.at(u).intent);
    return out;
}

namespace {

using Word = simd::Word;
using detail::MaskList;
using detail::MinigenScratch;

bool mask_size_lex_less(Word a, Word b) {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    const Word diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
}

// Same procedure with every attribute set in one machine word.
std::optional<GeneratorSet> minigen_single_word(const ConceptLattice& lattice, ConceptId c) {
    MinigenScratch scratch;
    MaskList* masks = scratch.run(lattice, c);
    if (masks == nullptr) return std::nullopt;
    std::sort(masks->begin(), masks->end(), mask_size_lex_less);

    const std::size_t universe = lattice.at(c).intent.universe();
    GeneratorSet out;
    out.generators.reserve(masks->n);
    for (Word h : *masks) {
        AttrSet& g = out.generators.emplace_back(universe);
        g.words()[0] = h;
    }
    return out;
}

}  // namespace

GeneratorSet minimal_generators(const ConceptLattice& lattice, ConceptId c) {
    const AttrSet& intent = lattice.at(c).intent;
    const auto& covers = lattice.upper_covers(c);
    if (covers.empty()) return {{AttrSet(intent.universe())}};
    if (intent.word_count() == 1)
        if (auto fast = minigen_single_word(lattice, c)) return std::move(*fast);

    // Only the inclusion-minimal faces matter; keep_minimal also puts the small ones first.
    std::vector<AttrSet> reduced = faces(lattice, c);
    keep_minimal(reduced);

    std::vector<AttrSet> current;
    std::vector<AttrSet> next;
    std::vector<AttrSet> missing;
    bool first = true;
    for (const AttrSet& face : reduced) {
        if (first) {
            face.for_each([&](std::size_t a) { current.push_back(AttrSet::of(intent.universe(), {a})); });
            first = false;
            continue;
        }
        // Sets hitting the face stay minimal. An extension h + a can only be
        // dominated by one of them: extensions of distinct members of an
        // antichain never contain each other.
        next.clear();
        missing.clear();
        for (auto& h : current) (h.intersects(face) ? next : missing).push_back(std::move(h));
        const std::size_t kept = next.size();
        for (const auto& h : missing) {
            face.for_each([&](std::size_t a) {
                AttrSet extended = h;
                extended.insert(a);
                const bool dominated = std::any_of(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(kept),
                                                   [&](const AttrSet& k) { return k.is_subset_of(extended); });
                if (!dominated) next.push_back(std::move(extended));
            });
        }
        std::swap(current, next);
    }
    std::sort(current.begin(), current.end(), size_lex_less<AttributeTag>);
    return {std::move(current)};
}

GeneratorSet brute_force_minimal_generators(const FormalContext& ctx, const FormalConcept& c) {
    constexpr std::size_t kMaxIntent = 20;
    const auto members = c.intent.indices();
    if (members.size() > kMaxIntent)
        throw GuardError(GuardErrc::IntentTooLarge,
                         "powerset oracle needs |B| <= 20, got " + std::to_string(members.size()));

    std::vector<AttrSet> generators;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
        AttrSet h = ctx.no_attributes();
        for (std::size_t i = 0; i < members.size(); ++i)
            if (mask >> i & 1U) h.insert(members[i]);
        if (ctx.close_attrs(h) == c.intent) generators.push_back(std::move(h));
    }
    keep_minimal(generators);
    return {std::move(generators)};
}

}  // namespace fca
