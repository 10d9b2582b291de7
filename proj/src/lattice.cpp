#include "fca/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "fca/errors.hpp"

namespace fca {

namespace {

// Do a and b agree on every index below `limit`?
bool prefix_equal(const AttrSet& a, const AttrSet& b, std::size_t limit) {
    const auto wa = a.words();
    const auto wb = b.words();
    const std::size_t full = limit / simd::kWordBits;
    for (std::size_t w = 0; w < full; ++w)
        if (wa[w] != wb[w]) return false;
    if (const std::size_t rem = limit % simd::kWordBits; rem != 0) {
        const simd::Word mask = (simd::Word{1} << rem) - 1;
        if ((wa[full] ^ wb[full]) & mask) return false;
    }
    return true;
}

class CloseByOne {
public:
    CloseByOne(const FormalContext& ctx, std::size_t budget) : ctx_(ctx), budget_(budget) {}

    std::vector<FormalConcept> run() {
        ObjSet top_extent = ctx_.all_objects();
        AttrSet top_intent = ctx_.derive_intent(top_extent);
        descend(std::move(top_extent), std::move(top_intent), 0);
        return std::move(out_);
    }

private:
    void descend(ObjSet extent, AttrSet intent, std::size_t from) {
        if (out_.size() >= budget_)
            throw GuardError(GuardErrc::ConceptBudgetExceeded,
                             "concept budget of " + std::to_string(budget_) + " exceeded");
        out_.push_back({extent, intent});
        for (std::size_t j = from; j < ctx_.num_attributes(); ++j) {
            if (intent.contains(j)) continue;
            ObjSet child_extent = extent & ctx_.column(AttributeId{j});
            AttrSet child_intent = ctx_.derive_intent(child_extent);
            // Canonicity: the closure may not add any attribute below j.
            if (prefix_equal(intent, child_intent, j)) descend(std::move(child_extent), std::move(child_intent), j + 1);
        }
    }

    const FormalContext& ctx_;
    std::size_t budget_;
    std::vector<FormalConcept> out_;
};

void sort_lectic(std::vector<FormalConcept>& concepts) {
    std::sort(concepts.begin(), concepts.end(),
              [](const FormalConcept& a, const FormalConcept& b) { return lectic_less(a.intent, b.intent); });
}

}  // namespace

std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx, std::size_t budget) {
    auto concepts = CloseByOne(ctx, budget).run();
    sort_lectic(concepts);
    return concepts;
}

std::vector<FormalConcept> brute_force_concepts(const FormalContext& ctx) {
    constexpr std::size_t kMaxObjects = 20;
    if (ctx.num_objects() > kMaxObjects)
        throw GuardError(GuardErrc::ContextTooLarge,
                         "brute-force enumeration needs |G| <= 20, got " + std::to_string(ctx.num_objects()));
    const std::size_t n = ctx.num_objects();
    std::unordered_set<AttrSet, IndexSetHash> seen;
    std::vector<FormalConcept> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ObjSet subset = ctx.no_objects();
        for (std::size_t g = 0; g < n; ++g)
            if (mask >> g & 1U) subset.insert(g);
        AttrSet intent = ctx.derive_intent(subset);
        if (!seen.insert(intent).second) continue;
        ObjSet extent = ctx.derive_extent(intent);
        out.push_back({std::move(extent), std::move(intent)});
    }
    sort_lectic(out);
    return out;
}

std::optional<ConceptId> ConceptLattice::find(const AttrSet& intent) const {
    const auto it = by_intent_.find(intent);
    if (it == by_intent_.end()) return std::nullopt;
    return it->second;
}

ConceptLattice build_covers(std::vector<FormalConcept> concepts) {
    ConceptLattice lattice;
    const std::size_t n = concepts.size();
    lattice.concepts_ = std::move(concepts);
    lattice.upper_.assign(n, {});
    lattice.lower_.assign(n, {});
    if (n == 0) return lattice;

    const auto& cs = lattice.concepts_;
    std::vector<std::size_t> extent_size(n);
    for (std::size_t i = 0; i < n; ++i) {
        extent_size[i] = cs[i].extent.count();
        lattice.by_intent_.emplace(cs[i].intent, i);
    }

    // Candidates in increasing extent size: a superconcept is an upper cover
    // iff no cover accepted before it lies below it.
    std::vector<ConceptId> by_size(n);
    std::iota(by_size.begin(), by_size.end(), ConceptId{0});
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](ConceptId a, ConceptId b) { return extent_size[a] < extent_size[b]; });
    lattice.infimum_ = by_size.front();
    lattice.supremum_ = by_size.back();

    for (ConceptId c = 0; c < n; ++c) {
        auto& covers = lattice.upper_[c];
        for (ConceptId d : by_size) {
            if (extent_size[d] <= extent_size[c]) continue;
            if (!cs[c].extent.is_subset_of(cs[d].extent)) continue;
            const bool blocked = std::any_of(covers.begin(), covers.end(),
                                             [&](ConceptId e) { return cs[e].extent.is_subset_of(cs[d].extent); });
            if (!blocked) covers.push_back(d);
        }
        std::sort(covers.begin(), covers.end());
        for (ConceptId d : covers) lattice.lower_[d].push_back(c);
    }
    return lattice;
}

ConceptLattice build_lattice(const FormalContext& ctx, std::size_t budget) {
    return build_covers(enumerate_concepts(ctx, budget));
}

FormalConcept attribute_concept(const FormalContext& ctx, AttributeId m) {
    ObjSet extent = ctx.column(m);
    AttrSet intent = ctx.derive_intent(extent);
    return {std::move(extent), std::move(intent)};
}

ConceptId attribute_concept(const ConceptLattice& lattice, const FormalContext& ctx, AttributeId m) {
    const auto id = lattice.find(ctx.derive_intent(ctx.column(m)));
    assert(id.has_value());
    return *id;
}

}  // namespace fca
