#include "fca/relevance.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>

#include <boost/container/small_vector.hpp>

#include "fca/errors.hpp"
#include "minigen_word.hpp"

namespace fca {

namespace {

template <typename T>
using SmallVec = boost::container::small_vector<T, 32>;

// Pairwise extent containment among the attributes of one intent.
class IntentRelation {
public:
    IntentRelation(const FormalContext& ctx, const AttrSet& intent) : ctx_(ctx) {
        intent.for_each([&](std::size_t m) { attrs_.push_back(m); });
        const std::size_t k = attrs_.size();
        contained_.resize(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                contained_[i * k + j] = i == j || column(i).is_subset_of(column(j));
    }

    std::size_t size() const { return attrs_.size(); }
    std::size_t attribute(std::size_t i) const { return attrs_[i]; }
    const ObjSet& column(std::size_t i) const { return ctx_.column(AttributeId{attrs_[i]}); }
    // column(i) is a subset of column(j)
    bool within(std::size_t i, std::size_t j) const { return contained_[i * attrs_.size() + j]; }
    std::optional<std::size_t> position(std::size_t m) const {
        for (std::size_t i = 0; i < attrs_.size(); ++i)
            if (attrs_[i] == m) return i;
        return std::nullopt;
    }

    // Is attribute i absent from the closure of the intent minus the attributes
    // that `removed(i, j)` selects?
    template <typename Removed>
    bool survives_removal(std::size_t i, Removed removed) const {
        ObjSet rest_extent = ctx_.all_objects();
        for (std::size_t j = 0; j < attrs_.size(); ++j)
            if (!removed(i, j)) rest_extent &= column(j);
        // i is in the closure iff every object of the rest's extent has it
        return !rest_extent.is_subset_of(column(i));
    }

    bool is_base(std::size_t i, BaseRule rule) const {
        if (rule == BaseRule::WorkedExample)
            return survives_removal(i, [this](std::size_t m, std::size_t y) {
                return y == m || (within(y, m) && !within(m, y));
            });
        return survives_removal(i, [this](std::size_t m, std::size_t y) { return within(y, m); });
    }

    bool is_extremal(std::size_t i) const {
        return survives_removal(i, [this](std::size_t m, std::size_t y) { return within(y, m) && within(m, y); });
    }

private:
    const FormalContext& ctx_;
    SmallVec<std::size_t> attrs_;
    SmallVec<bool> contained_;
};

// At most 64 intent attributes: containment rows become bitmasks over intent
// positions. Extent tests run word by word and stop at the first witness.
class WordRelation {
public:
    static bool applies(const FormalContext& ctx, const AttrSet& intent) {
        return ctx.num_objects() >= 1 && intent.count() <= simd::kWordBits;
    }

    WordRelation(const FormalContext& ctx, const AttrSet& intent)
        : words_(ObjSet::word_count(ctx.num_objects())),
          last_word_(~simd::Word{0} >> (words_ * simd::kWordBits - ctx.num_objects())) {
        intent.for_each([&](std::size_t m) {
            attrs_[k_] = m;
            cols_[k_] = ctx.column(AttributeId{m}).words().data();
            ++k_;
        });
        if (words_ == 1) {
            for (std::size_t i = 0; i < k_; ++i) {
                const simd::Word ci = cols_[i][0];
                simd::Word below = 0;
                simd::Word above = 0;
                for (std::size_t j = 0; j < k_; ++j) {
                    below |= static_cast<simd::Word>((cols_[j][0] & ~ci) == 0) << j;
                    above |= static_cast<simd::Word>((ci & ~cols_[j][0]) == 0) << j;
                }
                sub_[i] = below;
                sup_[i] = above;
            }
            return;
        }
        for (std::size_t i = 0; i < k_; ++i) sub_[i] = sup_[i] = simd::Word{1} << i;
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i + 1; j < k_; ++j) {
                // one pass for both directions, done once the pair is incomparable
                simd::Word i_only = cols_[i][0] & ~cols_[j][0];
                simd::Word j_only = cols_[j][0] & ~cols_[i][0];
                for (std::size_t w = 1; w < words_ && (i_only == 0 || j_only == 0); ++w) {
                    i_only |= cols_[i][w] & ~cols_[j][w];
                    j_only |= cols_[j][w] & ~cols_[i][w];
                }
                const simd::Word bi = simd::Word{1} << i;
                const simd::Word bj = simd::Word{1} << j;
                if (j_only == 0) {
                    sub_[i] |= bj;
                    sup_[j] |= bi;
                }
                if (i_only == 0) {
                    sub_[j] |= bi;
                    sup_[i] |= bj;
                }
            }
    }

    std::size_t size() const { return k_; }
    std::size_t attribute(std::size_t i) const { return attrs_[i]; }
    bool column_equals(std::size_t i, const ObjSet& extent) const {
        return std::equal(cols_[i], cols_[i] + words_, extent.words().begin());
    }
    std::optional<std::size_t> position(std::size_t m) const {
        for (std::size_t i = 0; i < k_; ++i)
            if (attrs_[i] == m) return i;
        return std::nullopt;
    }

    bool is_base(std::size_t i, BaseRule rule) const {
        const simd::Word self = simd::Word{1} << i;
        return survives(i, rule == BaseRule::WorkedExample ? self | (sub_[i] & ~sup_[i]) : sub_[i]);
    }
    bool is_extremal(std::size_t i) const { return survives(i, sub_[i] & sup_[i]); }

private:
    // Some object has every attribute not in `removed` but lacks attribute i.
    bool survives(std::size_t i, simd::Word removed) const {
        const simd::Word kept = ~removed & (k_ == simd::kWordBits ? ~simd::Word{0} : (simd::Word{1} << k_) - 1);
        if (words_ == 1) {
            simd::Word rest = last_word_;
            for (simd::Word r = kept; r != 0; r &= r - 1) rest &= cols_[std::countr_zero(r)][0];
            return (rest & ~cols_[i][0]) != 0;
        }
        for (std::size_t w = 0; w < words_; ++w) {
            simd::Word rest = w + 1 == words_ ? last_word_ : ~simd::Word{0};
            for (simd::Word r = kept; r != 0 && rest != 0; r &= r - 1) rest &= cols_[std::countr_zero(r)][w];
            if ((rest & ~cols_[i][w]) != 0) return true;
        }
        return false;
    }

    std::size_t words_;
    simd::Word last_word_;
    std::size_t k_ = 0;
    // only the first k_ entries are meaningful
    std::array<std::size_t, simd::kWordBits> attrs_;
    std::array<const simd::Word*, simd::kWordBits> cols_;
    std::array<simd::Word, simd::kWordBits> sub_;  // bit j: column j inside column i
    std::array<simd::Word, simd::kWordBits> sup_;  // bit j: column i inside column j
};

template <typename Relation>
std::size_t require_member(const Relation& rel, const FormalContext& ctx, AttributeId m) {
    const auto pos = rel.position(m.index);
    if (!pos)
        throw DomainError(DomainErrc::AttributeNotInIntent,
                          "attribute '" + ctx.attribute_name(m) + "' is not in the concept intent");
    return *pos;
}

void check_stability_guard(const FormalConcept& c) {
    if (const std::size_t k = c.intent.count(); k > kMaxStabilityIntent)
        throw GuardError(GuardErrc::IntentTooLarge,
                         "stability needs |B| <= 30, got " + std::to_string(k));
}

// m' = A gives m'' = A' = B, so the closure size is just |B|.
bool is_equivalent(const FormalContext& ctx, const FormalConcept& c, std::size_t m) {
    return ctx.column(AttributeId{m}) == c.extent && c.intent.count() > 1;
}

// Single-word object sets: the running extent lives in a register. Every
// subset's extent contains A, so hitting A is a plain word compare.
std::uint64_t count_single_word(const simd::Word* const* cols, std::size_t k, std::size_t from, simd::Word extent,
                                simd::Word target) {
    std::uint64_t hits = 0;
    for (std::size_t j = from; j < k; ++j) {
        const simd::Word child = extent & cols[j][0];
        hits += child == target;
        hits += count_single_word(cols, k, j + 1, child, target);
    }
    return hits;
}

struct WideCounter {
    const simd::KernelTable& kernels;
    const simd::Word* const* cols;
    std::size_t k;
    std::size_t words;
    std::size_t target;
    simd::Word* stack;  // (k + 1) * words, level d holds the extent at depth d

    std::uint64_t count(std::size_t depth, std::size_t from) const {
        std::uint64_t hits = 0;
        const simd::Word* parent = stack + depth * words;
        simd::Word* child = stack + (depth + 1) * words;
        for (std::size_t j = from; j < k; ++j) {
            hits += kernels.and_popcount(child, parent, cols[j], words) == target;
            hits += count(depth + 1, j + 1);
        }
        return hits;
    }
};

}  // namespace

bool is_base_attribute(const FormalContext& ctx, const FormalConcept& c, AttributeId m, BaseRule rule) {
    if (WordRelation::applies(ctx, c.intent)) {
        WordRelation rel(ctx, c.intent);
        return rel.is_base(require_member(rel, ctx, m), rule);
    }
    const IntentRelation rel(ctx, c.intent);
    return rel.is_base(require_member(rel, ctx, m), rule);
}

bool is_extremal_attribute(const FormalContext& ctx, const FormalConcept& c, AttributeId m) {
    if (WordRelation::applies(ctx, c.intent)) {
        WordRelation rel(ctx, c.intent);
        return rel.is_extremal(require_member(rel, ctx, m));
    }
    const IntentRelation rel(ctx, c.intent);
    return rel.is_extremal(require_member(rel, ctx, m));
}

AttrSet equivalent_attributes(const FormalContext& ctx, const FormalConcept& c) {
    AttrSet out = ctx.no_attributes();
    c.intent.for_each([&](std::size_t m) {
        if (is_equivalent(ctx, c, m)) out.insert(m);
    });
    return out;
}

namespace {

template <typename Relation>
AlphaTerm alpha_with(const FormalContext& ctx, const FormalConcept& c, BaseRule rule, Relation&& rel) {
    AlphaTerm out{Rational(0), ctx.no_attributes(), ctx.no_attributes()};
    const std::size_t k = rel.size();
    if (k == 0) return out;

    std::size_t base_count = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (rel.is_base(i, rule)) {
            out.base_attributes.insert(rel.attribute(i));
            ++base_count;
        }
    }
    if (base_count > 0) {
        out.value = Rational(static_cast<std::int64_t>(base_count), static_cast<std::int64_t>(k));
        return out;
    }
    out.equivalent_attributes = equivalent_attributes(ctx, c);
    out.value = Rational(static_cast<std::int64_t>(out.equivalent_attributes.count()), static_cast<std::int64_t>(k));
    return out;
}

}  // namespace

AlphaTerm alpha_term(const FormalContext& ctx, const FormalConcept& c, BaseRule rule) {
    if (WordRelation::applies(ctx, c.intent)) return alpha_with(ctx, c, rule, WordRelation(ctx, c.intent));
    return alpha_with(ctx, c, rule, IntentRelation(ctx, c.intent));
}

Rational beta_term(const FormalConcept& c, const GeneratorSet& generators) {
    const auto k = static_cast<std::int64_t>(c.intent.count());
    const auto h = static_cast<std::int64_t>(generators.size());
    if (h > 1) return std::min(Rational(h, k), Rational(1));
    if (h == 1 && static_cast<std::int64_t>(generators.generators.front().count()) < k) return Rational(1, k);
    return Rational(0);
}

BecrBreakdown becr(const FormalContext& ctx, const ConceptLattice& lattice, ConceptId c, BaseRule rule) {
    const FormalConcept& fc = lattice.at(c);
    BecrBreakdown out;
    out.generators = minimal_generators(lattice, c);
    AlphaTerm alpha = alpha_term(ctx, fc, rule);
    out.alpha = alpha.value;
    out.base_attributes = std::move(alpha.base_attributes);
    out.equivalent_attributes = std::move(alpha.equivalent_attributes);
    out.beta = beta_term(fc, out.generators);
    out.becr = (out.alpha + out.beta) / Rational(2);
    return out;
}

BecrScore becr_value(const FormalContext& ctx, const ConceptLattice& lattice, ConceptId c, BaseRule rule) {
    const FormalConcept& fc = lattice.at(c);
    const auto from_breakdown = [&] {
        const Rational r = becr(ctx, lattice, c, rule).becr;
        return BecrScore{static_cast<std::uint64_t>(r.numerator()), static_cast<std::uint64_t>(r.denominator())};
    };
    if (fc.intent.word_count() != 1 || lattice.upper_covers(c).empty() || !WordRelation::applies(ctx, fc.intent))
        return from_breakdown();
    detail::MinigenScratch scratch;
    const detail::MaskList* generators = scratch.run(lattice, c);
    if (generators == nullptr) return from_breakdown();

    const WordRelation rel(ctx, fc.intent);
    const std::size_t k = rel.size();
    if (k == 0) return BecrScore{0, 1};
    std::size_t a = 0;
    for (std::size_t i = 0; i < k; ++i) a += rel.is_base(i, rule) ? 1 : 0;
    if (a == 0 && k > 1)
        for (std::size_t i = 0; i < k; ++i) a += rel.column_equals(i, fc.extent) ? 1 : 0;
    // alpha = a/k, beta = b/k
    const std::size_t h = generators->n;
    std::size_t b = 0;
    if (h > 1)
        b = std::min(h, k);
    else if (h == 1 && static_cast<std::size_t>(std::popcount(generators->items[0])) < k)
        b = 1;
    return BecrScore{a + b, 2 * k};
}

StabilityScore stability(const FormalContext& ctx, const FormalConcept& c) {
    check_stability_guard(c);
    SmallVec<const simd::Word*> cols;
    c.intent.for_each([&](std::size_t m) { cols.push_back(ctx.column(AttributeId{m}).words().data()); });
    const std::size_t k = cols.size();
    const std::size_t target = c.extent.count();
    const ObjSet everything = ctx.all_objects();

    StabilityScore score{everything.count() == target ? 1U : 0U, std::uint64_t{1} << k};
    const std::size_t words = everything.word_count();
    if (words == 1) {
        score.numerator += count_single_word(cols.data(), k, 0, everything.words()[0], c.extent.words()[0]);
    } else if (words > 1) {
        std::vector<simd::Word> stack((k + 1) * words);
        std::copy(everything.words().begin(), everything.words().end(), stack.begin());
        const WideCounter counter{simd::active_kernels(), cols.data(), k, words, target, stack.data()};
        score.numerator += counter.count(0, 0);
    } else {
        // No objects: every subset's extent is the empty set = A.
        score.numerator = score.denominator;
    }
    return score;
}

StabilityScore stability_oracle(const FormalContext& ctx, const FormalConcept& c) {
    check_stability_guard(c);
    const auto members = c.intent.indices();
    StabilityScore score{0, std::uint64_t{1} << members.size()};
    for (std::uint64_t mask = 0; mask < score.denominator; ++mask) {
        AttrSet subset = ctx.no_attributes();
        for (std::size_t i = 0; i < members.size(); ++i)
            if (mask >> i & 1U) subset.insert(members[i]);
        if (ctx.derive_extent(subset) == c.extent) ++score.numerator;
    }
    return score;
}

}  // namespace fca
