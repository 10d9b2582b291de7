#include <random>

#include <doctest.h>

#include "fca/errors.hpp"
#include "support.hpp"

using namespace fca;
using fca::test::concept_by_intent;

namespace {

FormalConcept make(const FormalContext& ctx, std::initializer_list<std::string_view> extent,
                   std::initializer_list<std::string_view> intent) {
    return {objs_by_name(ctx, extent), attrs_by_name(ctx, intent)};
}

bool contains(const std::vector<FormalConcept>& cs, const FormalConcept& c) {
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

// Reflexive-transitive closure of the upper-cover relation.
std::vector<std::vector<bool>> reachability(const ConceptLattice& lattice) {
    const std::size_t n = lattice.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<ConceptId> stack{c};
        while (!stack.empty()) {
            const ConceptId x = stack.back();
            stack.pop_back();
            if (reach[c][x]) continue;
            reach[c][x] = true;
            for (ConceptId u : lattice.upper_covers(x)) stack.push_back(u);
        }
    }
    return reach;
}

}  // namespace

TEST_CASE("toy lattice") {
    const auto ctx = fca::test::toy();
    const auto concepts = enumerate_concepts(ctx);
    CHECK(contains(concepts, make(ctx, {"1", "3", "5"}, {"b", "c", "g", "h", "i"})));
    CHECK(contains(concepts, make(ctx, {"1", "2", "3"}, {"c", "d", "g"})));
    CHECK(contains(concepts, make(ctx, {"1", "2", "3", "5"}, {"c", "g"})));
    CHECK(concepts == brute_force_concepts(ctx));
    CHECK(concepts.size() == 13);  // intersection-closure count computed offline
    CHECK(concepts.front().intent.none());
    CHECK(concepts.back().intent == ctx.all_attributes());
}

TEST_CASE("degenerate lattices") {
    const auto one = parse_cxt("B\n\n1\n1\n\ng\nm\nX\n");
    const auto cs = enumerate_concepts(one);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].extent == one.all_objects());
    CHECK(cs[0].intent == one.all_attributes());
    const auto lattice = build_covers(cs);
    CHECK(lattice.supremum() == lattice.infimum());
    CHECK(lattice.upper_covers(0).empty());

    const auto empty = parse_cxt("B\n\n0\n0\n\n");
    const auto bf = brute_force_concepts(empty);
    REQUIRE(bf.size() == 1);
    CHECK(bf[0].extent.none());
    CHECK(bf[0].intent.none());
    CHECK(enumerate_concepts(empty) == bf);

    const auto identity = parse_cxt("B\n\n2\n2\n\ng\nh\nm\nn\nX.\n.X\n");
    CHECK(brute_force_concepts(identity).size() == 4);
    CHECK(enumerate_concepts(identity).size() == 4);
}

TEST_CASE("Davis lattice size") {
    const auto ctx = fca::test::davis();
    const auto concepts = enumerate_concepts(ctx);
    CHECK(concepts == brute_force_concepts(ctx));
    // 63 concepts with non-empty extent and intent, plus the empty-intent top and empty-extent bottom.
    CHECK(concepts.size() == 65);
}

TEST_CASE("budget and oracle guards") {
    const auto ctx = fca::test::davis();
    try {
        (void)enumerate_concepts(ctx, 10);
        FAIL("expected ConceptBudgetExceeded");
    } catch (const GuardError& e) {
        CHECK(e.code() == GuardErrc::ConceptBudgetExceeded);
    }
    CHECK(enumerate_concepts(ctx, 65).size() == 65);

    std::mt19937_64 rng(1);
    const auto big = fca::test::random_context(rng, 21, 3, 0.5);
    try {
        (void)brute_force_concepts(big);
        FAIL("expected ContextTooLarge");
    } catch (const GuardError& e) {
        CHECK(e.code() == GuardErrc::ContextTooLarge);
    }
}

TEST_CASE("cover relation on the toy lattice") {
    const auto ctx = fca::test::toy();
    const auto lattice = build_lattice(ctx);
    const ConceptId cdg = concept_by_intent(lattice, ctx, {"c", "d", "g"});
    const std::vector<ConceptId> expected_up{concept_by_intent(lattice, ctx, {"c", "g"}),
                                             concept_by_intent(lattice, ctx, {"d"})};
    auto up = lattice.upper_covers(cdg);
    std::sort(up.begin(), up.end());
    auto want = expected_up;
    std::sort(want.begin(), want.end());
    CHECK(up == want);
    CHECK(lattice.at(lattice.supremum()).extent == ctx.all_objects());
    CHECK(lattice.upper_covers(lattice.supremum()).empty());
    CHECK(lattice.lower_covers(lattice.infimum()).empty());
}

TEST_CASE("attribute concepts") {
    const auto ctx = fca::test::toy();
    const auto lattice = build_lattice(ctx);
    auto mu = [&](std::string_view name) { return attribute_concept(ctx, *ctx.find_attribute(name)); };
    CHECK(mu("c") == make(ctx, {"1", "2", "3", "5"}, {"c", "g"}));
    CHECK(mu("d") == make(ctx, {"1", "2", "3", "4"}, {"d"}));
    const auto e = mu("e");
    CHECK(e.extent == objs_by_name(ctx, {"1", "5"}));
    CHECK(e.intent == ctx.derive_intent(objs_by_name(ctx, {"1", "5"})));
    CHECK(lattice.at(attribute_concept(lattice, ctx, *ctx.find_attribute("c"))) == mu("c"));
}

TEST_CASE("enumeration matches the brute-force oracle on random contexts") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const auto ctx = fca::test::random_context(rng, 12, 10);
        const auto concepts = enumerate_concepts(ctx);
        REQUIRE(concepts == brute_force_concepts(ctx));
        for (const auto& c : concepts) {
            CHECK(ctx.derive_intent(c.extent) == c.intent);
            CHECK(ctx.derive_extent(c.intent) == c.extent);
        }
        for (std::size_t i = 1; i < concepts.size(); ++i) CHECK(lectic_less(concepts[i - 1].intent, concepts[i].intent));

        const auto lattice = build_covers(concepts);
        const auto reach = reachability(lattice);
        for (ConceptId c = 0; c < lattice.size(); ++c) {
            for (ConceptId d = 0; d < lattice.size(); ++d) CHECK(reach[c][d] == lattice.leq(c, d));
            // Transitive reduction: no cover edge skips over an intermediate concept.
            for (ConceptId u : lattice.upper_covers(c)) {
                CHECK(u != c);
                for (ConceptId e = 0; e < lattice.size(); ++e)
                    if (e != c && e != u) CHECK_FALSE((lattice.leq(c, e) && lattice.leq(e, u)));
                const auto& low = lattice.lower_covers(u);
                CHECK(std::find(low.begin(), low.end(), c) != low.end());
            }
        }
        CHECK(lattice.at(lattice.supremum()).extent == ctx.all_objects());
        CHECK(lattice.at(lattice.infimum()).intent == ctx.all_attributes());
    }
}
