#include <cmath>

#include <doctest.h>

#include "fca/errors.hpp"
#include "fca/lattice.hpp"
#include "fca/synth.hpp"

using namespace fca;

namespace {

CoinTossSpec spec(std::size_t g, std::size_t m, double p, std::uint64_t seed) {
    CoinTossSpec s;
    s.n_objects = g;
    s.n_attributes = m;
    s.density = p;
    s.seed = seed;
    return s;
}

double theta(const FormalContext& ctx) { return boost::rational_cast<double>(ctx.density()); }

}  // namespace

TEST_CASE("same seed, same context") {
    const auto a = coin_toss_context(spec(793, 10, 0.41, 42));
    const auto b = coin_toss_context(spec(793, 10, 0.41, 42));
    CHECK(a == b);
    CHECK(serialize_cxt(a) == serialize_cxt(b));
    CHECK(a.object_name(ObjectId{0}) == "g1");
    CHECK(a.attribute_name(AttributeId{9}) == "m10");

    const auto c = coin_toss_context(spec(793, 10, 0.41, 43));
    CHECK_FALSE(a == c);
}

TEST_CASE("a 793x10 draw lands near 0.41") {
    const auto ctx = coin_toss_context(spec(793, 10, 0.41, 42));
    CHECK(ctx.num_objects() == 793);
    CHECK(ctx.num_attributes() == 10);
    CHECK(std::abs(theta(ctx) - 0.41) <= 0.02);
}

TEST_CASE("density within three standard errors") {
    for (double p : {0.05, 0.3, 0.5, 0.9}) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const auto ctx = coin_toss_context(spec(400, 25, p, seed));
            const double cells = 400.0 * 25.0;
            const double sigma = std::sqrt(p * (1 - p) / cells);
            CHECK(std::abs(theta(ctx) - p) <= 3 * sigma);
        }
    }
}

TEST_CASE("degenerate densities") {
    const auto empty = coin_toss_context(spec(6, 4, 0.0, 9));
    CHECK(empty.incidence_count() == 0);
    // (G, {}) and ({}, M) are distinct concepts.
    CHECK(enumerate_concepts(empty).size() == 2);

    const auto full = coin_toss_context(spec(6, 4, 1.0, 9));
    CHECK(full.incidence_count() == 24);
    CHECK(enumerate_concepts(full).size() == 1);
}

TEST_CASE("per-object densities") {
    auto s = spec(3, 50, 0.5, 4);
    s.object_density = {0.0, 1.0, 0.0};
    const auto ctx = coin_toss_context(s);
    CHECK(ctx.row(ObjectId{0}).none());
    CHECK(ctx.row(ObjectId{1}).count() == 50);
    CHECK(ctx.row(ObjectId{2}).none());
}

TEST_CASE("invalid specs") {
    const auto code_of = [](const CoinTossSpec& s) {
        try {
            (void)coin_toss_context(s);
        } catch (const DomainError& e) {
            return e.code();
        }
        FAIL("expected DomainError");
        return DomainErrc::EmptyInput;
    };
    CHECK(code_of(spec(0, 3, 0.5, 1)) == DomainErrc::InvalidSpec);
    CHECK(code_of(spec(3, 0, 0.5, 1)) == DomainErrc::InvalidSpec);
    CHECK(code_of(spec(3, 3, 1.5, 1)) == DomainErrc::InvalidSpec);
    CHECK(code_of(spec(3, 3, -0.1, 1)) == DomainErrc::InvalidSpec);
    CHECK(code_of(spec(3, 3, std::nan(""), 1)) == DomainErrc::InvalidSpec);
    auto s = spec(3, 3, 0.5, 1);
    s.object_density = {0.5};
    CHECK(code_of(s) == DomainErrc::InvalidSpec);
}
