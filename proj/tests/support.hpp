#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <doctest.h>

#include "fca/context.hpp"
#include "fca/lattice.hpp"

namespace fca::test {

inline std::string fixture_path(const std::string& name) { return std::string(FCA_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing fixture " << name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline FormalContext toy() { return parse_cxt(read_fixture("toy.cxt")); }
inline FormalContext davis() { return parse_cxt(read_fixture("davis.cxt")); }

/// Independent random context for property tests (own RNG use, not the synth module).
inline FormalContext random_context(std::mt19937_64& rng, std::size_t n_obj, std::size_t n_attr, double p) {
    std::bernoulli_distribution cell(p);
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    std::vector<AttrSet> rows;
    for (std::size_t m = 0; m < n_attr; ++m) attributes.push_back("a" + std::to_string(m));
    for (std::size_t g = 0; g < n_obj; ++g) {
        AttrSet row(n_attr);
        for (std::size_t m = 0; m < n_attr; ++m)
            if (cell(rng)) row.insert(m);
        objects.push_back("o" + std::to_string(g));
        rows.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

inline FormalContext random_context(std::mt19937_64& rng, std::size_t max_obj, std::size_t max_attr) {
    std::uniform_int_distribution<std::size_t> n_obj(1, max_obj);
    std::uniform_int_distribution<std::size_t> n_attr(1, max_attr);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    const std::size_t g = n_obj(rng);
    const std::size_t m = n_attr(rng);
    return random_context(rng, g, m, density(rng));
}

/// The concept with the given intent, named by attributes.
inline ConceptId concept_by_intent(const ConceptLattice& lattice, const FormalContext& ctx,
                                   std::initializer_list<std::string_view> intent) {
    const auto id = lattice.find(attrs_by_name(ctx, intent));
    REQUIRE(id.has_value());
    return *id;
}

}  // namespace fca::test
