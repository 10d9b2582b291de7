#include "fca/synth.hpp"

#include <random>
#include <string>

#include "fca/errors.hpp"

namespace fca {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

void validate(const CoinTossSpec& spec) {
    if (spec.n_objects == 0 || spec.n_attributes == 0)
        throw DomainError(DomainErrc::InvalidSpec, "coin-toss context needs at least one object and one attribute");
    if (!is_probability(spec.density))
        throw DomainError(DomainErrc::InvalidSpec, "density must lie in [0, 1]");
    if (!spec.object_density.empty()) {
        if (spec.object_density.size() != spec.n_objects)
            throw DomainError(DomainErrc::InvalidSpec, "object_density must have one entry per object");
        for (double p : spec.object_density)
            if (!is_probability(p)) throw DomainError(DomainErrc::InvalidSpec, "object densities must lie in [0, 1]");
    }
}

}  // namespace

FormalContext coin_toss_context(const CoinTossSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    constexpr double kUnit = 1.0 / static_cast<double>(std::uint64_t{1} << 53);

    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    std::vector<AttrSet> rows;
    objects.reserve(spec.n_objects);
    rows.reserve(spec.n_objects);
    for (std::size_t m = 0; m < spec.n_attributes; ++m) attributes.push_back("m" + std::to_string(m + 1));
    for (std::size_t g = 0; g < spec.n_objects; ++g) {
        const double p = spec.object_density.empty() ? spec.density : spec.object_density[g];
        AttrSet row(spec.n_attributes);
        for (std::size_t m = 0; m < spec.n_attributes; ++m) {
            const double u = static_cast<double>(rng() >> 11) * kUnit;
            if (u < p) row.insert(m);
        }
        objects.push_back("g" + std::to_string(g + 1));
        rows.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

}  // namespace fca
