#include "fca/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "fca/errors.hpp"

namespace fca {

namespace {

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

template <typename T>
inline void keep_alive(const T& value) {
#if defined(__GNUC__) || defined(__clang__)
    asm volatile("" : : "g"(&value) : "memory");
#else
    static volatile const void* sink;
    sink = &value;
#endif
}

template <typename Fn>
double min_time_ns(int repeats, Fn&& fn) {
    using Clock = std::chrono::steady_clock;
    keep_alive(fn());  // warm-up
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < repeats; ++r) {
        const auto start = Clock::now();
        const auto result = fn();
        const auto stop = Clock::now();
        keep_alive(result);
        best = std::min(best, Nanoseconds(stop - start).count());
    }
    return best;
}

}  // namespace

bool in_scope(const FormalConcept& c, ConceptScope scope) {
    return scope == ConceptScope::All || (c.extent.any() && c.intent.any());
}

std::vector<ConceptId> concepts_in_scope(const ConceptLattice& lattice, ConceptScope scope) {
    std::vector<ConceptId> ids;
    for (ConceptId id = 0; id < lattice.size(); ++id)
        if (in_scope(lattice.at(id), scope)) ids.push_back(id);
    return ids;
}

DatasetStats dataset_stats(const FormalContext& ctx, const ConceptLattice& lattice, ConceptScope scope) {
    DatasetStats stats;
    stats.objects = ctx.num_objects();
    stats.attributes = ctx.num_attributes();
    stats.incidences = ctx.incidence_count();
    stats.concepts = concepts_in_scope(lattice, scope).size();
    if (stats.objects * stats.attributes > 0) stats.density = ctx.density();
    return stats;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string format_stats(const DatasetStats& stats) {
    return std::to_string(stats.objects) + " " + std::to_string(stats.attributes) + " " +
           std::to_string(stats.incidences) + " " + std::to_string(stats.concepts) + " " +
           (stats.density ? format_fixed(to_double(*stats.density), 3) : std::string("undefined"));
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw DomainError(DomainErrc::LengthMismatch, "pearson: inputs differ in length");
    if (xs.size() < 2) throw DomainError(DomainErrc::LengthMismatch, "pearson: need at least two points");
    const auto constant = [](std::span<const double> v) {
        return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
    };
    if (constant(xs) || constant(ys)) throw DomainError(DomainErrc::ZeroVariance, "pearson: constant input");

    // Centered sums; algebraically identical to sum(xy) - n*mean(x)*mean(y)
    // over the product of the corresponding root terms.
    const double n = static_cast<double>(xs.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
}

Nanoseconds mean_time(std::span<const Nanoseconds> times) {
    if (times.empty()) throw DomainError(DomainErrc::EmptyInput, "mean_time: no samples");
    Nanoseconds total{0};
    for (auto t : times) total += t;
    return total / static_cast<double>(times.size());
}

ScoreRow score_concept(const FormalContext& ctx, const ConceptLattice& lattice, ConceptId id, BaseRule rule,
                       bool with_stability) {
    const FormalConcept& c = lattice.at(id);
    ScoreRow row;
    row.concept_id = id;
    row.extent_size = c.extent.count();
    row.intent_size = c.intent.count();
    const BecrBreakdown b = becr(ctx, lattice, id, rule);
    row.alpha = b.alpha;
    row.beta = b.beta;
    row.becr = b.becr;
    row.n_mingen = b.generator_count();
    row.n_base = b.base_attributes.count();
    row.n_equiv = b.equivalent_attributes.count();
    if (!with_stability) return row;
    try {
        row.stability = stability(ctx, c);
    } catch (const GuardError& e) {
        throw GuardError(e.code(), "concept " + std::to_string(id) + ": " + e.what(), id);
    }
    return row;
}

std::vector<ScoreRow> score_concepts(const FormalContext& ctx, const ConceptLattice& lattice,
                                     std::span<const ConceptId> ids, BaseRule rule, unsigned threads,
                                     bool with_stability) {
    std::vector<ScoreRow> rows(ids.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(ids.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) rows[i] = score_concept(ctx, lattice, ids[i], rule, with_stability);
        return rows;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < ids.size(); i += workers)
                        rows[i] = score_concept(ctx, lattice, ids[i], rule, with_stability);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

ComparisonReport run_comparison(const FormalContext& ctx, const ConceptLattice& lattice,
                                const ComparisonOptions& options) {
    ComparisonReport report;
    report.stats = dataset_stats(ctx, lattice, options.scope);
    const auto ids = concepts_in_scope(lattice, options.scope);
    report.rows = score_concepts(ctx, lattice, ids, options.rule, options.threads);

    if (options.measure_time && !report.rows.empty()) {
        const int repeats = std::max(1, options.timing_repeats);
        std::vector<Nanoseconds> becr_times;
        std::vector<Nanoseconds> stability_times;
        for (auto& row : report.rows) {
            const ConceptId id = row.concept_id;
            const FormalConcept& c = lattice.at(id);
            row.t_becr_ns = min_time_ns(repeats, [&] { return becr_value(ctx, lattice, id, options.rule); });
            row.t_stability_ns = min_time_ns(repeats, [&] { return stability(ctx, c); });
            becr_times.emplace_back(row.t_becr_ns);
            stability_times.emplace_back(row.t_stability_ns);
        }
        report.mean_time_becr_ns = mean_time(becr_times).count();
        report.mean_time_stability_ns = mean_time(stability_times).count();
    }

    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& row : report.rows) {
        xs.push_back(to_double(row.becr));
        ys.push_back(row.stability.as_double());
    }
    try {
        report.pearson_xi = pearson(xs, ys);
    } catch (const DomainError&) {
        report.pearson_xi.reset();
    }
    return report;
}

ComparisonReport run_comparison(const FormalContext& ctx, const ComparisonOptions& options) {
    return run_comparison(ctx, build_lattice(ctx, options.concept_budget), options);
}

std::string emit_csv(const ComparisonReport& report) {
    std::string out = std::string(kReportHeader) + "\n";
    for (const auto& r : report.rows) {
        out += std::to_string(r.concept_id) + "," + std::to_string(r.extent_size) + "," +
               std::to_string(r.intent_size) + "," + format_fixed(to_double(r.alpha)) + "," +
               format_fixed(to_double(r.beta)) + "," + format_fixed(to_double(r.becr)) + "," +
               format_fixed(r.stability.as_double()) + "," + std::to_string(r.n_mingen) + "," +
               std::to_string(r.n_base) + "," + std::to_string(r.n_equiv) + "," + format_fixed(r.t_becr_ns) + "," +
               format_fixed(r.t_stability_ns) + "\n";
    }
    return out;
}

std::string emit_scatter(const ComparisonReport& report) {
    std::string out = "becr,stability\n";
    for (const auto& r : report.rows)
        out += format_fixed(to_double(r.becr)) + "," + format_fixed(r.stability.as_double()) + "\n";
    return out;
}

std::string emit_relevance_csv(std::vector<ScoreRow> rows, RelevanceIndex index) {
    const auto key = [index](const ScoreRow& r) {
        return index == RelevanceIndex::Stability ? r.stability.value() : r.becr;
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const ScoreRow& a, const ScoreRow& b) {
        const Rational ka = key(a);
        const Rational kb = key(b);
        if (ka != kb) return ka > kb;
        return a.concept_id < b.concept_id;
    });

    std::string out = "concept_id,extent_size,intent_size";
    if (index != RelevanceIndex::Stability) out += ",alpha,beta,becr";
    if (index != RelevanceIndex::Becr) out += ",stability";
    if (index != RelevanceIndex::Stability) out += ",n_mingen,n_base,n_equiv";
    out += "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.concept_id) + "," + std::to_string(r.extent_size) + "," +
               std::to_string(r.intent_size);
        if (index != RelevanceIndex::Stability)
            out += "," + format_fixed(to_double(r.alpha)) + "," + format_fixed(to_double(r.beta)) + "," +
                   format_fixed(to_double(r.becr));
        if (index != RelevanceIndex::Becr) out += "," + format_fixed(r.stability.as_double());
        if (index != RelevanceIndex::Stability)
            out += "," + std::to_string(r.n_mingen) + "," + std::to_string(r.n_base) + "," + std::to_string(r.n_equiv);
        out += "\n";
    }
    return out;
}

}  // namespace fca
