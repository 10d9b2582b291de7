#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fca/relevance.hpp"

namespace fca {

/// Which lattice concepts enter the reported concept set.
enum class ConceptScope {
    /// Concepts with a non-empty extent and a non-empty intent; drops the
    /// trivial top ({}-intent) and bottom ({}-extent) when they exist.
    Proper,
    All,
};

bool in_scope(const FormalConcept& c, ConceptScope scope);
std::vector<ConceptId> concepts_in_scope(const ConceptLattice& lattice, ConceptScope scope);

struct DatasetStats {
    std::size_t objects = 0;
    std::size_t attributes = 0;
    std::size_t incidences = 0;
    std::size_t concepts = 0;
    std::optional<Rational> density;  // empty for a context without cells
};

DatasetStats dataset_stats(const FormalContext& ctx, const ConceptLattice& lattice, ConceptScope scope);

/// "|G| |M| |I| |C| theta", theta with three decimals.
std::string format_stats(const DatasetStats& stats);

struct ScoreRow {
    ConceptId concept_id = 0;
    std::size_t extent_size = 0;
    std::size_t intent_size = 0;
    Rational alpha;
    Rational beta;
    Rational becr;
    StabilityScore stability;
    std::size_t n_mingen = 0;
    std::size_t n_base = 0;
    std::size_t n_equiv = 0;
    double t_becr_ns = 0.0;
    double t_stability_ns = 0.0;
};

struct ComparisonReport {
    std::vector<ScoreRow> rows;
    std::optional<double> pearson_xi;  // empty when either score vector is constant
    double mean_time_becr_ns = 0.0;
    double mean_time_stability_ns = 0.0;
    DatasetStats stats;
};

struct ComparisonOptions {
    BaseRule rule = BaseRule::WorkedExample;
    int timing_repeats = 5;
    bool measure_time = true;
    ConceptScope scope = ConceptScope::Proper;
    std::size_t concept_budget = kDefaultConceptBudget;
    unsigned threads = 1;  // scoring only; timing is always sequential
};

using Nanoseconds = std::chrono::duration<double, std::nano>;

/// Pearson correlation coefficient. Throws DomainError(LengthMismatch) for
/// unequal or too-short inputs and DomainError(ZeroVariance) when either
/// vector is constant.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Arithmetic mean; throws DomainError(EmptyInput) for no samples.
Nanoseconds mean_time(std::span<const Nanoseconds> times);

/// Both indices for one concept, untimed. A stability guard failure is
/// rethrown carrying the concept id. With `with_stability` false the
/// stability field stays at its default and no guard applies.
ScoreRow score_concept(const FormalContext& ctx, const ConceptLattice& lattice, ConceptId id, BaseRule rule,
                       bool with_stability = true);

/// Untimed scores for `ids`, in the given order, on up to `threads` threads.
std::vector<ScoreRow> score_concepts(const FormalContext& ctx, const ConceptLattice& lattice,
                                     std::span<const ConceptId> ids, BaseRule rule, unsigned threads = 1,
                                     bool with_stability = true);

/// Experiment I and II over the concepts in scope. Per-concept times are the
/// minimum over `timing_repeats` sequential runs after one warm-up run; BECR
/// time includes Minigen, lattice construction is excluded from both.
ComparisonReport run_comparison(const FormalContext& ctx, const ConceptLattice& lattice,
                                const ComparisonOptions& options = {});
ComparisonReport run_comparison(const FormalContext& ctx, const ComparisonOptions& options = {});

inline constexpr const char* kReportHeader =
    "concept_id,extent_size,intent_size,alpha,beta,becr,stability,n_mingen,n_base,n_equiv,t_becr_ns,t_stability_ns";

/// Header plus one row per concept, floats with six decimals, '\n' endings.
std::string emit_csv(const ComparisonReport& report);
/// "becr,stability" header plus one point per concept.
std::string emit_scatter(const ComparisonReport& report);

enum class RelevanceIndex { Becr, Stability, Both };

/// Score table without timing columns, sorted by descending index value
/// (BECR for Both), ties by concept id.
std::string emit_relevance_csv(std::vector<ScoreRow> rows, RelevanceIndex index);

std::string format_fixed(double value, int decimals = 6);

}  // namespace fca
