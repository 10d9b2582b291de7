#include <cmath>
#include <random>
#include <sstream>

#include <doctest.h>

#include "fca/bench.hpp"
#include "fca/errors.hpp"
#include "support.hpp"

using namespace fca;

namespace {

DomainErrc pearson_error(std::vector<double> xs, std::vector<double> ys) {
    try {
        (void)pearson(xs, ys);
    } catch (const DomainError& e) {
        return e.code();
    }
    FAIL("expected DomainError");
    return DomainErrc::EmptyInput;
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

ComparisonOptions untimed() {
    ComparisonOptions o;
    o.measure_time = false;
    return o;
}

}  // namespace

TEST_CASE("pearson on small vectors") {
    CHECK(pearson(std::vector{1.0, 2.0, 3.0}, std::vector{2.0, 4.0, 6.0}) == doctest::Approx(1.0));
    CHECK(pearson(std::vector{1.0, 2.0, 3.0}, std::vector{3.0, 2.0, 1.0}) == doctest::Approx(-1.0));
    // sum dx*dy = 1, sxx = 2, syy = 2/3 + 2/3 ... computed by hand below
    // xs = 1 2 3, ys = 1 3 2: means 2, 2; dx = -1 0 1, dy = -1 1 0; r = 1 / (sqrt2 * sqrt2) = 0.5
    CHECK(pearson(std::vector{1.0, 2.0, 3.0}, std::vector{1.0, 3.0, 2.0}) == doctest::Approx(0.5));
    CHECK(pearson(std::vector{0.0, 0.0, 1.0, 1.0}, std::vector{0.0, 1.0, 0.0, 1.0}) == doctest::Approx(0.0));

    CHECK(pearson_error({1, 1, 1}, {1, 2, 3}) == DomainErrc::ZeroVariance);
    CHECK(pearson_error({1, 2, 3}, {4, 4, 4}) == DomainErrc::ZeroVariance);
    CHECK(pearson_error({1, 2}, {1, 2, 3}) == DomainErrc::LengthMismatch);
    CHECK(pearson_error({1}, {1}) == DomainErrc::LengthMismatch);
    CHECK(pearson_error({}, {}) == DomainErrc::LengthMismatch);
}

TEST_CASE("pearson is symmetric and affine invariant") {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 40;
        std::vector<double> xs(n);
        std::vector<double> ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = noise(rng);
            ys[i] = 0.5 * xs[i] + noise(rng);
        }
        const double r = pearson(xs, ys);
        CHECK(r >= -1.0);
        CHECK(r <= 1.0);
        CHECK(pearson(ys, xs) == doctest::Approx(r).epsilon(1e-12));
        const double a = scale(rng);
        const double b = noise(rng);
        std::vector<double> moved(n);
        for (std::size_t i = 0; i < n; ++i) moved[i] = a * xs[i] + b;
        CHECK(pearson(moved, ys) == doctest::Approx(r).epsilon(1e-9));
        for (auto& x : moved) x = -x;
        CHECK(pearson(moved, ys) == doctest::Approx(-r).epsilon(1e-9));
    }
}

TEST_CASE("mean_time") {
    const std::vector<Nanoseconds> three{Nanoseconds(1.0), Nanoseconds(2.0), Nanoseconds(6.0)};
    CHECK(mean_time(three).count() == doctest::Approx(3.0));
    CHECK(mean_time(std::vector{Nanoseconds(5.5)}).count() == doctest::Approx(5.5));
    CHECK_THROWS_AS((void)mean_time(std::vector<Nanoseconds>{}), DomainError);
}

TEST_CASE("stats lines") {
    const auto toy = fca::test::toy();
    const auto toy_lattice = build_lattice(toy);
    CHECK(format_stats(dataset_stats(toy, toy_lattice, ConceptScope::All)) == "5 8 29 13 0.725");

    const auto davis = fca::test::davis();
    const auto lattice = build_lattice(davis);
    CHECK(format_stats(dataset_stats(davis, lattice, ConceptScope::Proper)) == "18 14 89 63 0.353");
    CHECK(format_stats(dataset_stats(davis, lattice, ConceptScope::All)) == "18 14 89 65 0.353");

    const FormalContext empty({}, {}, {});
    CHECK(format_stats(dataset_stats(empty, build_lattice(empty), ConceptScope::All)) == "0 0 0 1 undefined");
}

TEST_CASE("toy report") {
    const auto ctx = fca::test::toy();
    const auto lattice = build_lattice(ctx);
    const auto report = run_comparison(ctx, lattice, untimed());
    const std::string csv = emit_csv(report);
    CHECK(csv.rfind(std::string(kReportHeader) + "\n", 0) == 0);
    CHECK(line_count(csv) == report.rows.size() + 1);
    CHECK(report.rows.size() == report.stats.concepts);

    const auto cdg = fca::test::concept_by_intent(lattice, ctx, {"c", "d", "g"});
    const std::string expected_row =
        std::to_string(cdg) + ",3,3,0.333333,0.666667,0.500000,0.375000,2,1,0,0.000000,0.000000\n";
    CHECK(csv.find(expected_row) != std::string::npos);

    const std::string scatter = emit_scatter(report);
    CHECK(scatter.rfind("becr,stability\n", 0) == 0);
    CHECK(line_count(scatter) == report.rows.size() + 1);
    CHECK(scatter.find("\n0.500000,0.375000\n") != std::string::npos);
}

TEST_CASE("report without timing is reproducible") {
    const auto ctx = fca::test::davis();
    const std::string first = emit_csv(run_comparison(ctx, untimed()));
    const std::string second = emit_csv(run_comparison(ctx, untimed()));
    CHECK(first == second);
    auto threaded = untimed();
    threaded.threads = 4;
    CHECK(emit_csv(run_comparison(ctx, threaded)) == first);
}

TEST_CASE("empty context gives a header-only report") {
    const FormalContext empty({}, {}, {});
    const auto report = run_comparison(empty, untimed());
    CHECK(report.rows.empty());
    CHECK_FALSE(report.pearson_xi.has_value());
    CHECK(emit_csv(report) == std::string(kReportHeader) + "\n");
    CHECK(emit_scatter(report) == "becr,stability\n");
}

TEST_CASE("timed comparison") {
    const auto ctx = fca::test::toy();
    ComparisonOptions options;
    options.timing_repeats = 2;
    const auto report = run_comparison(ctx, options);
    REQUIRE_FALSE(report.rows.empty());
    std::vector<Nanoseconds> becr_times;
    std::vector<Nanoseconds> stab_times;
    for (const auto& r : report.rows) {
        CHECK(r.t_becr_ns > 0.0);
        CHECK(r.t_stability_ns > 0.0);
        becr_times.emplace_back(r.t_becr_ns);
        stab_times.emplace_back(r.t_stability_ns);
    }
    CHECK(report.mean_time_becr_ns == doctest::Approx(mean_time(becr_times).count()));
    CHECK(report.mean_time_stability_ns == doctest::Approx(mean_time(stab_times).count()));
}

TEST_CASE("relevance table ordering") {
    const auto ctx = fca::test::toy();
    const auto lattice = build_lattice(ctx);
    const auto ids = concepts_in_scope(lattice, ConceptScope::Proper);
    const auto rows = score_concepts(ctx, lattice, ids, BaseRule::WorkedExample);

    const std::string becr_csv = emit_relevance_csv(rows, RelevanceIndex::Becr);
    CHECK(becr_csv.rfind("concept_id,extent_size,intent_size,alpha,beta,becr,n_mingen,n_base,n_equiv\n", 0) == 0);
    const std::string stab_csv = emit_relevance_csv(rows, RelevanceIndex::Stability);
    CHECK(stab_csv.rfind("concept_id,extent_size,intent_size,stability\n", 0) == 0);
    const std::string both_csv = emit_relevance_csv(rows, RelevanceIndex::Both);
    CHECK(both_csv.rfind("concept_id,extent_size,intent_size,alpha,beta,becr,stability,n_mingen,n_base,n_equiv\n",
                         0) == 0);

    // Stability column is non-increasing.
    std::istringstream lines(stab_csv);
    std::string line;
    std::getline(lines, line);
    double previous = 2.0;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        const double value = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(value <= previous);
        previous = value;
        ++n;
    }
    CHECK(n == ids.size());
}

TEST_CASE("guard failure names the concept") {
    std::vector<std::string> attrs;
    for (int i = 0; i < 31; ++i) attrs.push_back("m" + std::to_string(i));
    const FormalContext ctx({"g"}, attrs, {AttrSet::full(31)});
    const auto lattice = build_lattice(ctx);
    try {
        (void)score_concept(ctx, lattice, 0, BaseRule::WorkedExample);
        FAIL("expected GuardError");
    } catch (const GuardError& e) {
        CHECK(e.code() == GuardErrc::IntentTooLarge);
        REQUIRE(e.concept_id().has_value());
        CHECK(*e.concept_id() == 0);
    }
    // BECR alone has no such limit.
    CHECK(score_concept(ctx, lattice, 0, BaseRule::WorkedExample, false).becr >= 0);
}
