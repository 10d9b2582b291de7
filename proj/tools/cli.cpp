#include "fca/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "fca/bench.hpp"
#include "fca/errors.hpp"
#include "fca/synth.hpp"

namespace fca::cli {

namespace {

namespace fs = std::filesystem;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string path;
    std::string format = "auto";
    std::size_t budget = kDefaultConceptBudget;
    bool all_concepts = false;

    ConceptScope scope() const { return all_concepts ? ConceptScope::All : ConceptScope::Proper; }
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
    cmd.add_option("input", in.path, "Context file (.cxt, .csv, .dat)")->required();
    cmd.add_option("--format", in.format, "Input format")
        ->check(CLI::IsMember({"auto", "cxt", "csv", "fimi"}))
        ->capture_default_str();
    cmd.add_option("--budget", in.budget, "Maximum number of concepts")->capture_default_str();
    cmd.add_flag("--all-concepts", in.all_concepts,
                 "Report every lattice concept, including an empty-extent bottom or empty-intent top");
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

FormalContext load_context(const InputOptions& in) {
    std::string format = in.format;
    if (format == "auto") {
        const std::string ext = fs::path(in.path).extension().string();
        if (ext == ".cxt")
            format = "cxt";
        else if (ext == ".csv")
            format = "csv";
        else if (ext == ".dat" || ext == ".fimi")
            format = "fimi";
        else
            throw UsageError("cannot infer the format of '" + in.path + "'; pass --format");
    }
    const std::string text = read_file(in.path);
    if (format == "cxt") return parse_cxt(text);
    if (format == "csv") return parse_csv(text);
    return parse_fimi(text);
}

BaseRule parse_rule(const std::string& name) {
    return name == "literal" ? BaseRule::LiteralNonStrict : BaseRule::WorkedExample;
}

void add_rule_option(CLI::App& cmd, std::string& rule) {
    cmd.add_option("--rule", rule, "Base-attribute removal rule")
        ->check(CLI::IsMember({"worked-example", "literal"}))
        ->capture_default_str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot write '" + path + "'");
    file << text;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

int cmd_concepts(const InputOptions& in, const std::string& output, std::ostream& out) {
    const FormalContext ctx = load_context(in);
    const ConceptLattice lattice = build_lattice(ctx, in.budget);
    const auto ids = concepts_in_scope(lattice, in.scope());
    out << format_stats(dataset_stats(ctx, lattice, in.scope())) << "\n";

    if (!output.empty()) {
        std::string csv = "id,extent,intent\n";
        for (ConceptId id : ids) {
            const auto& c = lattice.at(id);
            csv += std::to_string(id) + "," + csv_field(format_objs(ctx, c.extent, ";")) + "," +
                   csv_field(format_attrs(ctx, c.intent, ";")) + "\n";
        }
        write_output(output, csv, out);
        return kExitOk;
    }
    for (ConceptId id : ids) {
        const auto& c = lattice.at(id);
        out << id << " {" << format_objs(ctx, c.extent) << "} | {" << format_attrs(ctx, c.intent) << "}\n";
    }
    return kExitOk;
}

int cmd_relevance(const InputOptions& in, const std::string& index_name, const std::string& rule,
                  unsigned threads, const std::string& output, std::ostream& out) {
    const FormalContext ctx = load_context(in);
    const ConceptLattice lattice = build_lattice(ctx, in.budget);
    const auto ids = concepts_in_scope(lattice, in.scope());
    const RelevanceIndex index = index_name == "becr"        ? RelevanceIndex::Becr
                                 : index_name == "stability" ? RelevanceIndex::Stability
                                                             : RelevanceIndex::Both;
    auto rows = score_concepts(ctx, lattice, ids, parse_rule(rule), threads, index != RelevanceIndex::Becr);
    write_output(output, emit_relevance_csv(std::move(rows), index), out);
    return kExitOk;
}

struct BenchOptions {
    std::string rule = "worked-example";
    int repeats = 5;
    std::string report_path;
    std::string scatter_path;
    bool no_timing = false;
    unsigned threads = 1;
};

int cmd_bench(const InputOptions& in, const BenchOptions& opts, std::ostream& out) {
    if (opts.repeats < 1) throw UsageError("--repeats must be at least 1");
    const FormalContext ctx = load_context(in);
    const ConceptLattice lattice = build_lattice(ctx, in.budget);
    ComparisonOptions options;
    options.rule = parse_rule(opts.rule);
    options.timing_repeats = opts.repeats;
    options.measure_time = !opts.no_timing;
    options.scope = in.scope();
    options.concept_budget = in.budget;
    options.threads = opts.threads;
    const ComparisonReport report = run_comparison(ctx, lattice, options);

    const std::string stem = fs::path(in.path).stem().string();
    write_output(opts.report_path.empty() ? stem + ".report.csv" : opts.report_path, emit_csv(report), out);
    write_output(opts.scatter_path.empty() ? stem + ".scatter.csv" : opts.scatter_path, emit_scatter(report), out);

    out << format_stats(report.stats) << "\n";
    out << "xi=" << (report.pearson_xi ? format_fixed(*report.pearson_xi) : std::string("undefined"))
        << " tau_becr=" << format_fixed(report.mean_time_becr_ns, 1)
        << " tau_stability=" << format_fixed(report.mean_time_stability_ns, 1) << "\n";
    return kExitOk;
}

struct GenerateOptions {
    std::size_t objects = 0;
    std::size_t attributes = 0;
    double density = 0.5;
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_generate(const GenerateOptions& opts, std::ostream& out) {
    if (!(opts.density >= 0.0 && opts.density <= 1.0)) throw UsageError("--density must lie in [0, 1]");
    if (opts.objects == 0 || opts.attributes == 0) throw UsageError("--objects and --attributes must be positive");
    CoinTossSpec spec;
    spec.n_objects = opts.objects;
    spec.n_attributes = opts.attributes;
    spec.density = opts.density;
    spec.seed = opts.seed;
    write_output(opts.output, serialize_cxt(coin_toss_context(spec)), out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Formal concept lattices scored by BECR and extensional stability", "fca"};
    app.require_subcommand(1);

    InputOptions concepts_in;
    std::string concepts_output;
    auto* concepts = app.add_subcommand("concepts", "Enumerate the concept lattice and print dataset statistics");
    add_input_options(*concepts, concepts_in);
    concepts->add_option("-o,--output", concepts_output, "Write the concept list as CSV to this path");

    InputOptions relevance_in;
    std::string relevance_index = "both";
    std::string relevance_rule = "worked-example";
    unsigned relevance_threads = 1;
    std::string relevance_output;
    auto* relevance = app.add_subcommand("relevance", "Score every concept with BECR and/or stability");
    add_input_options(*relevance, relevance_in);
    relevance->add_option("--index", relevance_index, "Index to compute and sort by")
        ->check(CLI::IsMember({"becr", "stability", "both"}))
        ->capture_default_str();
    add_rule_option(*relevance, relevance_rule);
    relevance->add_option("--threads", relevance_threads, "Scoring threads")->check(CLI::PositiveNumber);
    relevance->add_option("-o,--output", relevance_output, "Output CSV path (default stdout)");

    InputOptions bench_in;
    BenchOptions bench_opts;
    auto* bench = app.add_subcommand("bench", "Correlation and timing comparison of BECR and stability");
    add_input_options(*bench, bench_in);
    add_rule_option(*bench, bench_opts.rule);
    bench->add_option("--repeats", bench_opts.repeats, "Timed runs per concept and index")->capture_default_str();
    bench->add_option("--report", bench_opts.report_path, "Report CSV path (default <input-stem>.report.csv)");
    bench->add_option("--scatter", bench_opts.scatter_path, "Scatter CSV path (default <input-stem>.scatter.csv)");
    bench->add_flag("--no-timing", bench_opts.no_timing, "Skip timing; time columns are written as zero");
    bench->add_option("--threads", bench_opts.threads, "Scoring threads (timing always runs on one)")
        ->check(CLI::PositiveNumber);

    GenerateOptions gen_opts;
    auto* generate = app.add_subcommand("generate", "Write a seeded coin-toss random context as .cxt");
    generate->add_option("--objects", gen_opts.objects, "Number of objects")->required();
    generate->add_option("--attributes", gen_opts.attributes, "Number of attributes")->required();
    generate->add_option("--density", gen_opts.density, "Probability of each incidence")->capture_default_str();
    generate->add_option("--seed", gen_opts.seed, "PRNG seed")->capture_default_str();
    generate->add_option("-o,--output", gen_opts.output, "Output path (default stdout)");

    std::vector<const char*> argv{"fca"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*concepts) return cmd_concepts(concepts_in, concepts_output, out);
        if (*relevance)
            return cmd_relevance(relevance_in, relevance_index, relevance_rule, relevance_threads, relevance_output,
                                 out);
        if (*bench) return cmd_bench(bench_in, bench_opts, out);
        if (*generate) return cmd_generate(gen_opts, out);
    } catch (const UsageError& e) {
        err << "fca: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "fca: " << e.what() << "\n";
        return kExitParse;
    } catch (const ParseError& e) {
        err << "fca: parse error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return kExitParse;
    } catch (const GuardError& e) {
        err << "fca: " << to_string(e.code()) << ": " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "fca: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace fca::cli
