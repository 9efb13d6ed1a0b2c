#include "mye/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mye/algorithms.hpp"
#include "mye/coverage.hpp"
#include "mye/eval.hpp"
#include "mye/io.hpp"
#include "mye/synthetic.hpp"

namespace mye::cli {

namespace {

/// Bad flags, bad combinations, unreadable inputs: exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string papers;
    std::string citations;
    std::string authorships;
    std::string out;
    std::string report;
    std::string summary;
    std::string network = "citation";
    std::string algo = "as";
    std::vector<int> k{8, 5, 4, 3, 2};
    std::uint64_t seed = 0;
    double gamma = 1.0;
    std::vector<double> eta{0.125, 0.2, 0.25, 1.0 / 3.0, 0.5};
    unsigned jobs = 1;
    Year year_min = YearRange{}.min;
    Year year_max = YearRange{}.max;
    bool strip_missing = false;
    bool keep_missing = false;
    std::string fixture;
    SyntheticParams synth;
    double missing_fraction = 0;

    /// `# key=value` lines that let a run be repeated from its output alone.
    /// The output path and job count do not affect results and are left out.
    std::string header() const {
        std::string h = fmt::format("# command={}\n", command);
        auto add = [&](std::string_view key, const auto& value) { h += fmt::format("# {}={}\n", key, value); };
        if (command == "synth") {
            if (!fixture.empty()) {
                add("fixture", fixture);
            } else {
                add("papers", synth.papers);
                add("authors", synth.authors);
                add("citations_per_paper", synth.citations_per_paper);
                add("authors_per_paper", synth.authors_per_paper);
                add("missing_fraction", synth.missing_fraction);
                add("seed", seed);
            }
            add("year_min", year_min);
            add("year_max", year_max);
            return h;
        }
        add("papers", papers);
        add("citations", citations);
        add("authorships", authorships);
        add("year_min", year_min);
        add("year_max", year_max);
        if (command == "estimate" || command == "evaluate") {
            add("network", network);
            add("algo", algo);
            add("gamma", gamma);
        }
        if (command == "evaluate") {
            add("k", fmt::format("{}", fmt::join(k, ",")));
            add("seed", seed);
        }
        if (command == "coverage-model") add("eta", fmt::format("{}", fmt::join(eta, ",")));
        if (command != "estimate") add("strip_missing", resolved_strip());
        return h;
    }

    bool resolved_strip() const {
        if (keep_missing) return false;
        if (strip_missing) return true;
        return command == "evaluate";
    }

    YearRange window() const { return {year_min, year_max}; }
};

void require_readable(const std::string& path) {
    if (path.empty()) return;
    std::ifstream probe(path);
    if (!probe) throw UsageError(fmt::format("cannot open '{}'", path));
}

AcademicGraph load_inputs(const RunConfig& cfg, std::ostream& err) {
    require_readable(cfg.papers);
    require_readable(cfg.citations);
    require_readable(cfg.authorships);
    LoadReport report;
    AcademicGraph g = load_graph(cfg.papers, cfg.citations, cfg.authorships, LoadConfig{cfg.window()}, &report);
    fmt::print(err, "load: {}\n", report.summary());
    return g;
}

AcademicGraph cleaned(const RunConfig& cfg, const AcademicGraph& g, std::ostream& err) {
    PreprocessReport report;
    AcademicGraph out = preprocess(g, cfg.resolved_strip(), &report);
    fmt::print(err, "preprocess: {}\n", report.summary());
    return out;
}

/// Runs `write` against --out when given, otherwise against `out`.
template <typename Write>
void emit(const RunConfig& cfg, std::ostream& out, Write&& write) {
    if (cfg.out.empty()) {
        write(out);
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", cfg.out));
    write(file);
}

std::string bound_text(const Bound& b, std::string_view open) {
    return b.is_open() ? std::string(open) : fmt::format("{}", b.value());
}

Algorithm selected_algorithm(const RunConfig& cfg) {
    const auto network = parse_network(cfg.network);
    if (!network) throw UsageError(fmt::format("unknown network '{}'", cfg.network));
    try {
        return resolve_algorithm(*network, cfg.algo);
    } catch (const UnknownAlgorithm& e) {
        throw UsageError(e.what());
    }
}

int cmd_preprocess(const RunConfig& cfg, std::ostream& err) {
    const AcademicGraph g = load_inputs(cfg, err);
    PreprocessReport report;
    const AcademicGraph clean = preprocess(g, cfg.resolved_strip(), &report);
    fmt::print(err, "preprocess: {}\n", report.summary());
    write_graph(clean, cfg.out);
    if (!cfg.report.empty()) {
        std::ofstream file(cfg.report);
        if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", cfg.report));
        report.write_key_values(file);
    }
    return 0;
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Algorithm algo = selected_algorithm(cfg);
    const AcademicGraph g = cleaned(cfg, load_inputs(cfg, err), err);
    const MaskedGraph view(g);
    const Estimation e = run(view, algo, authorship::Gamma(cfg.gamma));
    fmt::print(err, "estimate: missing={} covered={} rounds={} swapped_windows={} clamped={}{}\n", e.targets.size(),
               e.covered(), e.diagnostics.rounds, e.diagnostics.swapped_windows, e.diagnostics.clamped_estimates,
               e.diagnostics.hit_round_cap ? " round_cap_hit" : "");
    emit(cfg, out, [&](std::ostream& os) {
        os << cfg.header();
        os << "paper_id\testimate\twin_lower\twin_upper\twin_type\n";
        for (PaperIndex p : e.targets) {
            const YearWindow& w = e.window[p];
            fmt::print(os, "{}\t{}\t{}\t{}\t{}\n", g.paper_id(p),
                       e.year[p] ? fmt::format("{}", *e.year[p]) : std::string("UNCOVERED"),
                       bound_text(w.lower, "-inf"), bound_text(w.upper, "+inf"), to_string(w.type()));
        }
    });
    return 0;
}

std::vector<Algorithm> evaluated_algorithms(const RunConfig& cfg) {
    if (cfg.algo != "all") return {selected_algorithm(cfg)};
    const auto network = parse_network(cfg.network);
    if (!network) throw UsageError(fmt::format("unknown network '{}'", cfg.network));
    std::vector<Algorithm> algos;
    for (Algorithm a : kAllAlgorithms) {
        if (network_of(a) == *network) algos.push_back(a);
    }
    return algos;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto algos = evaluated_algorithms(cfg);
    const AcademicGraph g = cleaned(cfg, load_inputs(cfg, err), err);
    std::vector<EvalReport> reports;
    for (Algorithm a : algos) {
        for (int k : cfg.k) {
            try {
                reports.push_back(evaluate(g, a, k, cfg.seed, {authorship::Gamma(cfg.gamma), cfg.jobs}));
            } catch (const EvalError& e) {
                throw UsageError(e.what());
            }
            const EvalReport& r = reports.back();
            fmt::print(err, "evaluate: algo={} K={} coverage={:.4f} folds_without_coverage={}\n", algo_id(a), k,
                       r.coverage, r.folds_without_coverage);
        }
    }
    emit(cfg, out, [&](std::ostream& os) {
        os << cfg.header();
        write_csv_header(os);
        for (const auto& r : reports) write_csv_rows(os, r);
    });
    if (!cfg.summary.empty()) {
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& r : reports) runs.push_back(to_json(r));
        std::ofstream file(cfg.summary);
        if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", cfg.summary));
        file << nlohmann::json{{"runs", runs}}.dump(2) << '\n';
    }
    return 0;
}

int cmd_coverage_model(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    for (double eta : cfg.eta) {
        if (!(eta > 0 && eta < 1)) throw UsageError(fmt::format("eta {} is outside (0, 1)", eta));
    }
    const AcademicGraph g0 = load_inputs(cfg, err);
    const AcademicGraph g = cleaned(cfg, g0, err);
    if (g.num_papers() == 0) throw std::runtime_error("graph has no papers");

    std::vector<std::pair<std::string_view, ComponentPartition>> projections;
    const bool all = cfg.network.empty();
    if (all || cfg.network == "citation") projections.emplace_back("citation", project_citation(g));
    if (all || cfg.network == "authorship") projections.emplace_back("authorship", project_coauthor(g));
    if (all || cfg.network == "hetero") projections.emplace_back("hetero", project_combined(g));
    if (projections.empty()) throw UsageError(fmt::format("unknown network '{}'", cfg.network));

    emit(cfg, out, [&](std::ostream& os) {
        os << cfg.header();
        os << "network,eta,components,papers,expected_coverage\n";
        for (const auto& [name, parts] : projections) {
            for (double eta : cfg.eta) {
                fmt::print(os, "{},{:.6f},{},{},{:.9f}\n", name, eta, parts.count(), parts.total,
                           expected_coverage(parts, eta));
            }
        }
    });
    return 0;
}

int cmd_synth(const RunConfig& cfg, std::ostream& err) {
    AcademicGraph g;
    if (!cfg.fixture.empty()) {
        if (cfg.fixture == "citation-example") {
            g = citation_example();
        } else if (cfg.fixture == "authorship-example") {
            g = authorship_example();
        } else if (cfg.fixture.starts_with("chain-")) {
            int which = 0;
            try {
                which = std::stoi(cfg.fixture.substr(6));
                g = chain_topology(which);
            } catch (const std::exception&) {
                throw UsageError(fmt::format("unknown fixture '{}'", cfg.fixture));
            }
        } else {
            throw UsageError(fmt::format("unknown fixture '{}'", cfg.fixture));
        }
    } else {
        SyntheticParams p = cfg.synth;
        p.years = cfg.window();
        try {
            g = generate_synthetic(p, cfg.seed);
        } catch (const SyntheticError& e) {
            throw UsageError(e.what());
        }
    }
    write_graph(g, cfg.out);
    fmt::print(err, "synth: papers={} known={} citations={} authorships={} authors={}\n", g.num_papers(),
               g.num_known(), g.num_citations(), g.num_authorships(), g.num_authors());
    return 0;
}

void add_inputs(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--papers", cfg.papers, "papers TSV (paper_id, year)")->required();
    sub->add_option("--citations", cfg.citations, "citations TSV (cited_id, citing_id)");
    sub->add_option("--authorships", cfg.authorships, "authorships TSV (author_id, paper_id)");
    sub->add_option("--year-min", cfg.year_min, "earliest accepted year")->capture_default_str();
    sub->add_option("--year-max", cfg.year_max, "latest accepted year")->capture_default_str();
}

void add_strip_flags(CLI::App* sub, RunConfig& cfg) {
    auto* strip = sub->add_flag("--strip-missing", cfg.strip_missing, "drop papers without a year and their edges");
    auto* keep = sub->add_flag("--keep-missing", cfg.keep_missing, "keep papers without a year");
    strip->excludes(keep);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Estimate missing publication years from citation and authorship links"};
    app.require_subcommand(1);

    auto* pre = app.add_subcommand("preprocess", "drop citations that run backwards in time");
    add_inputs(pre, cfg);
    add_strip_flags(pre, cfg);
    pre->add_option("--out", cfg.out, "output directory")->required();
    pre->add_option("--report", cfg.report, "key=value report file");

    auto* est = app.add_subcommand("estimate", "estimate years of papers that have none");
    add_inputs(est, cfg);
    est->add_option("--network", cfg.network, "citation | authorship | hetero")->capture_default_str();
    est->add_option("--algo", cfg.algo, "ss|as|aa, ba|iter|adviter, ssba|asiter|adviter")->capture_default_str();
    est->add_option("--gamma", cfg.gamma, "coauthor weighting exponent")->capture_default_str();
    est->add_option("--out", cfg.out, "output TSV (default stdout)");

    auto* ev = app.add_subcommand("evaluate", "K-fold masking evaluation");
    add_inputs(ev, cfg);
    add_strip_flags(ev, cfg);
    ev->add_option("--network", cfg.network)->capture_default_str();
    ev->add_option("--algo", cfg.algo, "algorithm id, or 'all' for every algorithm of the network")
        ->capture_default_str();
    ev->add_option("--gamma", cfg.gamma)->capture_default_str();
    ev->add_option("--k", cfg.k, "fold counts, comma separated")->delimiter(',')->capture_default_str();
    ev->add_option("--seed", cfg.seed)->capture_default_str();
    ev->add_option("--jobs", cfg.jobs, "worker threads across folds")->check(CLI::Range(1u, 256u));
    ev->add_option("--out", cfg.out, "output CSV (default stdout)");
    ev->add_option("--summary", cfg.summary, "JSON summary file");

    auto* cov = app.add_subcommand("coverage-model", "expected coverage from connected components");
    add_inputs(cov, cfg);
    add_strip_flags(cov, cfg);
    cov->add_option("--network", cfg.network, "projection; all three when omitted");
    cov->add_option("--eta", cfg.eta, "missing ratios, comma separated")->delimiter(',');
    cov->add_option("--out", cfg.out, "output CSV (default stdout)");

    auto* syn = app.add_subcommand("synth", "write a synthetic corpus or a named fixture");
    syn->add_option("--fixture", cfg.fixture, "citation-example | authorship-example | chain-1 .. chain-7");
    syn->add_option("--n-papers", cfg.synth.papers)->capture_default_str();
    syn->add_option("--n-authors", cfg.synth.authors)->capture_default_str();
    syn->add_option("--citations-per-paper", cfg.synth.citations_per_paper)->capture_default_str();
    syn->add_option("--authors-per-paper", cfg.synth.authors_per_paper)->capture_default_str();
    syn->add_option("--missing-fraction", cfg.synth.missing_fraction)->capture_default_str();
    syn->add_option("--seed", cfg.seed)->capture_default_str();
    syn->add_option("--year-min", cfg.year_min);
    syn->add_option("--year-max", cfg.year_max);
    syn->add_option("--out", cfg.out, "output directory")->required();

    cfg.year_min = 1980;
    cfg.year_max = 2010;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o;
        std::ostringstream e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command != "synth") {
        // Only synth defaults to the narrower generator range.
        if (app.get_subcommands().front()->count("--year-min") == 0) cfg.year_min = YearRange{}.min;
        if (app.get_subcommands().front()->count("--year-max") == 0) cfg.year_max = YearRange{}.max;
    }
    if (cfg.command == "coverage-model" && cov->count("--network") == 0) cfg.network.clear();

    err << cfg.header() << (cfg.out.empty() ? "" : fmt::format("# out={}\n", cfg.out));
    if (cfg.command == "evaluate") fmt::print(err, "# jobs={}\n", cfg.jobs);

    try {
        if (cfg.year_min > cfg.year_max) throw UsageError("--year-min is after --year-max");
        if (cfg.command == "preprocess") return cmd_preprocess(cfg, err);
        if (cfg.command == "estimate") return cmd_estimate(cfg, out, err);
        if (cfg.command == "evaluate") return cmd_evaluate(cfg, out, err);
        if (cfg.command == "coverage-model") return cmd_coverage_model(cfg, out, err);
        return cmd_synth(cfg, err);
    } catch (const UsageError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        fmt::print(err, "error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return 1;
    }
}

}  // namespace mye::cli
