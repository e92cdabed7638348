// Command line front end: exhaustive and corpus scans, single-graph checks,
// named-family audits, extremal search and the subgraph monotonicity scan.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngspec/bounds.hpp"
#include "ngspec/families.hpp"
#include "ngspec/scan.hpp"
#include "ngspec/search.hpp"

using namespace ngspec;
using nlohmann::json;

namespace {

struct SourceArgs {
    int n = 0;
    std::string input;
    bool from_stdin = false;
};

void add_source_options(CLI::App* cmd, SourceArgs& src) {
    auto* n = cmd->add_option("--n", src.n, "every labeled graph on n vertices (n <= 8)");
    auto* in = cmd->add_option("--input", src.input, "graph6 file, one graph per line");
    auto* sin = cmd->add_flag("--stdin", src.from_stdin, "read graph6 lines from standard input");
    n->excludes(in)->excludes(sin);
    in->excludes(sin);
}

// Owns the file handle behind a Graph6Stream.
struct OpenedStream {
    std::ifstream file;
    std::unique_ptr<GraphStream> stream;
};

OpenedStream open_source(const SourceArgs& src) {
    OpenedStream out;
    if (src.n > 0) {
        out.stream = std::make_unique<LabeledEnumeration>(src.n);
    } else if (!src.input.empty()) {
        out.file.open(src.input);
        if (!out.file) throw std::runtime_error("cannot open " + src.input);
        out.stream = std::make_unique<Graph6Stream>(out.file, src.input);
    } else if (src.from_stdin) {
        out.stream = std::make_unique<Graph6Stream>(std::cin, "stdin");
    } else {
        throw std::runtime_error("no graph source: give --n, --input or --stdin");
    }
    return out;
}

double rounded(double x) {
    const auto s = format_real(x);
    return s.empty() ? x : std::stod(s);
}

json invariants_json(const Graph& g, const InvariantSet& inv) {
    json j;
    j["g6"] = to_graph6(g);
    j["n"] = inv.n;
    j["m"] = inv.m;
    j["s_plus"] = rounded(inv.s_plus);
    j["s_minus"] = rounded(inv.s_minus);
    j["energy"] = rounded(inv.energy);
    j["mu_max"] = rounded(inv.mu_max);
    j["mu_min"] = rounded(inv.mu_min);
    j["randic"] = rounded(inv.randic);
    j["inertia"] = {inv.inertia.positive, inv.inertia.negative, inv.inertia.zero};
    j["chi"] = inv.chi ? json(*inv.chi) : json(nullptr);
    j["chi_complement"] = inv.chi_complement ? json(*inv.chi_complement) : json(nullptr);
    j["connected"] = inv.connected;
    j["triangle_free"] = inv.triangle_free;
    j["bipartite"] = inv.bipartite;
    j["structure"] = inv.tags.names();
    return j;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

void emit(const ScanReport& report, const std::string& path, ReportFormat format) {
    if (path.empty() || path == "-") {
        write_report(report, format, std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report to " + path);
    write_report(report, format, out);
    if (format != ReportFormat::summary) write_report(report, ReportFormat::summary, std::cout);
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral Nordhaus-Gaddum bound checker"};
    app.require_subcommand(1);

    // scan
    SourceArgs scan_src;
    std::string scan_bounds = "all", scan_report, scan_format = "summary";
    double scan_tol = kDefaultSlackTolerance;
    int scan_jobs = 1, scan_chi_cap = kDefaultChromaticCap;
    bool scan_all_rows = false, scan_stamp = false;
    auto* scan = app.add_subcommand("scan", "check every graph of a stream against catalog bounds");
    add_source_options(scan, scan_src);
    scan->add_option("--bounds", scan_bounds, "all, or comma separated bound ids");
    scan->add_option("--tol", scan_tol, "slack tolerance");
    scan->add_option("--jobs", scan_jobs, "worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--report", scan_report, "report path (default stdout)");
    scan->add_option("--format", scan_format, "jsonl | csv | summary");
    scan->add_option("--chi-cap", scan_chi_cap, "largest n for exact chromatic numbers");
    scan->add_flag("--all-rows", scan_all_rows, "report every check, not only violations");
    scan->add_flag("--stamp", scan_stamp, "record a UTC timestamp in the report metadata");

    // family
    std::string fam_kind, fam_params;
    auto* family = app.add_subcommand("family", "build a named family member and print its invariants");
    family->add_option("--kind", fam_kind, "complete, empty, path, cycle, complete_bipartite, complete_split, "
                                           "complete_multipartite, paley, star, join_clique_empty")
        ->required();
    family->add_option("--params", fam_params, "comma separated integers")->required();

    // check
    std::string chk_g6, chk_bounds = "all", chk_format = "jsonl";
    double chk_tol = kDefaultSlackTolerance;
    auto* check = app.add_subcommand("check", "check one graph against catalog bounds");
    check->add_option("--g6", chk_g6, "graph6 string")->required();
    check->add_option("--bounds", chk_bounds, "all, or comma separated bound ids");
    check->add_option("--tol", chk_tol, "slack tolerance");
    check->add_option("--format", chk_format, "jsonl | csv | summary");

    // search
    std::string srch_obj;
    SearchConfig cfg;
    auto* search = app.add_subcommand("search", "restarted hill climbing for extremal graphs");
    search->add_option("--objective", srch_obj,
                       "MU_NG_SUM | SQRT_SPLUS_NG_SUM | SPLUS_NG_SUM | NEG_SPLUS_NG_SUM | VIOLATION(ID)")
        ->required();
    search->add_option("--n", cfg.n, "vertex count")->required();
    search->add_option("--seed", cfg.seed, "run seed");
    search->add_option("--restarts", cfg.restarts, "independent restarts");
    search->add_option("--steps", cfg.steps, "step budget per restart");
    search->add_option("--plateau", cfg.plateau_budget, "sideways move budget");
    search->add_option("--sample-cap", cfg.sample_cap, "sampled moves per swap/double-toggle step");
    search->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

    // subgraph-scan
    SourceArgs sub_src;
    std::string sub_mode = "edge", sub_report;
    int sub_jobs = 1;
    auto* subscan = app.add_subcommand("subgraph-scan", "find subgraphs with larger s+ than their parent");
    add_source_options(subscan, sub_src);
    subscan->add_option("--mode", sub_mode, "edge | full")->check(CLI::IsMember({"edge", "full"}));
    subscan->add_option("--jobs", sub_jobs, "worker threads")->check(CLI::PositiveNumber);
    subscan->add_option("--report", sub_report, "jsonl output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (scan->parsed()) {
            auto src = open_source(scan_src);
            ScanOptions opts;
            opts.ids = Catalog::standard().resolve(scan_bounds);
            opts.jobs = scan_jobs;
            opts.check.tol = scan_tol;
            opts.check.invariants.chromatic_cap = scan_chi_cap;
            opts.keep_all_rows = scan_all_rows;
            const auto format = report_format_from_name(scan_format);
            ScanReport report = run_scan(*src.stream, opts);
            report.metadata = {{"command", "scan"},
                               {"source", src.stream->describe()},
                               {"bounds", scan_bounds},
                               {"tol", format_real(scan_tol)},
                               {"chi_cap", std::to_string(scan_chi_cap)}};
            if (scan_stamp) report.metadata.emplace_back("timestamp", utc_timestamp());
            emit(report, scan_report, format);
            return report.exit_status();
        }
        if (family->parsed()) {
            const Graph g = make_family({family_from_name(fam_kind), parse_int_list(fam_params)});
            std::cout << to_graph6(g) << '\n' << invariants_json(g, collect_invariants(g)).dump() << '\n';
            return kExitClean;
        }
        if (check->parsed()) {
            const Graph g = parse_graph6(chk_g6);
            ScanOptions opts;
            opts.ids = Catalog::standard().resolve(chk_bounds);
            opts.check.tol = chk_tol;
            opts.keep_all_rows = true;
            GraphListStream one({g}, "g6:" + chk_g6);
            ScanReport report = run_scan(one, opts);
            report.metadata = {{"command", "check"}, {"source", one.describe()}, {"bounds", chk_bounds}};
            write_report(report, report_format_from_name(chk_format), std::cout);
            return report.exit_status();
        }
        if (search->parsed()) {
            const auto objective = Objective::parse(srch_obj);
            const SearchResult r = optimize(objective, cfg);
            json trace = json::array();
            for (const auto& t : r.trace)
                trace.push_back({{"restart", t.restart},
                                 {"step", t.step},
                                 {"value", rounded(t.value)},
                                 {"move", std::string(neighbourhood_name(t.move))}});
            json out{{"objective", r.objective},
                     {"n", cfg.n},
                     {"seed", r.seed},
                     {"best_g6", r.best_g6},
                     {"best_value", rounded(r.best_value)},
                     {"restarts_used", r.restarts_used},
                     {"budget_exhausted", r.budget_exhausted},
                     {"swap_moves", r.swap_moves},
                     {"swap_moves_lowering_sqrt_splus", r.swap_moves_lowering_sqrt_splus},
                     {"trace", trace}};
            std::cout << out.dump() << '\n';
            return kExitClean;
        }
        if (subscan->parsed()) {
            auto src = open_source(sub_src);
            std::uint64_t seen = 0;
            const auto pairs = subgraph_monotonicity_scan(
                *src.stream, sub_mode == "edge" ? SubgraphMode::edge : SubgraphMode::full, sub_jobs, &seen);
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!sub_report.empty() && sub_report != "-") {
                file.open(sub_report, std::ios::binary);
                if (!file) throw std::runtime_error("cannot write " + sub_report);
                out = &file;
            }
            for (const auto& p : pairs) *out << subgraph_pair_json(p) << '\n';
            std::cerr << "graphs: " << seen << "  pairs: " << pairs.size() << "  mode: " << sub_mode << '\n';
            return kExitClean;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOperational;
    }
    return kExitOperational;
}
