#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ngspec/families.hpp"
#include "ngspec/scan.hpp"
#include "ngspec/structure.hpp"

using namespace ngspec;

namespace {

Graph fam(FamilyKind k, std::vector<int> p) { return make_family({k, std::move(p)}); }

const BoundAggregate& aggregate(const ScanReport& r, const std::string& id) {
    for (const auto& a : r.aggregates)
        if (a.bound == id) return a;
    FAIL("no aggregate for " << id);
    throw;
}

ScanReport scan_n(int n, const std::string& bounds, int jobs = 1, bool all_rows = false) {
    LabeledEnumeration stream(n);
    ScanOptions opts;
    opts.ids = Catalog::standard().resolve(bounds);
    opts.jobs = jobs;
    opts.keep_all_rows = all_rows;
    return run_scan(stream, opts);
}

BoundSpec always_broken(std::string id, BoundStatus status) {
    BoundSpec s;
    s.id = std::move(id);
    s.status = status;
    s.applies = [](const InvariantSet&) { return std::optional<std::string>{}; };
    s.evaluate = [](const InvariantSet& g, const InvariantSet*) {
        return BoundTerms{double(g.n), std::nullopt, 0.5};
    };
    return s;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("exhaustive scan of n = 5 against the whole catalog") {
    const ScanReport r = scan_n(5, "all");
    CHECK(r.graphs == 1024);
    CHECK(r.violations() == 0);
    CHECK(r.exit_status() == kExitClean);
    CHECK(r.rows.empty());
    REQUIRE(r.aggregates.size() == 24);
    CHECK(r.aggregates.front().bound == "STANLEY");
    CHECK(aggregate(r, "CONJ5_CONF").equalities == 12);
    CHECK(aggregate(r, "CONJ5_CONF").evaluated == 1024);
    const auto& conj6 = aggregate(r, "CONJ6_RATIO");
    CHECK(conj6.evaluated + conj6.skipped == 1024);
    CHECK(conj6.evaluated == 728); // labeled connected graphs on 5 vertices
}

TEST_CASE("CONJ2 extremal graph at n = 6 is complete split") {
    const ScanReport r = scan_n(6, "CONJ2_F1");
    const auto& a = aggregate(r, "CONJ2_F1");
    CHECK(a.violations == 0);
    const Graph g = parse_graph6(a.argmin_g6);
    const bool cs = classify_structure(g).has(StructureTag::complete_split) ||
                    classify_structure(g.complement()).has(StructureTag::complete_split);
    CHECK(cs);
    CHECK(a.min_slack == doctest::Approx(conjectured_ng_maximum(6) - 6.37228132327).epsilon(1e-9));
}

TEST_CASE("THM1_NG lower side is met by K4 and its complement at n = 4") {
    const ScanReport r = scan_n(4, "THM1_NG");
    const auto& a = aggregate(r, "THM1_NG");
    CHECK(a.violations == 0);
    CHECK(a.min_slack == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(a.equalities >= 2);
}

TEST_CASE("Paley graphs attain both conference bounds") {
    std::vector<Graph> graphs;
    for (int p : {5, 13, 17, 29}) graphs.push_back(fam(FamilyKind::paley, {p}));
    GraphListStream stream(graphs, "paley");
    ScanOptions opts;
    opts.ids = Catalog::standard().resolve("CONJ5_CONF,NY_ENERGY");
    opts.keep_all_rows = true;
    const ScanReport r = run_scan(stream, opts);
    CHECK(r.graphs == 4);
    CHECK(aggregate(r, "CONJ5_CONF").equalities == 4);
    CHECK(aggregate(r, "NY_ENERGY").equalities == 4);
    CHECK(r.rows.size() == 8);
    CHECK(r.rows[0].bound == "CONJ5_CONF");
    CHECK(r.rows[0].g6 == to_graph6(graphs[0]));
}

TEST_CASE("exit status follows the most serious violation") {
    const Catalog catalog({always_broken("T", BoundStatus::theorem), always_broken("C", BoundStatus::conjecture),
                           always_broken("D", BoundStatus::conjecture_dependent)});
    auto run = [&](std::vector<std::string> ids) {
        GraphListStream stream({fam(FamilyKind::path, {3})}, "p3");
        ScanOptions opts;
        opts.ids = std::move(ids);
        opts.catalog = &catalog;
        return run_scan(stream, opts);
    };
    CHECK(run({"C"}).exit_status() == kExitConjectureViolation);
    CHECK(run({"D"}).exit_status() == kExitConjectureViolation);
    const ScanReport both = run({"T", "C"});
    CHECK(both.exit_status() == kExitTheoremViolation);
    CHECK(both.violations() == 2);
    CHECK(both.violations(true) == 1);
    CHECK(both.rows.size() == 2);
}

TEST_CASE("reports do not depend on the worker count or batch size") {
    for (auto format : {ReportFormat::jsonl, ReportFormat::csv, ReportFormat::summary}) {
        const std::string one = render_report(scan_n(5, "all", 1, true), format);
        const std::string many = render_report(scan_n(5, "all", 8, true), format);
        CHECK(one == many);
    }
    LabeledEnumeration stream(5);
    ScanOptions opts;
    opts.ids = Catalog::standard().resolve("all");
    opts.jobs = 3;
    opts.batch_size = 37;
    opts.keep_all_rows = true;
    CHECK(render_report(run_scan(stream, opts), ReportFormat::jsonl) ==
          render_report(scan_n(5, "all", 1, true), ReportFormat::jsonl));
}

TEST_CASE("report formats") {
    GraphListStream stream({Graph::from_edges(4, {{0, 1}, {2, 3}})}, "two edges");
    ScanOptions opts;
    opts.ids = Catalog::standard().resolve("STANLEY,MIN_S_CONJ");
    opts.keep_all_rows = true;
    ScanReport r = run_scan(stream, opts);
    r.metadata = {{"command", "scan"}, {"source", "two edges"}};

    const auto jl = lines(render_report(r, ReportFormat::jsonl));
    REQUIRE(jl.size() == 2);
    CHECK(jl[0].rfind("{\"bound\":\"STANLEY\",\"g6\":\"C`\",\"status\":\"theorem\",\"lhs\":1,\"rhs\":1.56155281281,\"slack\":0.561552812809,", 0) ==
          0);
    CHECK(jl[1].find("\"lhs\":null,\"rhs\":null,\"slack\":null") != std::string::npos);
    CHECK(jl[1].find("\"skipped\":true") != std::string::npos);
    CHECK(jl[1].find("\"reason\":\"requires a connected graph\"") != std::string::npos);

    const std::string csv = render_report(r, ReportFormat::csv);
    CHECK(csv.rfind("bound,g6,status,lhs,rhs,slack,holds,equality,tight,skipped,side,reason,note\r\n", 0) == 0);
    CHECK(csv.find("MIN_S_CONJ,C`,conjecture,,,,true,false,false,true,,requires a connected graph,\r\n") !=
          std::string::npos);

    const auto sm = lines(render_report(r, ReportFormat::summary));
    CHECK(sm[0] == "# command: scan");
    CHECK(sm[1] == "# source: two edges");
    CHECK(sm[2] == "# graphs: 1");
    CHECK(sm.back() == "VIOLATIONS: 0");

    CHECK(report_format_from_name("summary-text") == ReportFormat::summary);
    CHECK_THROWS(report_format_from_name("xml"));
}

TEST_CASE("csv quoting") {
    ScanReport r;
    BoundCheck row;
    row.bound = "X";
    row.g6 = "A_";
    row.skipped = true;
    row.reason = "error: a, \"b\"";
    r.rows.push_back(row);
    const std::string csv = render_report(r, ReportFormat::csv);
    CHECK(csv.find(",\"error: a, \"\"b\"\"\",") != std::string::npos);
}

TEST_CASE("format_real") {
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1.5) == "1.5");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(INFINITY).empty());
    CHECK(format_real(NAN).empty());
}

TEST_CASE("subgraph monotonicity scan") {
    LabeledEnumeration n5(5);
    std::uint64_t seen = 0;
    CHECK(subgraph_monotonicity_scan(n5, SubgraphMode::edge, 2, &seen).empty());
    CHECK(seen == 1024);

    GraphListStream k4({fam(FamilyKind::complete, {4})}, "k4");
    CHECK(subgraph_monotonicity_scan(k4, SubgraphMode::full).empty());

    SubgraphPair p{"Dhc", "D`c", 4.76, 4.9, "edge 0-1", SubgraphMode::edge};
    CHECK(subgraph_pair_json(p) ==
          "{\"mode\":\"edge\",\"parent\":\"Dhc\",\"child\":\"D`c\",\"deletion\":\"edge 0-1\","
          "\"s_plus_parent\":4.76,\"s_plus_child\":4.9}");
}
