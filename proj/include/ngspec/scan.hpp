#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ngspec/bounds.hpp"
#include "ngspec/stream.hpp"

namespace ngspec {

struct BoundAggregate {
    std::string bound;
    BoundStatus status = BoundStatus::theorem;
    std::uint64_t evaluated = 0;
    std::uint64_t skipped = 0;
    std::uint64_t violations = 0;
    std::uint64_t equalities = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    std::string argmin_g6;
};

/// Exit statuses of the scanning commands.
enum ExitStatus : int { kExitClean = 0, kExitOperational = 1, kExitConjectureViolation = 2, kExitTheoremViolation = 3 };

struct ScanReport {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<BoundAggregate> aggregates; // catalog order
    std::vector<BoundCheck> rows;           // violations, or every row when requested
    std::uint64_t graphs = 0;

    std::uint64_t violations(bool theorems_only = false) const;
    int exit_status() const;
};

struct ScanOptions {
    std::vector<std::string> ids;
    int jobs = 1;
    CheckOptions check;
    bool keep_all_rows = false;
    std::size_t batch_size = 8192;
    const Catalog* catalog = &Catalog::standard();
};

/// Checks every streamed graph against every requested bound. Work is split
/// across `jobs` threads per batch and merged in stream order, so the report
/// does not depend on the worker count.
ScanReport run_scan(GraphStream& stream, const ScanOptions& options);

enum class SubgraphMode { edge, full };

struct SubgraphPair {
    std::string parent_g6;
    std::string child_g6;
    double parent_s_plus = 0.0;
    double child_s_plus = 0.0;
    std::string deletion; // "edge i-j" or "vertex v"
    SubgraphMode mode = SubgraphMode::edge;
};

inline constexpr double kSubgraphMargin = 1e-9;

/// Pairs (G, H) with H = G minus one edge (mode edge) or minus one edge or
/// vertex (mode full) and s+(H) > s+(G) + 1e-9.
std::vector<SubgraphPair> subgraph_monotonicity_scan(GraphStream& stream, SubgraphMode mode, int jobs = 1,
                                                     std::uint64_t* graphs_seen = nullptr);

enum class ReportFormat { jsonl, csv, summary };

ReportFormat report_format_from_name(std::string_view name);

/// Shortest decimal with 12 significant digits; non-finite values render empty.
std::string format_real(double x);

void write_report(const ScanReport& report, ReportFormat format, std::ostream& out);
std::string render_report(const ScanReport& report, ReportFormat format);

std::string subgraph_pair_json(const SubgraphPair& pair);

} // namespace ngspec
