#include "ngspec/scan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

namespace ngspec {

namespace {

// Runs work(i) for i in [0, count) over contiguous chunks on `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (std::size_t begin = 0; begin < count; begin += chunk)
        pool.emplace_back([&, begin] {
            const auto end = std::min(count, begin + chunk);
            for (std::size_t i = begin; i < end; ++i) work(i);
        });
    for (auto& t : pool) t.join();
}

double s_plus_of(const Graph& g) { return spectral_sums(eigen_decompose(g), g.edge_count()).s_plus; }

} // namespace

std::uint64_t ScanReport::violations(bool theorems_only) const {
    std::uint64_t k = 0;
    for (const auto& a : aggregates)
        if (!theorems_only || a.status == BoundStatus::theorem) k += a.violations;
    return k;
}

int ScanReport::exit_status() const {
    if (violations(true) > 0) return kExitTheoremViolation;
    if (violations() > 0) return kExitConjectureViolation;
    return kExitClean;
}

ScanReport run_scan(GraphStream& stream, const ScanOptions& options) {
    const Catalog& catalog = *options.catalog;
    ScanReport report;
    for (const auto& id : options.ids) catalog.at(id);
    // Rows and aggregates follow catalog order regardless of the order ids were given.
    std::vector<std::string> ordered;
    for (const auto& e : catalog.entries())
        if (std::find(options.ids.begin(), options.ids.end(), e.id) != options.ids.end()) {
            ordered.push_back(e.id);
            report.aggregates.push_back({.bound = e.id, .status = e.status});
        }

    std::vector<Graph> batch;
    std::vector<std::vector<BoundCheck>> results;
    while (true) {
        batch.clear();
        if (stream.next_batch(batch, options.batch_size) == 0) break;
        results.assign(batch.size(), {});
        parallel_for(batch.size(), options.jobs,
                     [&](std::size_t i) { results[i] = check_graph(batch[i], ordered, options.check, catalog); });

        for (auto& rows : results) {
            ++report.graphs;
            for (std::size_t k = 0; k < rows.size(); ++k) {
                auto& agg = report.aggregates[k];
                auto& row = rows[k];
                if (row.skipped) {
                    ++agg.skipped;
                } else {
                    ++agg.evaluated;
                    if (!row.holds) ++agg.violations;
                    if (row.equality) ++agg.equalities;
                    if (row.slack < agg.min_slack) {
                        agg.min_slack = row.slack;
                        agg.argmin_g6 = row.g6;
                    }
                }
                if (options.keep_all_rows || row.violated()) report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

std::vector<SubgraphPair> subgraph_monotonicity_scan(GraphStream& stream, SubgraphMode mode, int jobs,
                                                     std::uint64_t* graphs_seen) {
    std::vector<SubgraphPair> pairs;
    std::vector<Graph> batch;
    std::vector<std::vector<SubgraphPair>> found;
    std::uint64_t seen = 0;
    while (true) {
        batch.clear();
        if (stream.next_batch(batch, 8192) == 0) break;
        found.assign(batch.size(), {});
        parallel_for(batch.size(), jobs, [&](std::size_t i) {
            const Graph& g = batch[i];
            const double base = s_plus_of(g);
            auto record = [&](const Graph& child, std::string what) {
                const double sp = s_plus_of(child);
                if (sp > base + kSubgraphMargin)
                    found[i].push_back({to_graph6(g), to_graph6(child), base, sp, std::move(what), mode});
            };
            for (auto [a, b] : g.edges()) {
                Graph child = g;
                child.remove_edge(a, b);
                record(child, "edge " + std::to_string(a) + "-" + std::to_string(b));
            }
            if (mode == SubgraphMode::full && g.order() > 1)
                for (int v = 0; v < g.order(); ++v) record(g.without_vertex(v), "vertex " + std::to_string(v));
        });
        seen += batch.size();
        for (auto& f : found) pairs.insert(pairs.end(), f.begin(), f.end());
    }
    if (graphs_seen) *graphs_seen = seen;
    return pairs;
}

} // namespace ngspec
