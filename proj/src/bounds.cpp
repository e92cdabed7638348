#include "ngspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ngspec {

namespace {

using Reason = std::optional<std::string>;

Reason always(const InvariantSet&) { return std::nullopt; }

Reason needs_edge(const InvariantSet& g) {
    if (g.m < 1) return "requires m >= 1";
    return std::nullopt;
}

Reason needs_connected(const InvariantSet& g) {
    if (!g.connected) return "requires a connected graph";
    return std::nullopt;
}

// Randic-type bounds divide by mu or R, so the single vertex is excluded.
Reason needs_connected_edge(const InvariantSet& g) {
    if (auto r = needs_connected(g)) return r;
    return needs_edge(g);
}

// Both conference bounds are met trivially by K1, which is not a conference graph.
Reason needs_two_vertices(const InvariantSet& g) {
    if (g.n < 2) return "requires n >= 2";
    return std::nullopt;
}

double stanley(int m) { return (std::sqrt(8.0 * m + 1.0) - 1.0) / 2.0; }

double sqrt_splus_pair(const InvariantSet& g, const InvariantSet* c) {
    return std::sqrt(g.s_plus) + std::sqrt(c->s_plus);
}

BoundTerms upper(double value, double bound) { return {value, std::nullopt, bound}; }
BoundTerms lower(double value, double bound) { return {value, bound, std::nullopt}; }
BoundTerms between(double lo, double value, double hi) { return {value, lo, hi}; }

std::vector<BoundSpec> standard_entries() {
    std::vector<BoundSpec> c;
    auto add = [&](BoundSpec s) { c.push_back(std::move(s)); };

    add({.id = "STANLEY",
         .applies = always,
         .evaluate = [](const InvariantSet& g, const InvariantSet*) { return upper(g.mu_max, stanley(g.m)); },
         .statement = "mu <= (sqrt(8m+1)-1)/2"});
    add({.id = "WU_ELPHICK",
         .applies = always,
         .evaluate = [](const InvariantSet& g, const InvariantSet*) { return upper(std::sqrt(g.s_plus), stanley(g.m)); },
         .statement = "sqrt(s+) <= (sqrt(8m+1)-1)/2"});
    add({.id = "HOFFMAN",
         .needs_chi = true,
         .applies = needs_edge,
         .evaluate = [](const InvariantSet& g,
                        const InvariantSet*) { return upper(1.0 + g.mu_max / std::fabs(g.mu_min), *g.chi); },
         .statement = "1 + mu/|mu_n| <= chi"});
    add({.id = "ANDO_LIN",
         .needs_chi = true,
         .applies = needs_edge,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet*) {
                 return upper(1.0 + std::max(g.s_plus / g.s_minus, g.s_minus / g.s_plus), *g.chi);
             },
         .statement = "1 + max(s+/s-, s-/s+) <= chi"});
    add({.id = "CHI_SPLUS",
         .needs_chi = true,
         .applies = needs_edge,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet*) {
                 const double chi = *g.chi;
                 return upper(g.s_plus, 2.0 * g.m * (chi - 1.0) / chi);
             },
         .statement = "s+ <= 2m(chi-1)/chi"});
    add({.id = "MIN_S_CONJ",
         .kind = BoundKind::lower,
         .status = BoundStatus::conjecture,
         .applies = needs_connected,
         .evaluate = [](const InvariantSet& g,
                        const InvariantSet*) { return lower(std::min(g.s_plus, g.s_minus), g.n - 1.0); },
         .statement = "min(s+, s-) >= n-1 (connected)"});
    add({.id = "SMINUS_MAX",
         .applies = always,
         .evaluate = [](const InvariantSet& g,
                        const InvariantSet*) { return upper(g.s_minus, g.n * static_cast<double>(g.n) / 4.0); },
         .statement = "s- <= n^2/4"});
    add({.id = "NOSAL_NG",
         .kind = BoundKind::two_sided,
         .upper_strict = true,
         .needs_complement = true,
         .applies = always,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet* c) {
                 return between(g.n - 1.0, g.mu_max + c->mu_max, std::sqrt(2.0) * (g.n - 1.0));
             },
         .statement = "n-1 <= mu(G)+mu(Gc) < sqrt(2)(n-1)"});
    add({.id = "THM1_NG",
         .kind = BoundKind::two_sided,
         .upper_strict = true,
         .needs_complement = true,
         .applies = always,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet* c) {
                 return between(g.n - 1.0, sqrt_splus_pair(g, c), std::sqrt(2.0) * g.n);
             },
         .statement = "n-1 <= sqrt(s+(G))+sqrt(s+(Gc)) < sqrt(2) n"});
    add({.id = "THM1_CHI_FORM",
         .needs_complement = true,
         .needs_chi = true,
         .applies = always,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet* c) {
                 const double factor = 2.0 - 1.0 / *g.chi - 1.0 / *c->chi;
                 return upper(sqrt_splus_pair(g, c), std::sqrt(factor * g.n * (g.n - 1.0)));
             },
         .statement = "sqrt(s+(G))+sqrt(s+(Gc)) <= sqrt((2 - 1/chi - 1/chi_c) n(n-1))"});
    add({.id = "CONJ2_F1",
         .status = BoundStatus::conjecture,
         .needs_complement = true,
         .applies = always,
         .evaluate = [](const InvariantSet& g,
                        const InvariantSet* c) { return upper(g.mu_max + c->mu_max, conjectured_ng_maximum(g.n)); },
         .statement = "mu(G)+mu(Gc) <= 4n/3 - 5/3 + f(n)"});
    add({.id = "CONJ3_SQRT",
         .status = BoundStatus::conjecture,
         .needs_complement = true,
         .applies = always,
         .evaluate = [](const InvariantSet& g,
                        const InvariantSet* c) { return upper(sqrt_splus_pair(g, c), conjectured_ng_maximum(g.n)); },
         .statement = "sqrt(s+(G))+sqrt(s+(Gc)) <= 4n/3 - 5/3 + f(n)"});
    add({.id = "TERPAI",
         .needs_complement = true,
         .applies = always,
         .evaluate = [](const InvariantSet& g,
                        const InvariantSet* c) { return upper(g.mu_max + c->mu_max, 4.0 * g.n / 3.0 - 1.0); },
         .statement = "mu(G)+mu(Gc) <= 4n/3 - 1"});
    add({.id = "CSIKVARI",
         .needs_complement = true,
         .applies = always,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet* c) {
                 return upper(g.mu_max + c->mu_max, (1.0 + std::sqrt(3.0)) * g.n / 2.0 - 1.0);
             },
         .statement = "mu(G)+mu(Gc) <= (1+sqrt(3))n/2 - 1"});
    add({.id = "THM_SPLUS_SUM",
         .kind = BoundKind::two_sided,
         .status = BoundStatus::conjecture_dependent,
         .lower_strict = true,
         .needs_complement = true,
         .applies = always,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet* c) {
                 const double k = g.n - 1.0;
                 return between(k * k / 2.0, g.s_plus + c->s_plus, k * k);
             },
         .statement = "(n-1)^2/2 < s+(G)+s+(Gc) <= (n-1)^2"});
    add({.id = "CONJ5_CONF",
         .kind = BoundKind::lower,
         .status = BoundStatus::conjecture,
         .needs_complement = true,
         .applies = needs_two_vertices,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet* c) {
                 const double n = g.n;
                 return lower(g.s_plus + c->s_plus, (n - 1.0) * (3.0 * n - 1.0 - 2.0 * std::sqrt(n)) / 4.0);
             },
         .equality_class = StructureTag::conference_srg,
         .statement = "s+(G)+s+(Gc) >= (n-1)(3n-1-2 sqrt(n))/4"});
    add({.id = "NY_ENERGY",
         .needs_complement = true,
         .applies = needs_two_vertices,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet* c) {
                 return upper(g.energy + c->energy, (g.n - 1.0) * (1.0 + std::sqrt(static_cast<double>(g.n))));
             },
         .equality_class = StructureTag::conference_srg,
         .statement = "E(G)+E(Gc) <= (n-1)(1+sqrt(n))"});
    add({.id = "FAVARON",
         .applies = needs_connected_edge,
         .evaluate = [](const InvariantSet& g, const InvariantSet*) { return upper(std::fabs(g.mu_min), g.randic); },
         .statement = "|mu_n| <= R (connected)"});
    add({.id = "LEMMA_MR",
         .applies = needs_connected_edge,
         .evaluate = [](const InvariantSet& g, const InvariantSet*) { return upper(g.m / g.mu_max, g.randic); },
         .statement = "m/mu <= R (connected)"});
    add({.id = "THM_RANDIC",
         .applies = needs_connected_edge,
         .evaluate = [](const InvariantSet& g, const InvariantSet*) { return upper(std::sqrt(g.s_minus), g.randic); },
         .equality_class = StructureTag::complete_bipartite,
         .statement = "sqrt(s-) <= R (connected)"});
    add({.id = "CONJ6_RATIO",
         .kind = BoundKind::two_sided,
         .status = BoundStatus::conjecture,
         .applies =
             [](const InvariantSet& g) -> Reason {
                 if (auto r = needs_connected(g)) return r;
                 if (g.n < 3) return "requires n >= 3";
                 return std::nullopt;
             },
         .evaluate =
             [](const InvariantSet& g, const InvariantSet*) {
                 const double n = g.n;
                 return between(2.0 * std::sqrt(n - 1.0) / (n - 3.0 + 2.0 * std::sqrt(2.0)),
                                std::sqrt(g.s_plus) / g.randic, 2.0 * (n - 1.0) / n);
             },
         .statement = "2 sqrt(n-1)/(n-3+2 sqrt(2)) <= sqrt(s+)/R <= 2(n-1)/n (connected)"});
    add({.id = "CONJ7_TF",
         .status = BoundStatus::conjecture,
         .applies =
             [](const InvariantSet& g) -> Reason {
                 if (!g.triangle_free) return "requires a triangle-free graph";
                 return needs_edge(g);
             },
         .evaluate = [](const InvariantSet& g, const InvariantSet*) { return upper(std::sqrt(g.s_plus), g.randic); },
         .equality_class = StructureTag::complete_bipartite,
         .statement = "sqrt(s+) <= R (triangle-free)"});
    add({.id = "NG_CHI_SUM",
         .kind = BoundKind::two_sided,
         .needs_complement = true,
         .needs_chi = true,
         .applies = always,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet* c) {
                 return between(2.0 * std::sqrt(static_cast<double>(g.n)), *g.chi + *c->chi, g.n + 1.0);
             },
         .statement = "2 sqrt(n) <= chi + chi_c <= n+1"});
    add({.id = "NG_CHI_PROD",
         .kind = BoundKind::two_sided,
         .needs_complement = true,
         .needs_chi = true,
         .applies = always,
         .evaluate =
             [](const InvariantSet& g, const InvariantSet* c) {
                 const double n = g.n;
                 return between(n, static_cast<double>(*g.chi) * *c->chi, (n + 1.0) * (n + 1.0) / 4.0);
             },
         .statement = "n <= chi * chi_c <= (n+1)^2/4"});
    return c;
}

std::string safe_graph6(const Graph& g) { return g.order() <= 62 ? to_graph6(g) : std::string{}; }

} // namespace

std::string_view status_name(BoundStatus s) {
    switch (s) {
    case BoundStatus::theorem: return "theorem";
    case BoundStatus::conjecture: return "conjecture";
    case BoundStatus::conjecture_dependent: return "conjecture-dependent";
    }
    return "unknown";
}

Catalog::Catalog(std::vector<BoundSpec> entries) : entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const auto& e : entries_)
        if (!seen.insert(e.id).second) throw BoundError("duplicate bound id " + e.id);
}

const Catalog& Catalog::standard() {
    static const Catalog catalog(standard_entries());
    return catalog;
}

const BoundSpec& Catalog::at(std::string_view id) const {
    for (const auto& e : entries_)
        if (e.id == id) return e;
    throw BoundError("unknown bound id '" + std::string(id) + "'");
}

bool Catalog::contains(std::string_view id) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const BoundSpec& e) { return e.id == id; });
}

std::vector<std::string> Catalog::resolve(std::string_view list) const {
    std::vector<std::string> out;
    if (list == "all") {
        for (const auto& e : entries_) out.push_back(e.id);
        return out;
    }
    std::set<std::string> wanted;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = std::min(list.find(',', start), list.size());
        const auto id = std::string(list.substr(start, comma - start));
        if (!id.empty()) {
            at(id);
            wanted.insert(id);
        }
        start = comma + 1;
    }
    for (const auto& e : entries_)
        if (wanted.contains(e.id)) out.push_back(e.id);
    return out;
}

double f_correction(int n) {
    if (n < 1) throw BoundError("f(n) needs n >= 1");
    switch (n % 3) {
    case 2: return 0.0;
    case 1: {
        const double a = 3.0 * n - 2.0;
        return (std::sqrt(a * a + 8.0) - a) / 6.0;
    }
    default: {
        const double a = 3.0 * n - 1.0;
        return (std::sqrt(a * a + 8.0) - a) / 6.0;
    }
    }
}

double conjectured_ng_maximum(int n) { return 4.0 * n / 3.0 - 5.0 / 3.0 + f_correction(n); }

BoundCheck evaluate_bound(const BoundSpec& spec, const InvariantSet& g, const InvariantSet* complement, double tol) {
    BoundCheck out;
    out.bound = spec.id;
    out.status = spec.status;
    if (spec.needs_complement && complement == nullptr)
        throw BoundError(spec.id + " is a Nordhaus-Gaddum bound and needs complement invariants");

    if (auto reason = spec.applies(g)) {
        out.skipped = true;
        out.reason = *reason;
        return out;
    }
    if (spec.needs_chi && (!g.chi || (spec.needs_complement && !complement->chi))) {
        out.skipped = true;
        out.reason = "exact chromatic number capped";
        return out;
    }

    const BoundTerms t = spec.evaluate(g, complement);
    out.lhs = t.value;
    const double lower_slack = t.lower ? t.value - *t.lower : INFINITY;
    const double upper_slack = t.upper ? *t.upper - t.value : INFINITY;
    const bool lower_binds = lower_slack < upper_slack;
    out.slack = lower_binds ? lower_slack : upper_slack;
    out.rhs = lower_binds ? *t.lower : *t.upper;
    if (spec.kind == BoundKind::two_sided) out.side = lower_binds ? "lower" : "upper";

    const bool strict = lower_binds ? (spec.lower_strict || spec.kind == BoundKind::strict_lower)
                                    : (spec.upper_strict || spec.kind == BoundKind::strict_upper);
    out.holds = out.slack >= -tol;
    out.tight = strict && std::fabs(out.slack) <= tol;
    out.equality = out.holds && std::fabs(out.slack) <= kEqualityTolerance;
    return out;
}

BoundCheck evaluate_bound(std::string_view id, const InvariantSet& g, const InvariantSet* complement, double tol) {
    return evaluate_bound(Catalog::standard().at(id), g, complement, tol);
}

std::pair<InvariantSet, InvariantSet> collect_pair(const Graph& g, const InvariantOptions& options) {
    InvariantOptions single = options;
    single.complement_chromatic = false;
    auto inv = collect_invariants(g, single);
    auto inv_c = collect_invariants(g.complement(), single);
    inv.chi_complement = inv_c.chi;
    inv_c.chi_complement = inv.chi;
    return {std::move(inv), std::move(inv_c)};
}

std::vector<BoundCheck> check_graph(const Graph& g, std::span<const std::string> ids, const CheckOptions& options,
                                    const Catalog& catalog) {
    std::vector<const BoundSpec*> specs;
    for (const auto& e : catalog.entries())
        if (std::find(ids.begin(), ids.end(), e.id) != ids.end()) specs.push_back(&e);
    for (const auto& id : ids) catalog.at(id);

    const std::string g6 = safe_graph6(g);
    std::vector<BoundCheck> out;
    out.reserve(specs.size());

    auto failed_row = [&](const BoundSpec& spec, const std::string& what) {
        BoundCheck row;
        row.bound = spec.id;
        row.g6 = g6;
        row.status = spec.status;
        row.skipped = true;
        row.reason = "error: " + what;
        return row;
    };

    std::optional<std::pair<InvariantSet, InvariantSet>> inv;
    try {
        inv = collect_pair(g, options.invariants);
    } catch (const std::exception& e) {
        for (const auto* spec : specs) out.push_back(failed_row(*spec, e.what()));
        return out;
    }

    std::optional<std::pair<InvariantSet, InvariantSet>> refined;
    for (const auto* spec : specs) {
        try {
            BoundCheck row = evaluate_bound(*spec, inv->first, &inv->second, options.tol);
            if (row.violated() && options.reverify) {
                if (!refined) {
                    InvariantOptions precise = options.invariants;
                    precise.solver = Solver::refined;
                    refined = collect_pair(g, precise);
                }
                BoundCheck again = evaluate_bound(*spec, refined->first, &refined->second, options.tol);
                again.note = again.violated() ? "confirmed by extended precision solver"
                                              : "cleared by extended precision solver";
                row = std::move(again);
            }
            if (spec->id == "CONJ7_TF" && !row.skipped && !inv->first.connected) row.note = "disconnected";
            row.g6 = g6;
            out.push_back(std::move(row));
        } catch (const std::exception& e) {
            out.push_back(failed_row(*spec, e.what()));
        }
    }
    return out;
}

} // namespace ngspec
