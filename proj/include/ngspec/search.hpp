#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ngspec/bounds.hpp"

namespace ngspec {

enum class ObjectiveKind {
    mu_ng_sum,         // mu(G) + mu(Gc)
    sqrt_splus_ng_sum, // sqrt(s+(G)) + sqrt(s+(Gc))
    splus_ng_sum,      // s+(G) + s+(Gc)
    neg_splus_ng_sum,  // -(s+(G) + s+(Gc))
    violation,         // -slack of a catalog bound, positive = violated
};

struct Objective {
    ObjectiveKind kind = ObjectiveKind::mu_ng_sum;
    std::string bound; // only for violation

    /// MU_NG_SUM, SQRT_SPLUS_NG_SUM, SPLUS_NG_SUM, NEG_SPLUS_NG_SUM or
    /// VIOLATION(<bound id>).
    static Objective parse(std::string_view text);
    std::string name() const;

    /// Pure function of the graph. Skipped bounds score -infinity.
    double operator()(const Graph& g) const;
};

enum class Neighbourhood { edge_toggle, edge_swap, double_toggle };

std::string_view neighbourhood_name(Neighbourhood k);

struct SearchConfig {
    int n = 0;
    std::uint64_t seed = 1;
    int restarts = 8;
    int steps = 200;
    std::vector<Neighbourhood> schedule{Neighbourhood::edge_toggle, Neighbourhood::edge_swap,
                                        Neighbourhood::double_toggle};
    int plateau_budget = 50;
    /// edge_swap and double_toggle are sampled; edge_toggle is always exhaustive.
    int sample_cap = 512;
    int jobs = 1;
};

struct TraceStep {
    int restart = 0;
    int step = 0;
    double value = 0.0;
    Neighbourhood move = Neighbourhood::edge_toggle;
};

struct SearchResult {
    std::string best_g6;
    double best_value = 0.0;
    std::string objective;
    std::vector<TraceStep> trace;
    std::uint64_t seed = 0;
    int restarts_used = 0;
    bool budget_exhausted = false; // some restart stopped on the step budget rather than a local optimum
    /// Accepted edge-swap moves, and how many of them lowered
    /// sqrt(s+(G)) + sqrt(s+(Gc)).
    int swap_moves = 0;
    int swap_moves_lowering_sqrt_splus = 0;
};

/// (alpha, value) maximising the objective over CS_{n,alpha}, 1 <= alpha <= n-1;
/// ties go to the smaller alpha.
std::pair<int, double> best_complete_split(const Objective& objective, int n);

/// Restarted hill climbing; half the restarts start from complete split
/// graphs, the rest from G(n, 1/2). Deterministic for a fixed config.
SearchResult optimize(const Objective& objective, const SearchConfig& config);

} // namespace ngspec
