#include "ngspec/search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <thread>

#include "ngspec/families.hpp"

namespace ngspec {

namespace {

constexpr double kImprovement = 1e-10;

double sqrt_splus(const Graph& g) {
    const auto spec = eigen_decompose(g);
    return std::sqrt(spectral_sums(spec, g.edge_count()).s_plus);
}

double splus(const Graph& g) { return spectral_sums(eigen_decompose(g), g.edge_count()).s_plus; }

double violation_score(const std::string& id, const Graph& g) {
    const auto& spec = Catalog::standard().at(id);
    InvariantOptions opts;
    if (!spec.needs_chi) opts.chromatic_cap = 0;
    const auto [inv, inv_c] = collect_pair(g, opts);
    const auto check = evaluate_bound(spec, inv, &inv_c);
    if (check.skipped) return -std::numeric_limits<double>::infinity();
    return -check.slack;
}

struct Move {
    Neighbourhood kind;
    std::pair<int, int> first;
    std::pair<int, int> second;
};

Graph apply(const Graph& g, const Move& mv) {
    Graph h = g;
    h.toggle_edge(mv.first.first, mv.first.second);
    if (mv.kind != Neighbourhood::edge_toggle) h.toggle_edge(mv.second.first, mv.second.second);
    return h;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> p;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) p.emplace_back(i, j);
    return p;
}

class RestartRunner {
public:
    RestartRunner(const Objective& obj, const SearchConfig& cfg, int restart, double seed_value, const Graph& seed_graph)
        : obj_(obj), cfg_(cfg), restart_(restart), pairs_(all_pairs(cfg.n)), current_(seed_graph), value_(seed_value) {}

    struct Outcome {
        Graph best;
        double value;
        std::vector<TraceStep> trace;
        bool exhausted = false;
        int swap_moves = 0;
        int swap_lowering = 0;
    };

    Outcome run(std::mt19937_64& rng) {
        Outcome out{current_, value_, {}, false, 0, 0};
        std::deque<std::string> recent;
        int plateau = 0;
        int step = 0;
        for (; step < cfg_.steps; ++step) {
            std::optional<std::pair<Move, Graph>> sideways;
            std::optional<std::pair<Move, Graph>> improving;
            double improved_value = value_;
            for (auto kind : cfg_.schedule) {
                for (const auto& mv : moves(kind, rng)) {
                    Graph cand = apply(current_, mv);
                    const double v = obj_(cand);
                    if (v > value_ + kImprovement) {
                        improving.emplace(mv, std::move(cand));
                        improved_value = v;
                        break;
                    }
                    if (!sideways && std::fabs(v - value_) <= kImprovement &&
                        std::find(recent.begin(), recent.end(), to_graph6(cand)) == recent.end())
                        sideways.emplace(mv, std::move(cand));
                }
                if (improving) break;
            }

            const std::pair<Move, Graph>* taken = nullptr;
            if (improving) {
                taken = &*improving;
                plateau = 0;
            } else if (sideways && plateau < cfg_.plateau_budget) {
                taken = &*sideways;
                ++plateau;
            } else {
                break;
            }

            if (taken->first.kind == Neighbourhood::edge_swap) {
                ++out.swap_moves;
                if (sqrt_splus_pair(taken->second) < sqrt_splus_pair(current_) - kImprovement) ++out.swap_lowering;
            }
            recent.push_back(to_graph6(current_));
            if (static_cast<int>(recent.size()) > cfg_.plateau_budget) recent.pop_front();
            current_ = taken->second;
            if (improving) {
                value_ = improved_value;
                out.trace.push_back({restart_, step, value_, taken->first.kind});
                if (value_ > out.value) {
                    out.value = value_;
                    out.best = current_;
                }
            }
        }
        out.exhausted = step == cfg_.steps;
        return out;
    }

private:
    static double sqrt_splus_pair(const Graph& g) { return sqrt_splus(g) + sqrt_splus(g.complement()); }

    std::vector<Move> moves(Neighbourhood kind, std::mt19937_64& rng) const {
        std::vector<Move> out;
        const auto cap = static_cast<std::size_t>(cfg_.sample_cap);
        switch (kind) {
        case Neighbourhood::edge_toggle:
            for (const auto& p : pairs_) out.push_back({kind, p, {}});
            break;
        case Neighbourhood::edge_swap: {
            std::vector<std::pair<int, int>> on, off;
            for (const auto& p : pairs_) (current_.has_edge(p.first, p.second) ? on : off).push_back(p);
            if (on.empty() || off.empty()) break;
            if (on.size() * off.size() <= cap) {
                for (const auto& a : on)
                    for (const auto& b : off) out.push_back({kind, a, b});
            } else {
                std::uniform_int_distribution<std::size_t> pick_on(0, on.size() - 1), pick_off(0, off.size() - 1);
                for (std::size_t k = 0; k < cap; ++k) out.push_back({kind, on[pick_on(rng)], off[pick_off(rng)]});
            }
            break;
        }
        case Neighbourhood::double_toggle: {
            const std::size_t np = pairs_.size();
            if (np < 2) break;
            if (np * (np - 1) / 2 <= cap) {
                for (std::size_t a = 0; a < np; ++a)
                    for (std::size_t b = a + 1; b < np; ++b) out.push_back({kind, pairs_[a], pairs_[b]});
            } else {
                std::uniform_int_distribution<std::size_t> pick(0, np - 1);
                while (out.size() < cap) {
                    const auto a = pick(rng), b = pick(rng);
                    if (a != b) out.push_back({kind, pairs_[a], pairs_[b]});
                }
            }
            break;
        }
        }
        std::shuffle(out.begin(), out.end(), rng);
        return out;
    }

    const Objective& obj_;
    const SearchConfig& cfg_;
    int restart_;
    std::vector<std::pair<int, int>> pairs_;
    Graph current_;
    double value_;
};

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

} // namespace

Objective Objective::parse(std::string_view text) {
    if (text == "MU_NG_SUM") return {ObjectiveKind::mu_ng_sum, {}};
    if (text == "SQRT_SPLUS_NG_SUM") return {ObjectiveKind::sqrt_splus_ng_sum, {}};
    if (text == "SPLUS_NG_SUM") return {ObjectiveKind::splus_ng_sum, {}};
    if (text == "NEG_SPLUS_NG_SUM") return {ObjectiveKind::neg_splus_ng_sum, {}};
    constexpr std::string_view prefix = "VIOLATION(";
    if (text.starts_with(prefix) && text.ends_with(")")) {
        std::string id(text.substr(prefix.size(), text.size() - prefix.size() - 1));
        Catalog::standard().at(id);
        return {ObjectiveKind::violation, id};
    }
    throw BoundError("unknown objective '" + std::string(text) + "'");
}

std::string Objective::name() const {
    switch (kind) {
    case ObjectiveKind::mu_ng_sum: return "MU_NG_SUM";
    case ObjectiveKind::sqrt_splus_ng_sum: return "SQRT_SPLUS_NG_SUM";
    case ObjectiveKind::splus_ng_sum: return "SPLUS_NG_SUM";
    case ObjectiveKind::neg_splus_ng_sum: return "NEG_SPLUS_NG_SUM";
    case ObjectiveKind::violation: return "VIOLATION(" + bound + ")";
    }
    return "unknown";
}

double Objective::operator()(const Graph& g) const {
    switch (kind) {
    case ObjectiveKind::mu_ng_sum:
        return adjacency_eigenvalues(g).front() + adjacency_eigenvalues(g.complement()).front();
    case ObjectiveKind::sqrt_splus_ng_sum: return sqrt_splus(g) + sqrt_splus(g.complement());
    case ObjectiveKind::splus_ng_sum: return splus(g) + splus(g.complement());
    case ObjectiveKind::neg_splus_ng_sum: return -(splus(g) + splus(g.complement()));
    case ObjectiveKind::violation: return violation_score(bound, g);
    }
    return 0.0;
}

std::string_view neighbourhood_name(Neighbourhood k) {
    switch (k) {
    case Neighbourhood::edge_toggle: return "edge-toggle";
    case Neighbourhood::edge_swap: return "edge-swap";
    case Neighbourhood::double_toggle: return "double-toggle";
    }
    return "unknown";
}

std::pair<int, double> best_complete_split(const Objective& objective, int n) {
    if (n < 3) throw GraphError("best_complete_split needs n >= 3");
    int best_alpha = 1;
    double best = -std::numeric_limits<double>::infinity();
    for (int alpha = 1; alpha <= n - 1; ++alpha) {
        const double v = objective(make_family({FamilyKind::complete_split, {n, alpha}}));
        if (v > best) {
            best = v;
            best_alpha = alpha;
        }
    }
    return {best_alpha, best};
}

SearchResult optimize(const Objective& objective, const SearchConfig& cfg) {
    if (cfg.n < 4 || cfg.n > 62) throw GraphError("search needs 4 <= n <= 62");
    if (cfg.restarts < 1 || cfg.steps < 1 || cfg.plateau_budget < 0 || cfg.sample_cap < 1 || cfg.schedule.empty())
        throw GraphError("search budgets must be positive");

    const auto [best_alpha, _] = best_complete_split(objective, cfg.n);
    const int split_restarts = (cfg.restarts + 1) / 2;

    std::vector<RestartRunner::Outcome> outcomes(cfg.restarts, RestartRunner::Outcome{Graph(cfg.n), 0.0, {}, false, 0, 0});
    auto run_restart = [&](int r) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        Graph start(cfg.n);
        if (r == 0) {
            start = make_family({FamilyKind::complete_split, {cfg.n, best_alpha}});
        } else if (r < split_restarts) {
            std::uniform_int_distribution<int> alpha(1, cfg.n - 1);
            start = make_family({FamilyKind::complete_split, {cfg.n, alpha(rng)}});
            if (std::bernoulli_distribution(0.5)(rng)) start = start.complement();
        } else {
            start = random_graph(cfg.n, rng);
        }
        RestartRunner runner(objective, cfg, r, objective(start), start);
        outcomes[r] = runner.run(rng);
    };

    const int jobs = std::max(1, std::min(cfg.jobs, cfg.restarts));
    if (jobs == 1) {
        for (int r = 0; r < cfg.restarts; ++r) run_restart(r);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (int r = t; r < cfg.restarts; r += jobs) run_restart(r);
            });
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    res.objective = objective.name();
    res.seed = cfg.seed;
    res.restarts_used = cfg.restarts;
    res.best_value = -std::numeric_limits<double>::infinity();
    for (const auto& o : outcomes) {
        const auto g6 = to_graph6(o.best);
        if (o.value > res.best_value || (o.value == res.best_value && g6 < res.best_g6)) {
            res.best_value = o.value;
            res.best_g6 = g6;
        }
        res.trace.insert(res.trace.end(), o.trace.begin(), o.trace.end());
        res.budget_exhausted = res.budget_exhausted || o.exhausted;
        res.swap_moves += o.swap_moves;
        res.swap_moves_lowering_sqrt_splus += o.swap_lowering;
    }
    return res;
}

} // namespace ngspec
