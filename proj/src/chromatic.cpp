#include <array>
#include <string>

#include "ngspec/invariants.hpp"

namespace ngspec {

namespace {

class DsaturSearch {
public:
    explicit DsaturSearch(const Graph& g) : g_(g), n_(g.order()) { colour_.fill(-1); }

    std::vector<int> solve() {
        lower_ = greedy_clique();
        greedy_upper_bound();
        if (best_ > lower_) branch(0, 0);
        return {best_colouring_.begin(), best_colouring_.begin() + n_};
    }

private:
    // Largest clique found by growing greedily from each vertex in turn.
    int greedy_clique() const {
        int best = 1;
        for (int s = 0; s < n_; ++s) {
            std::uint64_t clique = std::uint64_t{1} << s, cand = g_.neighbors(s);
            while (cand) {
                int pick = -1, pick_deg = -1;
                for (auto c = cand; c; c &= c - 1) {
                    const int v = std::countr_zero(c);
                    const int d = std::popcount(g_.neighbors(v) & cand);
                    if (d > pick_deg) pick = v, pick_deg = d;
                }
                clique |= std::uint64_t{1} << pick;
                cand &= g_.neighbors(pick);
            }
            best = std::max(best, std::popcount(clique));
        }
        return best;
    }

    std::uint64_t neighbour_colours(int v) const {
        std::uint64_t used = 0;
        for (auto nb = g_.neighbors(v); nb; nb &= nb - 1) {
            const int c = colour_[std::countr_zero(nb)];
            if (c >= 0) used |= std::uint64_t{1} << c;
        }
        return used;
    }

    // Saturation, then degree, then lowest index.
    int select_vertex() const {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) continue;
            const int sat = std::popcount(neighbour_colours(v));
            const int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) pick = v, pick_sat = sat, pick_deg = deg;
        }
        return pick;
    }

    void greedy_upper_bound() {
        int used = 0;
        for (int step = 0; step < n_; ++step) {
            const int v = select_vertex();
            const int c = std::countr_zero(~neighbour_colours(v));
            colour_[v] = c;
            used = std::max(used, c + 1);
        }
        best_ = used;
        best_colouring_ = colour_;
        colour_.fill(-1);
    }

    void branch(int coloured, int used) {
        if (best_ == lower_) return;
        if (coloured == n_) {
            best_ = used;
            best_colouring_ = colour_;
            return;
        }
        const int v = select_vertex();
        const auto forbidden = neighbour_colours(v);
        for (int c = 0; c < used && used < best_; ++c) {
            if (forbidden & (std::uint64_t{1} << c)) continue;
            colour_[v] = c;
            branch(coloured + 1, used);
            colour_[v] = -1;
            if (best_ == lower_) return;
        }
        if (used + 1 < best_) {
            colour_[v] = used;
            branch(coloured + 1, used + 1);
            colour_[v] = -1;
        }
    }

    const Graph& g_;
    int n_;
    std::array<int, Graph::kMaxVertices> colour_{};
    std::array<int, Graph::kMaxVertices> best_colouring_{};
    int lower_ = 1;
    int best_ = 0;
};

} // namespace

std::vector<int> optimal_colouring(const Graph& g, int cap) {
    if (g.order() > cap)
        throw ChromaticCapExceeded("exact chromatic number capped: n=" + std::to_string(g.order()) +
                                   " exceeds cap " + std::to_string(cap));
    return DsaturSearch(g).solve();
}

int chromatic_number(const Graph& g, int cap) {
    int k = 0;
    for (int c : optimal_colouring(g, cap)) k = std::max(k, c + 1);
    return k;
}

} // namespace ngspec
