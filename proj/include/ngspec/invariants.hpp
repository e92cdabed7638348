#pragma once

#include <optional>
#include <stdexcept>

#include "ngspec/graph.hpp"
#include "ngspec/spectrum.hpp"
#include "ngspec/structure.hpp"

namespace ngspec {

inline constexpr int kDefaultChromaticCap = 16;

class ChromaticCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sum over edges ij of 1/sqrt(d_i d_j). Isolated vertices contribute nothing.
double randic_index(const Graph& g);

/// Exact chromatic number by DSATUR branch and bound.
///
/// Branching picks the uncoloured vertex of highest saturation, then highest
/// degree, then lowest index; a greedy clique gives the lower bound and a
/// DSATUR colouring the initial upper bound. Throws ChromaticCapExceeded
/// when n > cap.
int chromatic_number(const Graph& g, int cap = kDefaultChromaticCap);

/// A proper colouring using chromatic_number(g) colours (colour per vertex).
std::vector<int> optimal_colouring(const Graph& g, int cap = kDefaultChromaticCap);

struct InvariantOptions {
    int chromatic_cap = kDefaultChromaticCap;
    std::optional<double> zero_tolerance; // default_zero_tolerance(g) when unset
    Solver solver = Solver::standard;
    bool complement_chromatic = true;     // also compute chi of the complement
};

struct InvariantSet {
    int n = 0;
    int m = 0;
    double s_plus = 0.0;
    double s_minus = 0.0;
    double energy = 0.0;
    double mu_max = 0.0;
    double mu_min = 0.0;
    double randic = 0.0;
    Inertia inertia;
    std::optional<int> chi;            // absent when n exceeds the chromatic cap
    std::optional<int> chi_complement; // absent when capped or not requested
    bool connected = false;
    bool triangle_free = false;
    bool bipartite = false;
    StructureTags tags;
};

InvariantSet collect_invariants(const Graph& g, const InvariantOptions& options = {});

} // namespace ngspec
