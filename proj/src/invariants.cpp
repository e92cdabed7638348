#include "ngspec/invariants.hpp"

#include <cmath>

namespace ngspec {

double randic_index(const Graph& g) {
    double r = 0.0;
    for (auto [i, j] : g.edges()) r += 1.0 / std::sqrt(static_cast<double>(g.degree(i)) * g.degree(j));
    return r;
}

namespace {

std::optional<int> capped_chromatic(const Graph& g, int cap) {
    if (g.order() > cap) return std::nullopt;
    return chromatic_number(g, cap);
}

} // namespace

InvariantSet collect_invariants(const Graph& g, const InvariantOptions& options) {
    InvariantSet inv;
    inv.n = g.order();
    inv.m = g.edge_count();

    const double tol = options.zero_tolerance.value_or(default_zero_tolerance(g));
    const Spectrum spec = eigen_decompose(g, tol, options.solver);
    const SpectralSums sums = spectral_sums(spec, inv.m);
    inv.s_plus = sums.s_plus;
    inv.s_minus = sums.s_minus;
    inv.energy = sums.energy;
    inv.mu_max = sums.mu_max;
    inv.mu_min = sums.mu_min;
    inv.inertia = spec.inertia;

    inv.randic = randic_index(g);
    inv.chi = capped_chromatic(g, options.chromatic_cap);
    if (options.complement_chromatic) inv.chi_complement = capped_chromatic(g.complement(), options.chromatic_cap);

    inv.connected = is_connected(g);
    inv.triangle_free = is_triangle_free(g);
    inv.bipartite = bipartition(g).has_value();
    inv.tags = classify_structure(g);
    return inv;
}

} // namespace ngspec
