#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "ngspec/graph.hpp"

namespace ngspec {

class SpectralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct Spectrum {
    std::vector<double> eigenvalues; // descending
    Inertia inertia;                 // reconciled against exact_inertia
    double zero_tolerance = 0.0;
};

enum class Solver {
    standard, // Householder tridiagonalisation + implicit-shift QR, double
    refined,  // cyclic Jacobi in extended precision; used to re-verify violations
};

/// 1e-8 * max(1, maximum degree).
double default_zero_tolerance(const Graph& g);

/// Adjacency eigenvalues with an inertia triple that always matches
/// exact_inertia. When plain sign counts at `tol` disagree, eigenvalues within
/// 10*tol of zero are reclassified; anything further out is reported as an
/// internal inconsistency.
Spectrum eigen_decompose(const Graph& g, double tol, Solver solver = Solver::standard);
Spectrum eigen_decompose(const Graph& g, Solver solver = Solver::standard);

/// Adjacency eigenvalues only, descending, with no inertia bookkeeping.
std::vector<double> adjacency_eigenvalues(const Graph& g, Solver solver = Solver::standard);

Inertia sign_counts(std::span<const double> eigenvalues, double tol);

/// Exact inertia by symmetric congruence over the rationals (Sylvester's law).
/// Runs in 64-bit rationals and falls back to GMP on overflow.
Inertia exact_inertia(const Graph& g);

namespace detail {
Inertia exact_inertia_gmp(const Graph& g);
}

struct SpectralSums {
    double s_plus = 0.0;
    double s_minus = 0.0;
    double energy = 0.0;
    double mu_max = 0.0;
    double mu_min = 0.0;
};

/// s+ / s- from the leading positive and trailing negative eigenvalues.
/// Throws SpectralError when s+ + s- misses 2m by more than 1e-8 n^2, which
/// means the zero tolerance misclassified an eigenvalue.
SpectralSums spectral_sums(const Spectrum& spec, int m);

struct ConferenceForms {
    double s_plus_each = 0.0; // s+(G) = s+(complement)
    double pair_sum = 0.0;    // s+(G) + s+(complement)
    double energy_pair = 0.0; // E(G) + E(complement)
};

/// Closed forms for a conference graph on n = 4t + 1 vertices.
ConferenceForms conference_closed_form(int n);

} // namespace ngspec
