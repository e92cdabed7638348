#include "ngspec/spectrum.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace ngspec {

namespace {

using AdjacencyMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, Graph::kMaxVertices, Graph::kMaxVertices>;

std::vector<double> qr_eigenvalues(const Graph& g) {
    const int n = g.order();
    AdjacencyMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = g.has_edge(i, j) ? 1.0 : 0.0;
    Eigen::SelfAdjointEigenSolver<AdjacencyMatrix> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw SpectralError("eigensolver failed to converge on " + to_graph6(g));
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + n};
}

// Cyclic Jacobi rotations in long double until the off-diagonal mass is
// negligible.
std::vector<double> jacobi_eigenvalues(const Graph& g) {
    const int n = g.order();
    std::vector<long double> a(static_cast<std::size_t>(n) * n);
    auto at = [&](int i, int j) -> long double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(i, j) = g.has_edge(i, j) ? 1.0L : 0.0L;

    for (int sweep = 0; sweep < 100; ++sweep) {
        long double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-36L) {
            std::vector<double> ev(n);
            for (int i = 0; i < n; ++i) ev[i] = static_cast<double>(at(i, i));
            return ev;
        }
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const long double apq = at(p, q);
                if (apq == 0.0L) continue;
                const long double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const long double t = (theta >= 0 ? 1.0L : -1.0L) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const long double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    const long double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const long double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    throw SpectralError("Jacobi iteration failed to converge on " + to_graph6(g));
}

} // namespace

double default_zero_tolerance(const Graph& g) { return 1e-8 * std::max(1, g.max_degree()); }

std::vector<double> adjacency_eigenvalues(const Graph& g, Solver solver) {
    auto ev = solver == Solver::standard ? qr_eigenvalues(g) : jacobi_eigenvalues(g);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

Inertia sign_counts(std::span<const double> eigenvalues, double tol) {
    Inertia in;
    for (double x : eigenvalues) {
        if (x > tol)
            ++in.positive;
        else if (x < -tol)
            ++in.negative;
        else
            ++in.zero;
    }
    return in;
}

Spectrum eigen_decompose(const Graph& g, Solver solver) {
    return eigen_decompose(g, default_zero_tolerance(g), solver);
}

Spectrum eigen_decompose(const Graph& g, double tol, Solver solver) {
    Spectrum s;
    s.eigenvalues = adjacency_eigenvalues(g, solver);
    s.zero_tolerance = tol;
    s.inertia = sign_counts(s.eigenvalues, tol);
    const Inertia exact = exact_inertia(g);
    if (s.inertia == exact) return s;

    // The exact triple fixes which sorted positions are positive, zero and
    // negative; every eigenvalue that changes class must sit near zero.
    const int n = g.order();
    for (int i = 0; i < n; ++i) {
        const double x = s.eigenvalues[i];
        const int want = i < exact.positive ? 1 : (i >= n - exact.negative ? -1 : 0);
        const int have = x > tol ? 1 : (x < -tol ? -1 : 0);
        if (want != have && std::fabs(x) > 10 * tol)
            throw SpectralError("eigenvalue " + std::to_string(x) + " contradicts exact inertia on " + to_graph6(g));
    }
    s.inertia = exact;
    return s;
}

SpectralSums spectral_sums(const Spectrum& spec, int m) {
    const auto& ev = spec.eigenvalues;
    const int n = static_cast<int>(ev.size());
    SpectralSums out;
    for (int i = 0; i < spec.inertia.positive; ++i) out.s_plus += ev[i] * ev[i];
    for (int i = n - spec.inertia.negative; i < n; ++i) out.s_minus += ev[i] * ev[i];
    for (double x : ev) out.energy += std::fabs(x);
    out.mu_max = ev.front();
    out.mu_min = ev.back();
    const double residual = out.s_plus + out.s_minus - 2.0 * m;
    if (std::fabs(residual) > 1e-8 * n * n)
        throw SpectralError("s+ + s- differs from 2m by " + std::to_string(residual) +
                            "; zero tolerance " + std::to_string(spec.zero_tolerance) + " is mis-set");
    return out;
}

ConferenceForms conference_closed_form(int n) {
    if (n < 5 || n % 4 != 1) throw SpectralError("conference graphs need n = 4t+1 >= 5, got " + std::to_string(n));
    const double r = std::sqrt(static_cast<double>(n));
    const double k = n - 1.0;
    ConferenceForms f;
    f.s_plus_each = k * k / 4.0 + k * (n + 1.0 - 2.0 * r) / 8.0;
    f.pair_sum = k * (3.0 * n - 1.0 - 2.0 * r) / 4.0;
    f.energy_pair = k * (1.0 + r);
    return f;
}

} // namespace ngspec
