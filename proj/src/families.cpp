#include "ngspec/families.hpp"

#include <array>
#include <numeric>
#include <utility>

namespace ngspec {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 10> kNames{{
    {FamilyKind::complete, "complete"},
    {FamilyKind::empty, "empty"},
    {FamilyKind::path, "path"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::complete_bipartite, "complete_bipartite"},
    {FamilyKind::complete_split, "complete_split"},
    {FamilyKind::complete_multipartite, "complete_multipartite"},
    {FamilyKind::paley, "paley"},
    {FamilyKind::star, "star"},
    {FamilyKind::join_clique_empty, "join_clique_empty"},
}};

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError("invalid family: " + what);
}

void require_arity(const FamilySpec& spec, std::size_t k) {
    require(spec.params.size() == k,
            std::string(family_name(spec.kind)) + " takes " + std::to_string(k) + " parameter(s)");
    for (int p : spec.params) require(p > 0, "parameters must be positive");
}

// Parts are laid out consecutively; vertices in different parts are adjacent.
Graph multipartite(const std::vector<int>& parts) {
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    Graph g(n);
    std::vector<int> part_of;
    for (std::size_t k = 0; k < parts.size(); ++k) part_of.insert(part_of.end(), parts[k], static_cast<int>(k));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) g.add_edge(i, j);
    return g;
}

// Vertices 0..clique-1 form a clique, the rest an independent set, all cross
// pairs adjacent.
Graph clique_join_independent(int clique, int independent) {
    const int n = clique + independent;
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (i < clique) g.add_edge(i, j);
    return g;
}

} // namespace

std::string_view family_name(FamilyKind kind) {
    for (auto [k, name] : kNames)
        if (k == kind) return name;
    return "unknown";
}

FamilyKind family_from_name(std::string_view name) {
    for (auto [k, n] : kNames)
        if (n == name) return k;
    throw GraphError("unknown family '" + std::string(name) + "'");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Graph make_family(const FamilySpec& spec) {
    const auto& a = spec.params;
    switch (spec.kind) {
    case FamilyKind::complete: {
        require_arity(spec, 1);
        return clique_join_independent(a[0], 0);
    }
    case FamilyKind::empty:
        require_arity(spec, 1);
        return Graph(a[0]);
    case FamilyKind::path: {
        require_arity(spec, 1);
        Graph g(a[0]);
        for (int v = 0; v + 1 < a[0]; ++v) g.add_edge(v, v + 1);
        return g;
    }
    case FamilyKind::cycle: {
        require_arity(spec, 1);
        require(a[0] >= 3, "cycle needs n >= 3");
        Graph g(a[0]);
        for (int v = 0; v < a[0]; ++v) g.add_edge(v, (v + 1) % a[0]);
        return g;
    }
    case FamilyKind::complete_bipartite:
        require_arity(spec, 2);
        return multipartite({a[0], a[1]});
    case FamilyKind::complete_split:
        require_arity(spec, 2);
        require(a[1] <= a[0] - 1, "complete_split needs 1 <= alpha <= n-1");
        return clique_join_independent(a[0] - a[1], a[1]);
    case FamilyKind::complete_multipartite:
        require(!a.empty(), "complete_multipartite needs at least one part");
        for (int p : a) require(p > 0, "zero or negative part size");
        return multipartite(a);
    case FamilyKind::paley: {
        require_arity(spec, 1);
        const int p = a[0];
        require(is_prime(p) && p % 4 == 1, "paley(p) needs a prime p = 1 (mod 4)");
        std::vector<bool> residue(p, false);
        for (int x = 1; x < p; ++x) residue[static_cast<long long>(x) * x % p] = true;
        Graph g(p);
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (residue[(j - i) % p]) g.add_edge(i, j);
        return g;
    }
    case FamilyKind::star:
        require_arity(spec, 1);
        require(a[0] >= 2, "star needs n >= 2");
        return multipartite({1, a[0] - 1});
    case FamilyKind::join_clique_empty:
        require_arity(spec, 2);
        return clique_join_independent(a[0], a[1]);
    }
    throw GraphError("unhandled family kind");
}

} // namespace ngspec
