#include "ngspec/structure.hpp"

#include <algorithm>
#include <array>

namespace ngspec {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

bool is_regular(const Graph& g) {
    const int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

// Non-adjacency (with reflexivity) is an equivalence relation iff every
// closed non-neighbourhood of a vertex is the same set for all its members.
bool is_complete_multipartite(const Graph& g) {
    const auto all = g.vertex_mask();
    for (int v = 0; v < g.order(); ++v) {
        const auto cls = ~g.neighbors(v) & all;
        for (auto rest = cls; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if ((~g.neighbors(u) & all) != cls) return false;
        }
    }
    return true;
}

bool is_complete_split(const Graph& g) {
    if (g.edge_count() == 0) return false;
    const Graph c = g.complement();
    std::uint64_t core = 0;
    for (int v = 0; v < c.order(); ++v)
        if (c.degree(v) > 0) core |= bit(v);
    // Non-isolated vertices of the complement must form a clique there.
    for (auto rest = core; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if ((c.neighbors(v) | bit(v)) != core) return false;
    }
    return true;
}

bool is_conference_srg(const Graph& g) {
    const int n = g.order();
    if (n < 5 || n % 4 != 1 || !is_regular(g)) return false;
    const int t = (n - 1) / 4;
    if (g.degree(0) != 2 * t) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int common = std::popcount(g.neighbors(i) & g.neighbors(j));
            if (common != (g.has_edge(i, j) ? t - 1 : t)) return false;
        }
    return true;
}

} // namespace

bool is_connected(const Graph& g) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (auto f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

bool is_triangle_free(const Graph& g) {
    for (int i = 0; i < g.order(); ++i) {
        const auto ni = g.neighbors(i);
        for (auto higher = ni & ~((bit(i) << 1) - 1); higher; higher &= higher - 1)
            if (ni & g.neighbors(std::countr_zero(higher))) return false;
    }
    return true;
}

std::optional<std::uint64_t> bipartition(const Graph& g) {
    const int n = g.order();
    std::array<int, Graph::kMaxVertices> colour;
    colour.fill(-1);
    std::array<int, Graph::kMaxVertices> queue{};
    std::uint64_t side0 = 0;
    for (int root = 0; root < n; ++root) {
        if (colour[root] >= 0) continue;
        colour[root] = 0;
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            const int u = queue[head++];
            if (colour[u] == 0) side0 |= bit(u);
            for (auto nb = g.neighbors(u); nb; nb &= nb - 1) {
                const int w = std::countr_zero(nb);
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    queue[tail++] = w;
                } else if (colour[w] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side0;
}

BasicProps basic_props(const Graph& g) {
    BasicProps p;
    p.m = g.edge_count();
    p.degrees = g.degrees();
    p.connected = is_connected(g);
    p.triangle_free = is_triangle_free(g);
    p.bipartite = bipartition(g).has_value();
    return p;
}

StructureTags classify_structure(const Graph& g) {
    StructureTags tags;
    if (is_regular(g)) tags.set(StructureTag::regular);
    if (is_complete_multipartite(g)) tags.set(StructureTag::complete_multipartite);
    if (is_complete_split(g)) tags.set(StructureTag::complete_split);
    if (is_conference_srg(g)) tags.set(StructureTag::conference_srg);

    if (g.order() >= 2 && is_connected(g)) {
        if (auto side = bipartition(g)) {
            const auto a = *side;
            const auto b = g.vertex_mask() & ~a;
            const int na = std::popcount(a), nb = std::popcount(b);
            if (g.edge_count() == na * nb) tags.set(StructureTag::complete_bipartite);
            const int da = g.degree(std::countr_zero(a)), db = g.degree(std::countr_zero(b));
            bool semiregular = true;
            for (int v = 0; v < g.order() && semiregular; ++v)
                semiregular = g.degree(v) == ((a & bit(v)) ? da : db);
            if (semiregular) tags.set(StructureTag::semiregular_bipartite);
        }
    }
    return tags;
}

std::vector<std::string> StructureTags::names() const {
    static constexpr std::pair<StructureTag, const char*> kAll[] = {
        {StructureTag::complete_bipartite, "complete_bipartite"},
        {StructureTag::complete_multipartite, "complete_multipartite"},
        {StructureTag::complete_split, "complete_split"},
        {StructureTag::regular, "regular"},
        {StructureTag::semiregular_bipartite, "semiregular_bipartite"},
        {StructureTag::conference_srg, "conference_srg"},
    };
    std::vector<std::string> out;
    for (auto [t, name] : kAll)
        if (has(t)) out.emplace_back(name);
    return out;
}

} // namespace ngspec
