#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ngspec/graph.hpp"

namespace ngspec {

struct BasicProps {
    int m = 0;
    std::vector<int> degrees;
    bool connected = false;
    bool triangle_free = false;
    bool bipartite = false;
};

BasicProps basic_props(const Graph& g);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Two-colours the graph by BFS; returns the colour-0 class, or nothing when an
/// odd cycle exists.
std::optional<std::uint64_t> bipartition(const Graph& g);

enum class StructureTag : std::uint8_t {
    complete_bipartite = 1u << 0,
    complete_multipartite = 1u << 1,
    complete_split = 1u << 2,
    regular = 1u << 3,
    semiregular_bipartite = 1u << 4,
    conference_srg = 1u << 5,
};

class StructureTags {
public:
    constexpr StructureTags() = default;
    constexpr explicit StructureTags(std::uint8_t bits) : bits_(bits) {}

    constexpr bool has(StructureTag t) const { return bits_ & static_cast<std::uint8_t>(t); }
    constexpr void set(StructureTag t) { bits_ |= static_cast<std::uint8_t>(t); }
    constexpr std::uint8_t bits() const { return bits_; }
    std::vector<std::string> names() const;

    friend constexpr bool operator==(StructureTags, StructureTags) = default;

private:
    std::uint8_t bits_ = 0;
};

/// Structural tags used by the equality characterisations.
///
///  - complete_multipartite: non-adjacency is an equivalence relation.
///  - complete_split: the complement is one clique plus isolated vertices and
///    G itself has an edge (CS_{n,a}, 1 <= a <= n-1; K_n = CS_{n,1}).
///  - complete_bipartite: connected, bipartite, every cross pair adjacent.
///  - semiregular_bipartite: connected, bipartite, constant degree on each side.
///  - conference_srg: strongly regular with parameters (4t+1, 2t, t-1, t), t >= 1.
StructureTags classify_structure(const Graph& g);

} // namespace ngspec
