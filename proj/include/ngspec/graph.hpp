#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ngspec {

/// Raised for any malformed input to a graph operation (bad graph6 text,
/// invalid family parameters, out of range vertex counts).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on 1..64 vertices.
///
/// Adjacency is held as one 64-bit neighbourhood mask per vertex. The
/// canonical edge order used by graph6 and by labeled enumeration is the
/// column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ... so that
/// pair (i, j) with i < j has index j(j-1)/2 + i.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    explicit Graph(int n);

    /// Builds a graph on n <= 11 vertices from a packed triangle word; bit p
    /// corresponds to pair index p in the canonical edge order.
    static Graph from_triangle_bits(int n, std::uint64_t bits);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const noexcept { return n_; }
    int edge_count() const noexcept;

    bool has_edge(int i, int j) const noexcept { return (rows_[i] >> j) & 1u; }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);
    void toggle_edge(int i, int j);

    std::uint64_t neighbors(int v) const noexcept { return rows_[v]; }
    int degree(int v) const noexcept { return std::popcount(rows_[v]); }
    int max_degree() const noexcept;
    std::vector<int> degrees() const;

    /// Mask with the low n bits set.
    std::uint64_t vertex_mask() const noexcept {
        return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    }

    Graph complement() const;

    /// Graph with vertex v removed; remaining vertices keep their relative order.
    Graph without_vertex(int v) const;

    /// Relabels vertices: vertex v of this graph becomes perm[v].
    Graph permuted(const std::vector<int>& perm) const;

    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.rows_[v] != b.rows_[v]) return false;
        return true;
    }

private:
    void check_pair(int i, int j) const;

    int n_;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

constexpr std::uint64_t pair_count(int n) noexcept {
    return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
}

/// Decodes one graph6 line (no header, optional trailing newline / CR).
Graph parse_graph6(std::string_view text);

/// Encodes a graph in graph6 (short form, n <= 62).
std::string to_graph6(const Graph& g);

inline Graph complement(const Graph& g) { return g.complement(); }

} // namespace ngspec
