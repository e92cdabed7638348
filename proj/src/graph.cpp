#include "ngspec/graph.hpp"

#include <numeric>

namespace ngspec {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside 1..64");
}

Graph Graph::from_triangle_bits(int n, std::uint64_t bits) {
    if (pair_count(n) > 64)
        throw GraphError("triangle word only covers n <= 11");
    Graph g(n);
    int p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if ((bits >> p) & 1u) {
                g.rows_[i] |= std::uint64_t{1} << j;
                g.rows_[j] |= std::uint64_t{1} << i;
            }
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

void Graph::check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw GraphError("invalid vertex pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

void Graph::add_edge(int i, int j) {
    check_pair(i, j);
    rows_[i] |= std::uint64_t{1} << j;
    rows_[j] |= std::uint64_t{1} << i;
}

void Graph::remove_edge(int i, int j) {
    check_pair(i, j);
    rows_[i] &= ~(std::uint64_t{1} << j);
    rows_[j] &= ~(std::uint64_t{1} << i);
}

void Graph::toggle_edge(int i, int j) {
    check_pair(i, j);
    rows_[i] ^= std::uint64_t{1} << j;
    rows_[j] ^= std::uint64_t{1} << i;
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
}

int Graph::max_degree() const noexcept {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

Graph Graph::complement() const {
    Graph c(n_);
    const auto all = vertex_mask();
    for (int v = 0; v < n_; ++v)
        c.rows_[v] = ~rows_[v] & all & ~(std::uint64_t{1} << v);
    return c;
}

Graph Graph::without_vertex(int v) const {
    if (n_ < 2) throw GraphError("cannot delete the only vertex");
    if (v < 0 || v >= n_) throw GraphError("vertex out of range");
    Graph h(n_ - 1);
    const std::uint64_t low = (std::uint64_t{1} << v) - 1;
    int k = 0;
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        const auto r = rows_[u];
        h.rows_[k++] = (r & low) | ((r >> 1) & ~low);
    }
    return h;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
    Graph h(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) h.add_edge(perm[i], perm[j]);
    return h;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

// graph6: byte 0 = n + 63, then the column-major upper triangle packed six
// bits per byte, most significant bit first, each byte offset by 63.

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw GraphError("graph6: empty line");
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (c < 63 || c > 126) throw GraphError("graph6: malformed character in '" + std::string(text) + "'");
    }
    if (text[0] == '~') throw GraphError("graph6: long-form header (n > 62) not supported");
    const int n = text[0] - 63;
    if (n < 1) throw GraphError("graph6: graphs need at least one vertex");
    const auto bits = pair_count(n);
    const auto need = (bits + 5) / 6;
    if (text.size() - 1 < need) throw GraphError("graph6: truncated encoding for n=" + std::to_string(n));
    if (text.size() - 1 > need) throw GraphError("graph6: trailing garbage after encoding");

    Graph g(n);
    std::uint64_t p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p) {
            const int byte = text[1 + p / 6] - 63;
            if ((byte >> (5 - p % 6)) & 1) g.add_edge(i, j);
        }
    // Padding bits must be zero for the encoding to be canonical.
    for (; p < need * 6; ++p)
        if (((text[1 + p / 6] - 63) >> (5 - p % 6)) & 1)
            throw GraphError("graph6: nonzero padding bits");
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw GraphError("graph6: n > 62 needs the long form, which is unsupported");
    const auto bits = pair_count(n);
    std::string out(1 + (bits + 5) / 6, '\0');
    out[0] = static_cast<char>(n + 63);
    std::uint64_t p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (g.has_edge(i, j)) out[1 + p / 6] |= static_cast<char>(1 << (5 - p % 6));
    for (std::size_t k = 1; k < out.size(); ++k) out[k] = static_cast<char>(out[k] + 63);
    return out;
}

} // namespace ngspec
