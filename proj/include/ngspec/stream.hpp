#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ngspec/graph.hpp"

namespace ngspec {

/// Pull-based source of graphs. Items are independent, so consumers may
/// hand disjoint batches to separate workers and merge by position.
class GraphStream {
public:
    virtual ~GraphStream() = default;

    /// Appends up to `max` graphs to `out` and returns how many were added;
    /// zero means the stream is exhausted.
    virtual std::size_t next_batch(std::vector<Graph>& out, std::size_t max) = 0;

    virtual std::optional<std::uint64_t> total() const { return std::nullopt; }
    virtual std::string describe() const = 0;
};

inline constexpr int kDefaultEnumerationCap = 8;

/// Every labeled graph on n vertices, index k in [begin, end) mapped to the
/// graph whose canonical pair p is an edge iff bit p of k is set.
class LabeledEnumeration final : public GraphStream {
public:
    explicit LabeledEnumeration(int n, int cap = kDefaultEnumerationCap);
    LabeledEnumeration(int n, std::uint64_t begin, std::uint64_t end, int cap = kDefaultEnumerationCap);

    static std::uint64_t count(int n) { return std::uint64_t{1} << pair_count(n); }

    Graph at(std::uint64_t index) const { return Graph::from_triangle_bits(n_, index); }

    std::size_t next_batch(std::vector<Graph>& out, std::size_t max) override;
    std::optional<std::uint64_t> total() const override { return end_ - begin_; }
    std::string describe() const override;

private:
    int n_;
    std::uint64_t begin_, end_, cursor_;
};

/// graph6 lines from a text stream; a leading ">>graph6<<" header and blank
/// lines are skipped. Parse errors carry the 1-based line number.
class Graph6Stream final : public GraphStream {
public:
    Graph6Stream(std::istream& in, std::string label);

    std::size_t next_batch(std::vector<Graph>& out, std::size_t max) override;
    std::string describe() const override { return label_; }

private:
    std::istream& in_;
    std::string label_;
    std::uint64_t line_ = 0;
};

class GraphListStream final : public GraphStream {
public:
    GraphListStream(std::vector<Graph> graphs, std::string label);

    std::size_t next_batch(std::vector<Graph>& out, std::size_t max) override;
    std::optional<std::uint64_t> total() const override { return graphs_.size(); }
    std::string describe() const override { return label_; }

private:
    std::vector<Graph> graphs_;
    std::string label_;
    std::size_t cursor_ = 0;
};

inline std::unique_ptr<GraphStream> enumerate_labeled(int n, int cap = kDefaultEnumerationCap) {
    return std::make_unique<LabeledEnumeration>(n, cap);
}

} // namespace ngspec
