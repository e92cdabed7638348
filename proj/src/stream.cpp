#include "ngspec/stream.hpp"

#include <algorithm>

namespace ngspec {

namespace {

int checked_order(int n, int cap) {
    if (n < 1) throw GraphError("enumeration needs n >= 1");
    if (n > cap)
        throw GraphError("labeled enumeration refused: n=" + std::to_string(n) + " exceeds the cap of " +
                         std::to_string(cap) + " (use an isomorph-free graph6 corpus instead)");
    if (pair_count(n) >= 64) throw GraphError("labeled enumeration index overflows 64 bits");
    return n;
}

} // namespace

LabeledEnumeration::LabeledEnumeration(int n, int cap)
    : LabeledEnumeration(n, 0, count(checked_order(n, cap)), cap) {}

LabeledEnumeration::LabeledEnumeration(int n, std::uint64_t begin, std::uint64_t end, int cap)
    : n_(checked_order(n, cap)), begin_(begin), end_(end), cursor_(begin) {
    if (begin > end || end > count(n)) throw GraphError("enumeration range out of bounds");
}

std::size_t LabeledEnumeration::next_batch(std::vector<Graph>& out, std::size_t max) {
    const auto take = static_cast<std::size_t>(std::min<std::uint64_t>(max, end_ - cursor_));
    for (std::size_t k = 0; k < take; ++k) out.push_back(at(cursor_++));
    return take;
}

std::string LabeledEnumeration::describe() const {
    return "labeled(n=" + std::to_string(n_) + ",[" + std::to_string(begin_) + "," + std::to_string(end_) + "))";
}

Graph6Stream::Graph6Stream(std::istream& in, std::string label) : in_(in), label_(std::move(label)) {}

std::size_t Graph6Stream::next_batch(std::vector<Graph>& out, std::size_t max) {
    std::size_t added = 0;
    std::string line;
    while (added < max && std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const GraphError& e) {
            throw GraphError(label_ + ":" + std::to_string(line_) + ": " + e.what());
        }
        ++added;
    }
    if (in_.bad()) throw std::runtime_error(label_ + ": read error");
    return added;
}

GraphListStream::GraphListStream(std::vector<Graph> graphs, std::string label)
    : graphs_(std::move(graphs)), label_(std::move(label)) {}

std::size_t GraphListStream::next_batch(std::vector<Graph>& out, std::size_t max) {
    const auto take = std::min(max, graphs_.size() - cursor_);
    out.insert(out.end(), graphs_.begin() + cursor_, graphs_.begin() + cursor_ + take);
    cursor_ += take;
    return take;
}

} // namespace ngspec
