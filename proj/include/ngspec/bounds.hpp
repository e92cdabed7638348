#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ngspec/invariants.hpp"

namespace ngspec {

class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class BoundKind { upper, lower, strict_upper, strict_lower, two_sided };

/// conjecture_dependent marks results proved only under the min(s+, s-) >= n-1
/// conjecture; a violation there is reported like a conjecture counterexample.
enum class BoundStatus { theorem, conjecture, conjecture_dependent };

std::string_view status_name(BoundStatus s);

/// Quantity bracketed by optional lower and upper thresholds.
struct BoundTerms {
    double value = 0.0;
    std::optional<double> lower;
    std::optional<double> upper;
};

struct BoundSpec {
    std::string id;
    BoundKind kind = BoundKind::upper;
    BoundStatus status = BoundStatus::theorem;
    bool lower_strict = false;
    bool upper_strict = false;
    bool needs_complement = false;
    bool needs_chi = false;
    /// Returns a skip reason when the bound does not apply to this graph.
    std::function<std::optional<std::string>(const InvariantSet&)> applies;
    std::function<BoundTerms(const InvariantSet& g, const InvariantSet* complement)> evaluate;
    std::optional<StructureTag> equality_class;
    std::string statement;
};

inline constexpr double kDefaultSlackTolerance = 1e-8;
inline constexpr double kEqualityTolerance = 1e-6;

struct BoundCheck {
    std::string bound;
    std::string g6;
    BoundStatus status = BoundStatus::theorem;
    double lhs = 0.0;
    double rhs = 0.0;
    /// rhs - lhs for upper bounds, lhs - rhs for lower bounds; for two-sided
    /// entries the smaller of the two, with `side` naming the binding one.
    double slack = 0.0;
    bool holds = true;
    bool equality = false;
    bool tight = false; // strict side met within tolerance
    bool skipped = false;
    std::string reason;
    std::string side;
    std::string note;

    bool violated() const { return !skipped && !holds; }
};

class Catalog {
public:
    explicit Catalog(std::vector<BoundSpec> entries);

    static const Catalog& standard();

    std::span<const BoundSpec> entries() const { return entries_; }
    const BoundSpec& at(std::string_view id) const;
    bool contains(std::string_view id) const;

    /// "all" or a comma separated id list, returned in catalog order.
    std::vector<std::string> resolve(std::string_view list) const;

private:
    std::vector<BoundSpec> entries_;
};

/// The correction term of the conjectured maximum of mu(G) + mu(complement).
double f_correction(int n);

/// 4n/3 - 5/3 + f(n).
double conjectured_ng_maximum(int n);

BoundCheck evaluate_bound(const BoundSpec& spec, const InvariantSet& g, const InvariantSet* complement,
                          double tol = kDefaultSlackTolerance);
BoundCheck evaluate_bound(std::string_view id, const InvariantSet& g, const InvariantSet* complement,
                          double tol = kDefaultSlackTolerance);

struct CheckOptions {
    double tol = kDefaultSlackTolerance;
    InvariantOptions invariants;
    /// Recompute with the extended precision solver before reporting a violation.
    bool reverify = true;
};

/// Invariants of G and its complement, with each side's chi_complement filled
/// from the other.
std::pair<InvariantSet, InvariantSet> collect_pair(const Graph& g, const InvariantOptions& options);

std::vector<BoundCheck> check_graph(const Graph& g, std::span<const std::string> ids, const CheckOptions& options = {},
                                    const Catalog& catalog = Catalog::standard());

} // namespace ngspec
