#pragma once

#include <dominion/graph.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dominion::mds {

/// Which bound was strongest at the root of the search.
enum class LowerBoundKind { trivial, packing, counting };

auto to_string(LowerBoundKind kind) -> std::string;

struct DominationResult {
    int size = 0;
    VertexSet witness;
    std::uint64_t explored = 0;
    LowerBoundKind lower_bound_kind = LowerBoundKind::trivial;
    int root_lower_bound = 0;
};

struct SolverOptions {
    /// Hard limit on search nodes; exceeding it throws NodeCapExceeded.
    std::uint64_t node_cap = 1'000'000'000;
    /// Return the lexicographically least optimum (costs a second, budgeted search).
    bool canonical_witness = true;
    /// Worker threads for the optimum-size search; witness selection is always single-threaded.
    int jobs = 1;
};

/// Reads DOMINION_NODE_CAP when set.
auto default_options() -> SolverOptions;

class NodeCapExceeded : public std::runtime_error {
public:
    explicit NodeCapExceeded(std::uint64_t cap)
        : std::runtime_error("exact search exceeded the node cap of " + std::to_string(cap)), _cap(cap)
    {
    }

    auto cap() const -> std::uint64_t { return _cap; }

private:
    std::uint64_t _cap;
};

/// Every target is in s or adjacent to a member of s.
auto is_dominating(const Graph & g, const VertexSet & s, const VertexSet & targets) -> bool;
auto is_dominating(const Graph & g, const VertexSet & s) -> bool;
auto is_independent(const Graph & g, const VertexSet & s) -> bool;

/**
 * gamma(G) with a witness, by branch and bound: branch on the undominated
 * vertex with the fewest remaining candidates, trying its candidates in
 * ascending order (earlier ones excluded in later siblings), bounded by the
 * larger of a disjoint-closed-neighbourhood packing and a coverage-counting
 * bound. Components are solved separately and summed.
 */
auto min_dominating(const Graph & g, const SolverOptions & options = default_options()) -> DominationResult;

struct PartialDominationQuery {
    /// Vertices that must be dominated.
    VertexSet targets;
    /// Vertices permitted in the dominating set.
    VertexSet allowed;
    std::optional<int> budget;
};

enum class PartialStatus {
    found,
    /// No admissible set within the budget: a certified lower bound of budget + 1.
    over_budget,
    /// Some target has no allowed vertex in its closed neighbourhood.
    infeasible,
};

struct PartialOutcome {
    PartialStatus status = PartialStatus::found;
    std::optional<DominationResult> result;
    std::optional<int> uncoverable_target;
    std::uint64_t explored = 0;
};

auto min_partial_dominating(const Graph & g, const PartialDominationQuery & query,
                            const SolverOptions & options = default_options()) -> PartialOutcome;

/// All minimum dominating sets in lexicographic order, truncated at limit.
auto enumerate_min_dominating(const Graph & g, std::size_t limit, const SolverOptions & options = default_options())
    -> std::vector<VertexSet>;

/// i(G): minimum independent dominating set (minimum maximal independent set).
auto min_independent_dominating(const Graph & g, const SolverOptions & options = default_options())
    -> DominationResult;

struct EdgeDominationResult {
    int size = 0;
    std::vector<Edge> edges;
    std::uint64_t explored = 0;
};

/// Minimum edge dominating set, solved as domination in the line graph. Throws GraphError when edgeless.
auto min_edge_dominating(const Graph & g, const SolverOptions & options = default_options()) -> EdgeDominationResult;

/// V+: vertices whose deletion strictly increases gamma.
auto critical_vertices(const Graph & g, const SolverOptions & options = default_options()) -> VertexSet;

} // namespace dominion::mds
