#pragma once

#include <dominion/mds.hpp>
#include <dominion/recognition.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dominion::poly {

/// A polynomial procedure was called on a graph outside its class.
class PreconditionFailed : public std::invalid_argument {
public:
    PreconditionFailed(const std::string & what, std::optional<recognition::Embedding> witness = std::nullopt)
        : std::invalid_argument(what), _witness(std::move(witness))
    {
    }

    auto witness() const -> const std::optional<recognition::Embedding> & { return _witness; }

private:
    std::optional<recognition::Embedding> _witness;
};

/// A bound promised by the class structure did not hold; indicates a recognition bug.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Smallest dominating set of size at most k, trying subsets by ascending size
 * and then in lexicographic order (so the witness is the lex-least optimum).
 * Nothing when gamma(G) > k.
 */
auto bounded_gamma_solve(const Graph & g, int k) -> std::optional<mds::DominationResult>;

struct LeafReduction {
    Graph reduced;
    /// Forced support vertices, as ids of the input graph.
    VertexSet forced;
    /// reduced vertex i is input vertex origin[i].
    std::vector<int> origin;
};

/// Repeatedly takes the support vertex of a leaf and deletes its closed neighbourhood. Needs a claw-free input.
auto leaf_reduce(const Graph & g) -> LeafReduction;

/// Connected graph of maximum degree at most 2: ceil(n/3) by taking every third vertex along the path or cycle.
auto solve_path_or_cycle(const Graph & g) -> mds::DominationResult;

/// (claw, kK1)-free: gamma = i <= alpha < k, so independent sets below size k suffice.
auto solve_claw_kk1(const Graph & g, int k) -> mds::DominationResult;

/// Connected (claw, K3+2K1)-free: triangle-free means path or cycle, otherwise gamma <= 4.
auto solve_claw_k3_2k1(const Graph & g) -> mds::DominationResult;

enum class Rule {
    component_split,
    leaf_reduction,
    path_or_cycle,
    bounded_gamma,
    claw_kk1,
    claw_k3_2k1,
    exact_fallback,
};

auto to_string(Rule rule) -> std::string;

struct TraceStep {
    Rule rule;
    /// Input vertices this step worked on.
    std::vector<int> vertices;
    /// Input vertices this step put into the dominating set.
    std::vector<int> chosen;
    /// Rule-specific structure: the dominating induced P8 for bounded_gamma.
    std::vector<int> structure;
    /// Rule-specific number: k for claw_kk1, the bound for bounded_gamma.
    int parameter = 0;
    std::string evidence;
};

struct StrategyTrace {
    std::vector<TraceStep> steps;
};

struct DispatchResult {
    mds::DominationResult result;
    StrategyTrace trace;
};

/**
 * Applies the structural rules in a fixed order on each component and falls
 * back to exact search where no rule of its own applies. When h is given the
 * input is expected to be (claw, h)-free; rules keyed on h are only used when
 * the input really is.
 */
auto dispatch_solve(const Graph & g, const std::optional<Graph> & h = std::nullopt,
                    const mds::SolverOptions & options = mds::default_options()) -> DispatchResult;

/// Replays the chosen vertices of a trace and re-checks each step's precondition on its vertex set.
auto replay_trace(const Graph & g, const StrategyTrace & trace) -> std::optional<std::string>;

} // namespace dominion::poly
