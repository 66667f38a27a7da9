#pragma once

#include <dominion/mds.hpp>
#include <dominion/recognition.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dominion::gadgets {

/// A corner-marked graph substituted per source vertex in a reduction.
struct GadgetSpec {
    std::string name;
    Graph graph;
    /// Ordered corners; corner i takes the i-th incident source edge.
    std::vector<int> corners;
    /// Claimed gamma(H).
    int gamma = 0;
    int corner_degree = 2;
    int internal_degree = 3;
    /// With false, non-corner degrees only need to be at most internal_degree (stretched gadgets).
    bool internal_regular = true;
    /// Pattern names (graph spec syntax) the gadget must not contain.
    std::vector<std::string> forbidden;
    /// Edges to replace by induced paths when the gadget is stretched.
    std::vector<Edge> stretch_edges;
    /// Whether a stretched reduction also puts a path on every inter-gadget edge.
    bool edge_paths = false;
};

class GadgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Corner count, distinctness and the declared degree profile; a description of the first violation.
auto structure_issue(const GadgetSpec & spec) -> std::optional<std::string>;

struct CornerCheck {
    int corner = -1;
    /// gamma(H - corner).
    int gamma_without = -1;
    /// Lexicographically least optimum of H - corner, in ids of H.
    VertexSet optimum;
    /// A second optimum of H - corner if one exists (disproves uniqueness).
    std::optional<VertexSet> other_optimum;
    bool unique = false;
    bool avoids_corners = false;

    auto passed(int gamma) const -> bool { return gamma_without == gamma - 1 && unique && avoids_corners; }
};

struct GadgetReport {
    std::optional<std::string> structure_issue;
    /// Computed gamma(H).
    int gamma = -1;
    /// gamma(H) equals the claim and a minimum dominating set contains every corner.
    bool p1 = false;
    std::optional<VertexSet> p1_witness;
    /// Per corner: gamma(H - a) = g - 1, unique optimum, avoiding the other corners.
    bool p2 = false;
    std::vector<CornerCheck> corners;
    /// No set of g - 2 vertices of H dominates every non-corner.
    bool p3 = false;
    int p3_budget = 0;
    std::optional<VertexSet> p3_counterexample;
    bool forbidden_ok = false;
    std::vector<recognition::ForbiddenHit> forbidden_hits;
    std::uint64_t explored = 0;

    auto passed() const -> bool { return ! structure_issue && p1 && p2 && p3 && forbidden_ok; }
};

constexpr int max_gadget_vertices = 64;

/// Decides every property exactly. Throws std::invalid_argument above max_gadget_vertices, NodeCapExceeded on cap.
auto verify_gadget(const GadgetSpec & spec, const mds::SolverOptions & options = mds::default_options())
    -> GadgetReport;

/// A gadget that passed verify_gadget; the reduction builders only accept these.
class VerifiedGadget {
public:
    /// Throws GadgetError naming the first failing property.
    static auto check(GadgetSpec spec, const mds::SolverOptions & options = mds::default_options())
        -> VerifiedGadget;

    auto spec() const -> const GadgetSpec & { return _spec; }
    auto report() const -> const GadgetReport & { return _report; }

private:
    VerifiedGadget(GadgetSpec spec, GadgetReport report) : _spec(std::move(spec)), _report(std::move(report)) {}

    GadgetSpec _spec;
    GadgetReport _report;
};

/// One-line summary of the first failing property, or "ok".
auto describe_failure(const GadgetReport & report) -> std::string;

struct SearchRequest {
    int n = 0;
    int corners = 3;
    int internal_degree = 3;
    int corner_degree = 2;
    std::vector<std::string> forbidden;
    int gamma = 0;
};

struct SearchOutcome {
    /// Canonically labelled (corners are vertices 0..c-1), sorted by edge list.
    std::vector<GadgetSpec> gadgets;
    /// Set when the degree sequence cannot be realised at all.
    std::optional<std::string> infeasible;
    std::uint64_t labelled_graphs = 0;
    std::uint64_t classes = 0;
};

/**
 * Exhaustive search over labelled graphs with the requested degrees (corners
 * first), pruned by forbidden patterns as soon as they are decided, then
 * deduplicated up to corner-preserving isomorphism and verified.
 * Needs n <= 12 and at most 4 corners.
 */
auto search_gadget(const SearchRequest & request, const mds::SolverOptions & options = mds::default_options())
    -> SearchOutcome;

/// Replaces every stretch edge xy by an induced path x - a1 - ... - a(3p) - y; gamma claim grows by p per edge.
auto stretch_gadget(const GadgetSpec & spec, int p) -> GadgetSpec;

/**
 * JSON gadget file: name, n, edges (1-based pairs), corners (1-based,
 * ordered), gamma, forbidden, optional stretch_edges (0-based indices into
 * edges), optional corner_degree / internal_degree (default: read off the
 * graph) and edge_paths.
 */
auto parse_gadget_json(const std::string & text) -> GadgetSpec;
auto to_gadget_json(const GadgetSpec & spec) -> std::string;
auto read_gadget_file(const std::filesystem::path & path) -> GadgetSpec;
auto write_gadget_file(const GadgetSpec & spec, const std::filesystem::path & path) -> void;

} // namespace dominion::gadgets
