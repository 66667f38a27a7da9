#pragma once

#include <dominion/graph.hpp>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dominion::recognition {

constexpr int max_pattern_vertices = 16;

class PatternTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Injective map from pattern vertices to host vertices: map[i] is the image of pattern vertex i.
struct Embedding {
    std::vector<int> map;

    friend auto operator==(const Embedding &, const Embedding &) -> bool = default;
};

/**
 * Finds the lexicographically least (in pattern-vertex order) embedding of
 * pattern as an induced subgraph of host, or nothing. Throws PatternTooLarge
 * for patterns over max_pattern_vertices.
 */
auto contains_induced(const Graph & host, const Graph & pattern) -> std::optional<Embedding>;

/// Same search without the induced condition: a (not necessarily induced) subgraph.
auto contains_subgraph(const Graph & host, const Graph & pattern) -> std::optional<Embedding>;

/// Re-checks injectivity and edge preservation; with induced also non-edge preservation.
auto verify_embedding(const Graph & host, const Graph & pattern, const Embedding & e, bool induced = true) -> bool;

/// A vertex bijection a -> b preserving adjacency both ways, if one exists.
auto isomorphic(const Graph & a, const Graph & b) -> std::optional<Embedding>;

/// Isomorphism that also maps each vertex onto one of the same colour.
auto isomorphic(const Graph & a, const std::vector<int> & colors_a, const Graph & b, const std::vector<int> & colors_b)
    -> std::optional<Embedding>;

/**
 * Canonical relabelling by individualisation and refinement: two coloured
 * graphs are isomorphic iff their canonical forms are equal. Colours are
 * preserved and sorted in the output (vertex i of the result has the i-th
 * smallest colour). Exhaustive over the refinement tree, so intended for
 * small graphs.
 */
struct CanonicalForm {
    Graph graph;
    std::vector<int> colors;
    /// relabel[v] is the position of input vertex v in the canonical graph.
    std::vector<int> relabel;
};

auto canonical_form(const Graph & g, const std::vector<int> & colors = {}) -> CanonicalForm;

struct NamedPattern {
    std::string name;
    Graph graph;
};

struct ForbiddenHit {
    std::string pattern;
    std::optional<Embedding> embedding;
};

struct ClassReport {
    bool claw_free = true;
    std::optional<Embedding> claw;
    /// Common degree if the graph is regular.
    std::optional<int> regular_degree;
    /// Set when a degree was expected: whether the graph is regular with exactly that degree.
    std::optional<bool> regular_ok;
    std::vector<ForbiddenHit> forbidden_hits;

    auto is_free() const -> bool { return forbidden_hits.empty(); }
};

/// Claw check, forbidden-pattern scan (first embedding per violated pattern) and degree scan.
auto check_class(const Graph & g, const std::vector<NamedPattern> & forbidden, std::optional<int> expect_regular = std::nullopt)
    -> ClassReport;

/// Resolves pattern names as understood by parse_graph_spec ("claw", "C:5", "K:4", ...).
auto patterns_from_names(const std::vector<std::string> & names) -> std::vector<NamedPattern>;

auto is_claw_free(const Graph & g) -> bool;

/// Some induced path on k vertices (map[i] is the i-th path vertex), or nothing.
auto find_induced_path(const Graph & g, int k) -> std::optional<Embedding>;

/**
 * Length of a shortest induced cycle with at least four vertices (a hole), or
 * nothing for chordal graphs. Per vertex v and non-adjacent neighbours a, b:
 * 2 + the a-b distance avoiding the rest of N[v].
 */
auto shortest_hole(const Graph & g) -> std::optional<int>;

struct TwoTriangles {
    std::array<int, 3> first;
    std::array<int, 3> second;
};

/// Two distinct (possibly overlapping) triangles inside one connected component.
auto has_two_triangle_component(const Graph & h) -> std::optional<TwoTriangles>;

/**
 * One representative per isomorphism class of graphs on n vertices that
 * satisfy a hereditary predicate, generated by one-vertex extension of the
 * (n-1)-vertex classes. With connected_only, only connected classes are
 * produced (every connected graph has a vertex whose removal keeps it
 * connected, so extending connected classes suffices).
 *
 * Classes are told apart by an invariant bucket and pairwise isomorphism.
 * Output order is deterministic.
 */
auto graph_classes(int n, bool connected_only = false,
                   const std::function<bool(const Graph &)> & hereditary_filter = {}) -> std::vector<Graph>;

} // namespace dominion::recognition
