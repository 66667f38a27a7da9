#pragma once

#include <dominion/vertex_set.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dominion {

using Edge = std::pair<int, int>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Immutable simple undirected graph over dense vertex ids 0..n-1, stored as
 * one adjacency bit-vector per vertex. Optional per-vertex labels record
 * provenance (reductions tag gadget copies with them).
 *
 * Equality is label-sensitive and isomorphism-insensitive; use
 * recognition::isomorphic for the latter.
 */
class Graph {
public:
    static constexpr int max_vertices = 65535;

    Graph() = default;

    /// Throws GraphError on self-loops, duplicate edges or out-of-range ids.
    Graph(int n, const std::vector<Edge> & edges, std::vector<std::string> labels = {});

    auto size() const -> int { return _n; }
    auto edge_count() const -> int { return _m; }

    auto adjacent(int u, int v) const -> bool { return _rows[u].test(v); }
    auto neighbors(int v) const -> const VertexSet & { return _rows[v]; }
    auto closed_neighborhood(int v) const -> VertexSet;
    /// N[S]: S together with every neighbour of a member of S.
    auto closed_neighborhood(const VertexSet & s) const -> VertexSet;
    auto degree(int v) const -> int { return _degrees[v]; }
    auto max_degree() const -> int;
    auto min_degree() const -> int;
    /// The common degree if every vertex has it.
    auto regular_degree() const -> std::optional<int>;

    /// Edges with u < v, sorted lexicographically.
    auto edges() const -> std::vector<Edge>;

    auto has_labels() const -> bool { return ! _labels.empty(); }
    auto label(int v) const -> std::string;
    auto labels() const -> const std::vector<std::string> & { return _labels; }

    auto all_vertices() const -> VertexSet { return VertexSet::full(_n); }
    auto empty_set() const -> VertexSet { return VertexSet(_n); }

    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a._n == b._n && a._rows == b._rows && a._labels == b._labels;
    }

    /// Same vertex count and edge set, labels ignored.
    auto same_structure(const Graph & other) const -> bool { return _n == other._n && _rows == other._rows; }

private:
    int _n = 0;
    int _m = 0;
    std::vector<VertexSet> _rows;
    std::vector<int> _degrees;
    std::vector<std::string> _labels;
};

/// Mutable staging area for building a Graph edge by edge.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    auto size() const -> int { return _n; }
    /// Returns the new vertex id.
    auto add_vertex(std::string label = {}) -> int;
    auto add_edge(int u, int v) -> void;
    auto has_edge(int u, int v) const -> bool;
    auto set_label(int v, std::string label) -> void;
    auto build() const -> Graph;

private:
    int _n;
    std::vector<std::vector<int>> _adj;
    std::vector<std::string> _labels;
    bool _labelled = false;
};

auto complement(const Graph & g) -> Graph;
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
/// Vertices keep their relative order; new id i is the i-th smallest selected vertex.
auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph;
auto induced_subgraph(const Graph & g, const std::vector<int> & keep) -> Graph;
auto remove_vertex(const Graph & g, int v) -> Graph;

struct LineGraph {
    Graph graph;
    /// Vertex i of graph corresponds to edge edge_of[i] of the source.
    std::vector<Edge> edge_of;
};

auto line_graph(const Graph & g) -> LineGraph;

auto connected_components(const Graph & g) -> std::vector<VertexSet>;
auto is_connected(const Graph & g) -> bool;

/// Full scan of the symmetry and irreflexivity invariants.
auto adjacency_is_valid(const Graph & g) -> bool;

} // namespace dominion
