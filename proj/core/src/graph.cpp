#include <dominion/graph.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace dominion {

Graph::Graph(int n, const std::vector<Edge> & edges, std::vector<std::string> labels)
    : _n(n), _labels(std::move(labels))
{
    if (n < 0 || n > max_vertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    if (! _labels.empty() && static_cast<int>(_labels.size()) != n)
        throw GraphError("label count does not match vertex count");

    _rows.assign(static_cast<std::size_t>(n), VertexSet(n));
    _degrees.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        if (_rows[u].test(v))
            throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        _rows[u].set(v);
        _rows[v].set(u);
        ++_degrees[u];
        ++_degrees[v];
        ++_m;
    }
}

auto Graph::closed_neighborhood(int v) const -> VertexSet
{
    VertexSet result = _rows[v];
    result.set(v);
    return result;
}

auto Graph::closed_neighborhood(const VertexSet & s) const -> VertexSet
{
    VertexSet result = s;
    s.for_each([&](int v) { result |= _rows[v]; });
    return result;
}

auto Graph::max_degree() const -> int
{
    return _degrees.empty() ? 0 : *std::max_element(_degrees.begin(), _degrees.end());
}

auto Graph::min_degree() const -> int
{
    return _degrees.empty() ? 0 : *std::min_element(_degrees.begin(), _degrees.end());
}

auto Graph::regular_degree() const -> std::optional<int>
{
    if (_n == 0)
        return 0;
    int d = _degrees.front();
    for (int x : _degrees)
        if (x != d)
            return std::nullopt;
    return d;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(static_cast<std::size_t>(_m));
    for (int u = 0; u < _n; ++u)
        for (int v = _rows[u].next(u + 1); v >= 0; v = _rows[u].next(v + 1))
            result.emplace_back(u, v);
    return result;
}

auto Graph::label(int v) const -> std::string
{
    return _labels.empty() ? std::to_string(v + 1) : _labels[v];
}

GraphBuilder::GraphBuilder(int n) : _n(n), _adj(static_cast<std::size_t>(n)), _labels(static_cast<std::size_t>(n)) {}

auto GraphBuilder::add_vertex(std::string label) -> int
{
    _adj.emplace_back();
    if (! label.empty())
        _labelled = true;
    _labels.push_back(std::move(label));
    return _n++;
}

auto GraphBuilder::add_edge(int u, int v) -> void
{
    if (u < 0 || v < 0 || u >= _n || v >= _n)
        throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    _adj[u].push_back(v);
    _adj[v].push_back(u);
}

auto GraphBuilder::has_edge(int u, int v) const -> bool
{
    const auto & a = _adj[u].size() < _adj[v].size() ? _adj[u] : _adj[v];
    int other = _adj[u].size() < _adj[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

auto GraphBuilder::set_label(int v, std::string label) -> void
{
    _labelled = true;
    _labels[v] = std::move(label);
}

auto GraphBuilder::build() const -> Graph
{
    std::vector<Edge> edges;
    for (int u = 0; u < _n; ++u)
        for (int v : _adj[u])
            if (u < v)
                edges.emplace_back(u, v);
    std::vector<std::string> labels;
    if (_labelled) {
        labels = _labels;
        for (int v = 0; v < _n; ++v)
            if (labels[v].empty())
                labels[v] = std::to_string(v + 1);
    }
    return Graph(_n, edges, std::move(labels));
}

auto complement(const Graph & g) -> Graph
{
    std::vector<Edge> edges;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (! g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph(g.size(), edges, g.labels());
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.size(), v + a.size());
    std::vector<std::string> labels;
    if (a.has_labels() || b.has_labels()) {
        for (int v = 0; v < a.size(); ++v)
            labels.push_back(a.label(v));
        for (int v = 0; v < b.size(); ++v)
            labels.push_back(b.has_labels() ? b.label(v) : std::to_string(a.size() + v + 1));
    }
    return Graph(a.size() + b.size(), edges, std::move(labels));
}

auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph
{
    return induced_subgraph(g, keep.members());
}

auto induced_subgraph(const Graph & g, const std::vector<int> & keep) -> Graph
{
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw GraphError("induced_subgraph: repeated vertex in selection");
    std::vector<int> new_id(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 0 || v >= g.size())
            throw GraphError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        new_id[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (int u : sorted)
        for (int v = g.neighbors(u).next(u + 1); v >= 0; v = g.neighbors(u).next(v + 1))
            if (new_id[v] >= 0)
                edges.emplace_back(new_id[u], new_id[v]);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v : sorted)
            labels.push_back(g.label(v));
    return Graph(static_cast<int>(sorted.size()), edges, std::move(labels));
}

auto remove_vertex(const Graph & g, int v) -> Graph
{
    auto keep = g.all_vertices();
    keep.reset(v);
    return induced_subgraph(g, keep);
}

auto line_graph(const Graph & g) -> LineGraph
{
    LineGraph result;
    result.edge_of = g.edges();
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < result.edge_of.size(); ++i) {
        incident[result.edge_of[i].first].push_back(static_cast<int>(i));
        incident[result.edge_of[i].second].push_back(static_cast<int>(i));
    }
    // two edges share at most one endpoint in a simple graph, so each pair appears once
    std::vector<Edge> edges;
    for (const auto & at : incident)
        for (std::size_t a = 0; a < at.size(); ++a)
            for (std::size_t b = a + 1; b < at.size(); ++b)
                edges.emplace_back(at[a], at[b]);
    result.graph = Graph(static_cast<int>(result.edge_of.size()), edges);
    return result;
}

auto connected_components(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    VertexSet unseen = g.all_vertices();
    for (int start = unseen.first(); start >= 0; start = unseen.first()) {
        VertexSet component(g.size());
        VertexSet frontier(g.size());
        frontier.set(start);
        while (frontier.any()) {
            component |= frontier;
            VertexSet next(g.size());
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next -= component;
            frontier = std::move(next);
        }
        unseen -= component;
        result.push_back(std::move(component));
    }
    return result;
}

auto is_connected(const Graph & g) -> bool
{
    return g.size() <= 1 || connected_components(g).size() == 1;
}

auto adjacency_is_valid(const Graph & g) -> bool
{
    for (int u = 0; u < g.size(); ++u) {
        if (g.adjacent(u, u))
            return false;
        for (int v = 0; v < g.size(); ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u))
                return false;
    }
    return true;
}

} // namespace dominion
