#include <dominion/recognition.hpp>
#include <dominion/named_graphs.hpp>

#include <algorithm>
#include <cstdint>
#include <map>

namespace dominion::recognition {

namespace {
    enum class Mode { induced, subgraph, isomorphism };

    class EmbeddingSearch {
    public:
        EmbeddingSearch(const Graph & host, const Graph & pattern, Mode mode,
                        const std::vector<int> * host_colors = nullptr, const std::vector<int> * pattern_colors = nullptr)
            : _host(host), _pattern(pattern), _mode(mode), _map(static_cast<std::size_t>(pattern.size()), -1),
              _used(host.size()), _host_colors(host_colors), _pattern_colors(pattern_colors)
        {
            if (pattern.size() > max_pattern_vertices)
                throw PatternTooLarge("pattern has " + std::to_string(pattern.size()) + " vertices, limit is "
                        + std::to_string(max_pattern_vertices));
        }

        auto run() -> std::optional<Embedding>
        {
            if (_pattern.size() > _host.size())
                return std::nullopt;
            if (extend(0))
                return Embedding{_map};
            return std::nullopt;
        }

    private:
        auto extend(int depth) -> bool
        {
            if (depth == _pattern.size())
                return true;

            VertexSet candidates = _host.all_vertices();
            candidates -= _used;
            for (int j = 0; j < depth; ++j) {
                if (_pattern.adjacent(depth, j))
                    candidates &= _host.neighbors(_map[j]);
                else if (_mode != Mode::subgraph)
                    candidates -= _host.neighbors(_map[j]);
            }

            int need = _pattern.degree(depth);
            for (int c = candidates.first(); c >= 0; c = candidates.next(c + 1)) {
                int have = _host.degree(c);
                if (have < need || (_mode == Mode::isomorphism && have != need))
                    continue;
                if (_host_colors && (*_host_colors)[c] != (*_pattern_colors)[depth])
                    continue;
                _map[depth] = c;
                _used.set(c);
                if (extend(depth + 1))
                    return true;
                _used.reset(c);
            }
            _map[depth] = -1;
            return false;
        }

        const Graph & _host;
        const Graph & _pattern;
        Mode _mode;
        std::vector<int> _map;
        VertexSet _used;
        const std::vector<int> * _host_colors;
        const std::vector<int> * _pattern_colors;
    };

    auto triangles_at(const Graph & g, int v) -> int
    {
        int count = 0;
        g.neighbors(v).for_each([&](int u) { count += g.neighbors(u).intersection_count(g.neighbors(v)); });
        return count / 2;
    }

    auto invariant(const Graph & g) -> std::vector<int>
    {
        std::vector<std::vector<int>> per_vertex;
        for (int v = 0; v < g.size(); ++v) {
            std::vector<int> row{g.degree(v), triangles_at(g, v)};
            std::vector<int> neighbour_degrees;
            g.neighbors(v).for_each([&](int u) { neighbour_degrees.push_back(g.degree(u)); });
            std::sort(neighbour_degrees.begin(), neighbour_degrees.end());
            row.insert(row.end(), neighbour_degrees.begin(), neighbour_degrees.end());
            per_vertex.push_back(std::move(row));
        }
        std::sort(per_vertex.begin(), per_vertex.end());
        std::vector<int> key{g.size(), g.edge_count()};
        for (const auto & row : per_vertex) {
            key.push_back(-1);
            key.insert(key.end(), row.begin(), row.end());
        }
        return key;
    }
}

auto contains_induced(const Graph & host, const Graph & pattern) -> std::optional<Embedding>
{
    return EmbeddingSearch(host, pattern, Mode::induced).run();
}

auto contains_subgraph(const Graph & host, const Graph & pattern) -> std::optional<Embedding>
{
    return EmbeddingSearch(host, pattern, Mode::subgraph).run();
}

auto verify_embedding(const Graph & host, const Graph & pattern, const Embedding & e, bool induced) -> bool
{
    if (static_cast<int>(e.map.size()) != pattern.size())
        return false;
    VertexSet seen(host.size());
    for (int v : e.map) {
        if (v < 0 || v >= host.size() || seen.test(v))
            return false;
        seen.set(v);
    }
    for (int a = 0; a < pattern.size(); ++a)
        for (int b = a + 1; b < pattern.size(); ++b) {
            bool in_host = host.adjacent(e.map[a], e.map[b]);
            if (pattern.adjacent(a, b) && ! in_host)
                return false;
            if (induced && ! pattern.adjacent(a, b) && in_host)
                return false;
        }
    return true;
}

auto isomorphic(const Graph & a, const Graph & b) -> std::optional<Embedding>
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return std::nullopt;
    // maps b's vertices into a; invert to present a -> b
    auto found = EmbeddingSearch(a, b, Mode::isomorphism).run();
    if (! found)
        return std::nullopt;
    Embedding inverse{std::vector<int>(static_cast<std::size_t>(a.size()))};
    for (int i = 0; i < b.size(); ++i)
        inverse.map[found->map[i]] = i;
    return inverse;
}

auto isomorphic(const Graph & a, const std::vector<int> & colors_a, const Graph & b, const std::vector<int> & colors_b)
    -> std::optional<Embedding>
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return std::nullopt;
    auto found = EmbeddingSearch(a, b, Mode::isomorphism, &colors_a, &colors_b).run();
    if (! found)
        return std::nullopt;
    Embedding inverse{std::vector<int>(static_cast<std::size_t>(a.size()))};
    for (int i = 0; i < b.size(); ++i)
        inverse.map[found->map[i]] = i;
    return inverse;
}

namespace {
    using Partition = std::vector<int>; // cell index per vertex, cells numbered 0..k-1

    /// Splits cells by the multiset of neighbouring cells until stable; cell order is isomorphism-invariant.
    auto refine(const Graph & g, Partition cells) -> Partition
    {
        int n = g.size();
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> signature(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                std::vector<int> key{cells[v]};
                std::vector<int> around;
                g.neighbors(v).for_each([&](int u) { around.push_back(cells[u]); });
                std::sort(around.begin(), around.end());
                key.insert(key.end(), around.begin(), around.end());
                signature[v] = {std::move(key), v};
            }
            auto sorted = signature;
            std::sort(sorted.begin(), sorted.end());
            Partition next(static_cast<std::size_t>(n));
            int cell = -1;
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (i == 0 || sorted[i].first != sorted[i - 1].first)
                    ++cell;
                next[sorted[i].second] = cell;
            }
            int before = *std::max_element(cells.begin(), cells.end());
            if (cell == before)
                return next;
            cells = std::move(next);
        }
    }

    auto adjacency_key(const Graph & g, const Partition & position) -> std::vector<std::uint64_t>
    {
        int n = g.size();
        std::vector<int> at(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            at[position[v]] = v;
        std::vector<std::uint64_t> key((static_cast<std::size_t>(n) * n + 63) / 64, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.adjacent(at[i], at[j])) {
                    auto bit = static_cast<std::size_t>(i) * n + j;
                    key[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
                }
        return key;
    }

    auto canonical_search(const Graph & g, const Partition & cells, std::vector<std::uint64_t> & best_key,
                          Partition & best) -> void
    {
        auto refined = refine(g, cells);
        int n = g.size();
        int cell_count = n == 0 ? 0 : *std::max_element(refined.begin(), refined.end()) + 1;
        if (cell_count == n) {
            auto key = adjacency_key(g, refined);
            if (best.empty() || key > best_key) {
                best_key = std::move(key);
                best = refined;
            }
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(cell_count), 0);
        for (int c : refined)
            ++size[c];
        int target = 0;
        while (size[target] == 1)
            ++target;
        for (int v = 0; v < n; ++v)
            if (refined[v] == target) {
                // v goes first within its cell: shift every later cell up by one
                Partition split = refined;
                for (int u = 0; u < n; ++u)
                    if (refined[u] > target || (refined[u] == target && u != v))
                        ++split[u];
                canonical_search(g, split, best_key, best);
            }
    }
}

auto canonical_form(const Graph & g, const std::vector<int> & colors) -> CanonicalForm
{
    int n = g.size();
    std::vector<int> base = colors.empty() ? std::vector<int>(static_cast<std::size_t>(n), 0) : colors;
    // initial cells: by colour value
    std::vector<int> distinct = base;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Partition cells(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        cells[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), base[v]) - distinct.begin());

    std::vector<std::uint64_t> best_key;
    Partition best;
    if (n > 0)
        canonical_search(g, cells, best_key, best);

    CanonicalForm form;
    form.relabel = best;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(std::min(best[u], best[v]), std::max(best[u], best[v]));
    form.graph = Graph(n, edges);
    form.colors.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        form.colors[best[v]] = base[v];
    return form;
}

auto shortest_hole(const Graph & g) -> std::optional<int>
{
    std::optional<int> best;
    int n = g.size();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        auto around = g.neighbors(v).members();
        for (std::size_t i = 0; i < around.size(); ++i)
            for (std::size_t j = i + 1; j < around.size(); ++j) {
                int a = around[i], b = around[j];
                if (g.adjacent(a, b))
                    continue;
                VertexSet blocked = g.closed_neighborhood(v);
                blocked.reset(a);
                blocked.reset(b);
                std::fill(dist.begin(), dist.end(), -1);
                dist[a] = 0;
                queue.assign(1, a);
                for (std::size_t head = 0; head < queue.size() && dist[b] < 0; ++head) {
                    int x = queue[head];
                    if (best && dist[x] + 3 >= *best)
                        break;
                    g.neighbors(x).for_each([&](int y) {
                        if (dist[y] < 0 && ! blocked.test(y)) {
                            dist[y] = dist[x] + 1;
                            queue.push_back(y);
                        }
                    });
                }
                if (dist[b] >= 0 && (! best || dist[b] + 2 < *best))
                    best = dist[b] + 2;
            }
    }
    return best;
}

auto is_claw_free(const Graph & g) -> bool
{
    static const Graph pattern = claw();
    return ! contains_induced(g, pattern);
}

auto check_class(const Graph & g, const std::vector<NamedPattern> & forbidden, std::optional<int> expect_regular)
    -> ClassReport
{
    ClassReport report;
    report.claw = contains_induced(g, claw());
    report.claw_free = ! report.claw.has_value();
    report.regular_degree = g.regular_degree();
    if (expect_regular)
        report.regular_ok = report.regular_degree == expect_regular;
    for (const auto & p : forbidden)
        if (auto hit = contains_induced(g, p.graph))
            report.forbidden_hits.push_back({p.name, std::move(hit)});
    return report;
}

auto patterns_from_names(const std::vector<std::string> & names) -> std::vector<NamedPattern>
{
    std::vector<NamedPattern> result;
    for (const auto & name : names)
        result.push_back({name, parse_graph_spec(name)});
    return result;
}

auto find_induced_path(const Graph & g, int k) -> std::optional<Embedding>
{
    if (k < 1 || k > g.size())
        return std::nullopt;

    std::vector<int> path;
    // blocked: closed neighbourhoods of every path vertex except the last
    std::function<bool(const VertexSet &)> grow = [&](const VertexSet & blocked) -> bool {
        if (static_cast<int>(path.size()) == k)
            return true;
        int last = path.back();
        VertexSet next = g.neighbors(last) - blocked;
        VertexSet blocked_next = blocked | g.closed_neighborhood(last);
        for (int c = next.first(); c >= 0; c = next.next(c + 1)) {
            path.push_back(c);
            if (grow(blocked_next))
                return true;
            path.pop_back();
        }
        return false;
    };

    for (int s = 0; s < g.size(); ++s) {
        path.assign(1, s);
        if (grow(g.empty_set()))
            return Embedding{path};
    }
    return std::nullopt;
}

auto has_two_triangle_component(const Graph & h) -> std::optional<TwoTriangles>
{
    auto components = connected_components(h);
    std::vector<int> component_of(static_cast<std::size_t>(h.size()), -1);
    for (std::size_t c = 0; c < components.size(); ++c)
        components[c].for_each([&](int v) { component_of[v] = static_cast<int>(c); });

    std::map<int, std::array<int, 3>> first_in_component;
    for (int u = 0; u < h.size(); ++u)
        for (int v = h.neighbors(u).next(u + 1); v >= 0; v = h.neighbors(u).next(v + 1)) {
            VertexSet common = h.neighbors(u) & h.neighbors(v);
            for (int w = common.next(v + 1); w >= 0; w = common.next(w + 1)) {
                std::array<int, 3> t{u, v, w};
                auto [it, fresh] = first_in_component.try_emplace(component_of[u], t);
                if (! fresh)
                    return TwoTriangles{it->second, t};
            }
        }
    return std::nullopt;
}

auto graph_classes(int n, bool connected_only, const std::function<bool(const Graph &)> & hereditary_filter)
    -> std::vector<Graph>
{
    auto accepted = [&](const Graph & g) { return ! hereditary_filter || hereditary_filter(g); };

    std::vector<Graph> level;
    if (n <= 0)
        return {Graph(0, {})};
    {
        Graph k1(1, {});
        if (accepted(k1))
            level.push_back(k1);
    }

    for (int size = 2; size <= n; ++size) {
        std::map<std::vector<int>, std::vector<std::size_t>> buckets;
        std::vector<Graph> next;
        for (const auto & base : level) {
            auto edges = base.edges();
            int old = base.size();
            for (std::uint32_t subset = connected_only ? 1 : 0; subset < (std::uint32_t{1} << old); ++subset) {
                auto extended = edges;
                for (int v = 0; v < old; ++v)
                    if ((subset >> v) & 1U)
                        extended.emplace_back(v, old);
                Graph candidate(size, extended);
                if (! accepted(candidate))
                    continue;
                auto & bucket = buckets[invariant(candidate)];
                bool duplicate = std::any_of(bucket.begin(), bucket.end(),
                        [&](std::size_t i) { return isomorphic(next[i], candidate).has_value(); });
                if (! duplicate) {
                    bucket.push_back(next.size());
                    next.push_back(std::move(candidate));
                }
            }
        }
        level = std::move(next);
    }

    std::stable_sort(level.begin(), level.end(), [](const Graph & a, const Graph & b) {
        return a.edge_count() < b.edge_count();
    });
    return level;
}

} // namespace dominion::recognition
