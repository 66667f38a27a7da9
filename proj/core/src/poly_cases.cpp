#include <dominion/poly_cases.hpp>
#include <dominion/dichotomy.hpp>
#include <dominion/named_graphs.hpp>

#include <algorithm>

namespace dominion::poly {

namespace {
    /// Lexicographic DFS over k-subsets of candidates; returns the first that dominates.
    auto first_dominating(const Graph & g, int k, const std::vector<VertexSet> & closed,
                          const std::function<bool(const VertexSet &, int)> & admissible) -> std::optional<VertexSet>
    {
        int n = g.size();
        VertexSet chosen(n);
        std::vector<VertexSet> covered(static_cast<std::size_t>(k + 1), VertexSet(n));
        std::optional<VertexSet> found;
        auto all = g.all_vertices();

        std::function<bool(int, int)> go = [&](int depth, int from) -> bool {
            if (depth == k)
                return covered[depth] == all;
            for (int v = from; v <= n - (k - depth); ++v) {
                if (! admissible(chosen, v))
                    continue;
                chosen.set(v);
                covered[depth + 1] = covered[depth];
                covered[depth + 1] |= closed[v];
                if (go(depth + 1, v + 1))
                    return true;
                chosen.reset(v);
            }
            return false;
        };
        if (go(0, 0))
            found = chosen;
        return found;
    }

    auto closed_rows(const Graph & g) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> rows;
        for (int v = 0; v < g.size(); ++v)
            rows.push_back(g.closed_neighborhood(v));
        return rows;
    }

    auto result_of(const VertexSet & s, std::uint64_t explored = 0) -> mds::DominationResult
    {
        mds::DominationResult r;
        r.size = s.count();
        r.witness = s;
        r.explored = explored;
        return r;
    }

    auto require_claw_free(const Graph & g) -> void
    {
        if (auto e = recognition::contains_induced(g, claw()))
            throw PreconditionFailed("input contains an induced claw", e);
    }

    auto require_free_of(const Graph & g, const Graph & h, const std::string & name) -> void
    {
        if (auto e = recognition::contains_induced(g, h))
            throw PreconditionFailed("input contains an induced " + name, e);
    }

    auto require_connected(const Graph & g) -> void
    {
        if (! is_connected(g))
            throw PreconditionFailed("input is not connected");
    }

    auto k3_2k1() -> Graph { return disjoint_union(complete_graph(3), Graph(2, {})); }
}

auto bounded_gamma_solve(const Graph & g, int k) -> std::optional<mds::DominationResult>
{
    if (k < 1)
        throw std::invalid_argument("bounded_gamma_solve needs k >= 1");
    auto closed = closed_rows(g);
    auto any = [](const VertexSet &, int) { return true; };
    for (int size = 0; size <= std::min(k, g.size()); ++size)
        if (auto s = first_dominating(g, size, closed, any))
            return result_of(*s);
    return std::nullopt;
}

auto leaf_reduce(const Graph & g) -> LeafReduction
{
    require_claw_free(g);
    VertexSet alive = g.all_vertices();
    VertexSet forced(g.size());
    while (true) {
        int support = -1;
        for (int u = alive.first(); u >= 0 && support < 0; u = alive.next(u + 1)) {
            auto around = g.neighbors(u) & alive;
            if (around.count() == 1)
                support = around.first();
        }
        if (support < 0)
            break;
        forced.set(support);
        alive -= g.closed_neighborhood(support);
    }
    return {induced_subgraph(g, alive), forced, alive.members()};
}

auto solve_path_or_cycle(const Graph & g) -> mds::DominationResult
{
    if (g.size() > 0 && g.max_degree() > 2)
        throw PreconditionFailed("vertex of degree above 2");
    require_connected(g);
    int n = g.size();
    VertexSet s(n);
    if (n == 0)
        return result_of(s);
    // walk from an end (or from vertex 0 on a cycle)
    int start = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= 1) {
            start = v;
            break;
        }
    std::vector<int> order{start};
    int previous = -1, current = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        g.neighbors(current).for_each([&](int u) {
            if (u != previous && next < 0 && (order.size() < 2 || u != order.front()))
                next = u;
        });
        previous = current;
        current = next;
        order.push_back(current);
    }
    bool cycle = g.min_degree() == 2;
    for (int i = cycle ? 0 : 1; i < n + (cycle ? 0 : 1); i += 3)
        s.set(order[std::min(i, n - 1)]);
    return result_of(s);
}

auto solve_claw_kk1(const Graph & g, int k) -> mds::DominationResult
{
    if (k < 1)
        throw std::invalid_argument("solve_claw_kk1 needs k >= 1");
    require_claw_free(g);
    require_free_of(g, Graph(k, {}), std::to_string(k) + "K1");
    auto closed = closed_rows(g);
    auto independent = [&](const VertexSet & chosen, int v) { return ! chosen.intersects(g.neighbors(v)); };
    for (int size = 0; size < k; ++size)
        if (auto s = first_dominating(g, size, closed, independent))
            return result_of(*s);
    throw InternalInconsistency("no independent dominating set below the forbidden independence number");
}

auto solve_claw_k3_2k1(const Graph & g) -> mds::DominationResult
{
    require_connected(g);
    require_claw_free(g);
    require_free_of(g, k3_2k1(), "K3+2K1");
    auto triangle = recognition::contains_induced(g, complete_graph(3));
    if (! triangle)
        return solve_path_or_cycle(g);
    VertexSet around(g.size());
    for (int v : triangle->map)
        around |= g.closed_neighborhood(v);
    int bound = around == g.all_vertices() ? 3 : 4;
    if (auto r = bounded_gamma_solve(g, bound))
        return *r;
    if (bound == 3)
        if (auto r = bounded_gamma_solve(g, 4))
            return *r;
    throw InternalInconsistency("(claw, K3+2K1)-free graph with gamma above 4");
}

auto to_string(Rule rule) -> std::string
{
    switch (rule) {
    case Rule::component_split: return "component-split";
    case Rule::leaf_reduction: return "leaf-reduction";
    case Rule::path_or_cycle: return "path-or-cycle";
    case Rule::bounded_gamma: return "bounded-gamma";
    case Rule::claw_kk1: return "claw-kK1";
    case Rule::claw_k3_2k1: return "claw-K3+2K1";
    case Rule::exact_fallback: return "exact-fallback";
    }
    return "?";
}

namespace {
    /// Largest component size on which the O(n^8) dominating-P8 rule is tried.
    constexpr int p8_rule_limit = 30;

    class Dispatcher {
    public:
        Dispatcher(const Graph & input, const std::optional<Graph> & h, const mds::SolverOptions & options)
            : _chosen(input.size()), _options(options)
        {
            if (! h)
                return;
            if (h->edge_count() == 0 && h->size() > 0)
                _kk1 = h->size();
            _k3_2k1 = recognition::isomorphic(*h, k3_2k1()).has_value();
            auto c = dichotomy::classify(*h);
            if (c.verdict == dichotomy::Verdict::polynomial && c.citation.find("[external") != std::string::npos)
                _fallback_note = "polynomial per cited external algorithm (" + c.reason + "), exact fallback used";
        }

        auto solve(const Graph & g, const std::vector<int> & origin) -> void
        {
            if (g.size() == 0)
                return;
            auto parts = connected_components(g);
            if (parts.size() > 1) {
                record(Rule::component_split, origin, {}, std::to_string(parts.size()) + " components");
                for (const auto & part : parts) {
                    std::vector<int> sub_origin;
                    part.for_each([&](int v) { sub_origin.push_back(origin[v]); });
                    solve(induced_subgraph(g, part), sub_origin);
                }
                return;
            }

            bool claw_free = recognition::is_claw_free(g);
            if (claw_free) {
                auto lr = leaf_reduce(g);
                if (lr.forced.any()) {
                    record(Rule::leaf_reduction, origin, mapped(lr.forced, origin),
                           std::to_string(lr.forced.count()) + " support vertices forced");
                    std::vector<int> sub_origin;
                    for (int v : lr.origin)
                        sub_origin.push_back(origin[v]);
                    solve(lr.reduced, sub_origin);
                    return;
                }
            }
            if (g.max_degree() <= 2) {
                auto r = solve_path_or_cycle(g);
                record(Rule::path_or_cycle, origin, mapped(r.witness, origin),
                       std::string(g.min_degree() == 2 ? "cycle" : "path") + " on " + std::to_string(g.size())
                           + " vertices");
                return;
            }
            if (claw_free && _kk1 && ! recognition::contains_induced(g, Graph(*_kk1, {}))) {
                auto r = solve_claw_kk1(g, *_kk1);
                auto & step = record(Rule::claw_kk1, origin, mapped(r.witness, origin),
                                     "independent sets below size " + std::to_string(*_kk1));
                step.parameter = *_kk1;
                return;
            }
            if (claw_free && _k3_2k1 && ! recognition::contains_induced(g, k3_2k1())) {
                auto r = solve_claw_k3_2k1(g);
                record(Rule::claw_k3_2k1, origin, mapped(r.witness, origin), "gamma <= 4 around a triangle");
                return;
            }
            if (g.size() <= p8_rule_limit)
                if (auto p8 = recognition::find_induced_path(g, 8)) {
                    VertexSet around(g.size());
                    for (int v : p8->map)
                        around |= g.closed_neighborhood(v);
                    if (around == g.all_vertices()) {
                        auto r = bounded_gamma_solve(g, 8);
                        std::vector<int> path;
                        for (int v : p8->map)
                            path.push_back(origin[v]);
                        auto & step = record(Rule::bounded_gamma, origin, mapped(r->witness, origin),
                                             "induced P8 dominates the component, gamma <= 8");
                        step.structure = std::move(path);
                        step.parameter = 8;
                        return;
                    }
                }
            auto r = mds::min_dominating(g, _options);
            _explored += r.explored;
            record(Rule::exact_fallback, origin, mapped(r.witness, origin),
                   _fallback_note.empty() ? "no structural rule applies, exact search" : _fallback_note);
        }

        auto finish() -> DispatchResult
        {
            DispatchResult out;
            out.result = result_of(_chosen, _explored);
            out.trace = std::move(_trace);
            return out;
        }

    private:
        auto mapped(const VertexSet & s, const std::vector<int> & origin) -> std::vector<int>
        {
            std::vector<int> out;
            s.for_each([&](int v) { out.push_back(origin[v]); });
            return out;
        }

        auto record(Rule rule, const std::vector<int> & origin, std::vector<int> chosen, std::string evidence)
            -> TraceStep &
        {
            for (int v : chosen)
                _chosen.set(v);
            std::vector<int> vertices = origin;
            std::sort(vertices.begin(), vertices.end());
            std::sort(chosen.begin(), chosen.end());
            _trace.steps.push_back({rule, std::move(vertices), std::move(chosen), {}, 0, std::move(evidence)});
            return _trace.steps.back();
        }

        VertexSet _chosen;
        std::uint64_t _explored = 0;
        StrategyTrace _trace;
        mds::SolverOptions _options;
        std::optional<int> _kk1;
        bool _k3_2k1 = false;
        std::string _fallback_note;
    };
}

auto dispatch_solve(const Graph & g, const std::optional<Graph> & h, const mds::SolverOptions & options)
    -> DispatchResult
{
    Dispatcher d(g, h, options);
    std::vector<int> origin(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v)
        origin[v] = v;
    d.solve(g, origin);
    return d.finish();
}

auto replay_trace(const Graph & g, const StrategyTrace & trace) -> std::optional<std::string>
{
    VertexSet chosen(g.size());
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto & step = trace.steps[i];
        auto where = "step " + std::to_string(i + 1) + " (" + to_string(step.rule) + "): ";
        for (int v : step.chosen) {
            if (! std::binary_search(step.vertices.begin(), step.vertices.end(), v))
                return where + "chosen vertex outside the step";
            chosen.set(v);
        }
        auto piece = induced_subgraph(g, step.vertices);
        auto free_of = [&](const Graph & h) { return ! recognition::contains_induced(piece, h); };
        switch (step.rule) {
        case Rule::component_split:
            if (is_connected(piece))
                return where + "piece is connected";
            break;
        case Rule::leaf_reduction:
            if (! free_of(claw()) || step.chosen.empty())
                return where + "needs a claw-free piece and a forced vertex";
            break;
        case Rule::path_or_cycle:
            if (! is_connected(piece) || piece.max_degree() > 2
                || static_cast<int>(step.chosen.size()) != (piece.size() + 2) / 3)
                return where + "not a path or cycle solved at ceil(n/3)";
            break;
        case Rule::claw_kk1:
            if (! free_of(claw()) || step.parameter < 1 || ! free_of(Graph(step.parameter, {})))
                return where + "piece is not (claw, kK1)-free";
            break;
        case Rule::claw_k3_2k1:
            if (! is_connected(piece) || ! free_of(claw()) || ! free_of(k3_2k1()))
                return where + "piece is not connected (claw, K3+2K1)-free";
            break;
        case Rule::bounded_gamma: {
            if (step.structure.size() != 8 || static_cast<int>(step.chosen.size()) > step.parameter)
                return where + "bound or structure missing";
            VertexSet around(g.size());
            for (int v : step.structure)
                around |= g.closed_neighborhood(v);
            for (int v : step.vertices)
                if (! around.test(v))
                    return where + "P8 does not dominate the piece";
            if (! recognition::verify_embedding(g, path_graph(8), recognition::Embedding{step.structure}))
                return where + "structure is not an induced P8";
            break;
        }
        case Rule::exact_fallback:
            break;
        }
    }
    if (! mds::is_dominating(g, chosen))
        return std::string("replayed set does not dominate the graph");
    return std::nullopt;
}

} // namespace dominion::poly
