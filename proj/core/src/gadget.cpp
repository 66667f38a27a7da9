#include <dominion/gadget.hpp>
#include <dominion/named_graphs.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace dominion::gadgets {

namespace {
    auto corner_problem(const GadgetSpec & spec) -> std::optional<std::string>
    {
        int c = static_cast<int>(spec.corners.size());
        if (c < 3 || c > 4)
            return "gadget needs 3 or 4 corners, has " + std::to_string(c);
        std::vector<int> sorted = spec.corners;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return std::string("corners are not distinct");
        if (sorted.front() < 0 || sorted.back() >= spec.graph.size())
            return std::string("corner outside the gadget");
        return std::nullopt;
    }

    auto corner_set(const GadgetSpec & spec) -> VertexSet
    {
        return VertexSet::of(spec.graph.size(), spec.corners);
    }
}

auto structure_issue(const GadgetSpec & spec) -> std::optional<std::string>
{
    if (auto problem = corner_problem(spec))
        return problem;
    auto corners = corner_set(spec);
    const auto & g = spec.graph;
    for (int v = 0; v < g.size(); ++v) {
        int d = g.degree(v);
        if (corners.test(v)) {
            if (d != spec.corner_degree)
                return "corner " + std::to_string(v + 1) + " has degree " + std::to_string(d) + ", expected "
                    + std::to_string(spec.corner_degree);
        }
        else if (spec.internal_regular ? d != spec.internal_degree : d > spec.internal_degree)
            return "vertex " + std::to_string(v + 1) + " has degree " + std::to_string(d) + ", expected "
                + (spec.internal_regular ? "" : "at most ") + std::to_string(spec.internal_degree);
    }
    for (auto [u, v] : spec.stretch_edges)
        if (u < 0 || v < 0 || u >= g.size() || v >= g.size() || ! g.adjacent(u, v))
            return "stretch edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " is not a gadget edge";
    return std::nullopt;
}

auto verify_gadget(const GadgetSpec & spec, const mds::SolverOptions & options) -> GadgetReport
{
    const auto & h = spec.graph;
    if (h.size() > max_gadget_vertices)
        throw std::invalid_argument("gadget has " + std::to_string(h.size()) + " vertices, limit is "
                                    + std::to_string(max_gadget_vertices));
    GadgetReport report;
    report.structure_issue = structure_issue(spec);
    if (corner_problem(spec))
        return report;

    auto fast = options;
    fast.canonical_witness = false;
    auto corners = corner_set(spec);
    int g = spec.gamma;
    int c = static_cast<int>(spec.corners.size());

    auto whole = mds::min_dominating(h, fast);
    report.gamma = whole.size;
    report.explored += whole.explored;

    // p1: the corners extend to a minimum dominating set
    if (whole.size == g && g >= c) {
        VertexSet rest = h.all_vertices();
        rest -= h.closed_neighborhood(corners);
        auto out = mds::min_partial_dominating(h, {rest, h.all_vertices(), g - c}, options);
        report.explored += out.explored;
        if (out.status == mds::PartialStatus::found) {
            auto witness = out.result->witness;
            witness |= corners;
            report.p1 = witness.count() == g;
            report.p1_witness = witness;
        }
    }

    // p2: deleting a corner saves exactly one vertex, in a unique way that avoids the other corners
    report.p2 = true;
    for (int a : spec.corners) {
        CornerCheck check;
        check.corner = a;
        auto without = remove_vertex(h, a);
        auto back = [&](const VertexSet & s) {
            VertexSet out(h.size());
            s.for_each([&](int v) { out.set(v < a ? v : v + 1); });
            return out;
        };
        auto optima = mds::enumerate_min_dominating(without, 2, options);
        if (! optima.empty()) {
            check.gamma_without = optima.front().count();
            check.optimum = back(optima.front());
            check.unique = optima.size() == 1;
            if (optima.size() > 1)
                check.other_optimum = back(optima[1]);
            VertexSet others = corners;
            others.reset(a);
            check.avoids_corners = ! check.optimum.intersects(others);
        }
        else {
            check.gamma_without = 0;
            check.optimum = VertexSet(h.size());
            check.unique = true;
            check.avoids_corners = true;
        }
        report.p2 = report.p2 && check.passed(g);
        report.corners.push_back(std::move(check));
    }

    // p3: the non-corners need at least g - 1 vertices
    report.p3_budget = g - 2;
    if (g - 2 < 0)
        report.p3 = true;
    else {
        VertexSet inner = h.all_vertices();
        inner -= corners;
        auto out = mds::min_partial_dominating(h, {inner, h.all_vertices(), g - 2}, options);
        report.explored += out.explored;
        report.p3 = out.status == mds::PartialStatus::over_budget;
        if (out.status == mds::PartialStatus::found)
            report.p3_counterexample = out.result->witness;
    }

    report.forbidden_hits = recognition::check_class(h, recognition::patterns_from_names(spec.forbidden)).forbidden_hits;
    report.forbidden_ok = report.forbidden_hits.empty();
    return report;
}

auto describe_failure(const GadgetReport & report) -> std::string
{
    if (report.structure_issue)
        return "structure: " + *report.structure_issue;
    if (! report.p1)
        return "p1: gamma " + std::to_string(report.gamma) + ", corners do not extend to a minimum dominating set";
    if (! report.p2)
        for (const auto & c : report.corners)
            if (! c.unique || ! c.avoids_corners || c.gamma_without != report.gamma - 1)
                return "p2: corner " + std::to_string(c.corner + 1) + " (gamma without it "
                    + std::to_string(c.gamma_without) + (c.unique ? "" : ", optimum not unique")
                    + (c.avoids_corners ? "" : ", optimum uses another corner") + ")";
    if (! report.p3)
        return "p3: " + std::to_string(report.p3_budget) + " vertices dominate every non-corner";
    if (! report.forbidden_ok)
        return "forbidden pattern " + report.forbidden_hits.front().pattern + " embeds";
    return "ok";
}

auto VerifiedGadget::check(GadgetSpec spec, const mds::SolverOptions & options) -> VerifiedGadget
{
    auto report = verify_gadget(spec, options);
    if (! report.passed())
        throw GadgetError("gadget " + spec.name + " rejected: " + describe_failure(report));
    return VerifiedGadget(std::move(spec), std::move(report));
}

namespace {
    auto havel_hakimi_problem(std::vector<int> degrees) -> std::optional<std::string>
    {
        int total = std::accumulate(degrees.begin(), degrees.end(), 0);
        if (total % 2 != 0)
            return "degree sum " + std::to_string(total) + " is odd";
        while (true) {
            std::sort(degrees.rbegin(), degrees.rend());
            if (degrees.empty() || degrees.front() == 0)
                return std::nullopt;
            int d = degrees.front();
            degrees.erase(degrees.begin());
            if (d > static_cast<int>(degrees.size()))
                return std::string("degree sequence is not graphical");
            for (int i = 0; i < d; ++i)
                if (--degrees[i] < 0)
                    return std::string("degree sequence is not graphical");
        }
    }

    /// Every edge-superset of the pattern on its own vertices contains some forbidden pattern.
    auto closed_upwards(const Graph & pattern, const std::vector<recognition::NamedPattern> & forbidden) -> bool
    {
        std::vector<Edge> missing;
        for (int u = 0; u < pattern.size(); ++u)
            for (int v = u + 1; v < pattern.size(); ++v)
                if (! pattern.adjacent(u, v))
                    missing.emplace_back(u, v);
        if (missing.size() > 12)
            return false;
        for (std::uint32_t mask = 0; mask < (1U << missing.size()); ++mask) {
            auto edges = pattern.edges();
            for (std::size_t i = 0; i < missing.size(); ++i)
                if ((mask >> i) & 1U)
                    edges.push_back(missing[i]);
            Graph bigger(pattern.size(), edges);
            bool hit = std::any_of(forbidden.begin(), forbidden.end(), [&](const recognition::NamedPattern & f) {
                return f.graph.size() <= bigger.size() && recognition::contains_induced(bigger, f.graph);
            });
            if (! hit)
                return false;
        }
        return true;
    }

    class LabelledSearch {
    public:
        LabelledSearch(const SearchRequest & request, std::vector<recognition::NamedPattern> forbidden)
            : _n(request.n), _degree(static_cast<std::size_t>(request.n)), _current(static_cast<std::size_t>(request.n), 0),
              _rows(static_cast<std::size_t>(request.n), 0), _forbidden(std::move(forbidden))
        {
            for (int v = 0; v < _n; ++v)
                _degree[v] = v < request.corners ? request.corner_degree : request.internal_degree;
            for (const auto & f : _forbidden)
                if (closed_upwards(f.graph, _forbidden))
                    _as_subgraph.push_back(f.graph);
        }

        auto run(const std::function<void(const Graph &)> & leaf) -> void
        {
            _leaf = leaf;
            fill(0);
        }

    private:
        auto graph_of(int prefix) const -> Graph
        {
            std::vector<Edge> edges;
            for (int u = 0; u < prefix; ++u)
                for (int v = u + 1; v < prefix; ++v)
                    if ((_rows[u] >> v) & 1U)
                        edges.emplace_back(u, v);
            return Graph(prefix, edges);
        }

        auto pruned(int finished) const -> bool
        {
            if (! _as_subgraph.empty()) {
                auto partial = graph_of(_n);
                for (const auto & p : _as_subgraph)
                    if (recognition::contains_subgraph(partial, p))
                        return true;
            }
            auto prefix = graph_of(finished + 1);
            for (const auto & f : _forbidden)
                if (f.graph.size() <= prefix.size() && recognition::contains_induced(prefix, f.graph))
                    return true;
            return false;
        }

        auto fill(int v) -> void
        {
            if (v == _n) {
                _leaf(graph_of(_n));
                return;
            }
            int need = _degree[v] - _current[v];
            if (need < 0)
                return;
            std::vector<int> open;
            for (int w = v + 1; w < _n; ++w)
                if (_current[w] < _degree[w])
                    open.push_back(w);
            if (static_cast<int>(open.size()) < need)
                return;
            std::vector<int> pick;
            choose(v, open, 0, need, pick);
        }

        auto choose(int v, const std::vector<int> & open, std::size_t from, int need, std::vector<int> & pick) -> void
        {
            if (need == 0) {
                for (int w : pick)
                    link(v, w, +1);
                if (! pruned(v))
                    fill(v + 1);
                for (int w : pick)
                    link(v, w, -1);
                return;
            }
            for (std::size_t i = from; i + need <= open.size(); ++i) {
                pick.push_back(open[i]);
                choose(v, open, i + 1, need - 1, pick);
                pick.pop_back();
            }
        }

        auto link(int u, int v, int sign) -> void
        {
            _rows[u] ^= 1U << v;
            _rows[v] ^= 1U << u;
            _current[u] += sign;
            _current[v] += sign;
        }

        int _n;
        std::vector<int> _degree;
        std::vector<int> _current;
        std::vector<std::uint32_t> _rows;
        std::vector<recognition::NamedPattern> _forbidden;
        std::vector<Graph> _as_subgraph;
        std::function<void(const Graph &)> _leaf;
    };
}

auto search_gadget(const SearchRequest & request, const mds::SolverOptions & options) -> SearchOutcome
{
    if (request.n < 1 || request.n > 12)
        throw std::invalid_argument("gadget search covers 1 to 12 vertices");
    if (request.corners < 3 || request.corners > 4 || request.corners > request.n)
        throw std::invalid_argument("gadget search needs 3 or 4 corners");

    SearchOutcome outcome;
    std::vector<int> degrees;
    for (int v = 0; v < request.n; ++v)
        degrees.push_back(v < request.corners ? request.corner_degree : request.internal_degree);
    if (auto problem = havel_hakimi_problem(degrees)) {
        outcome.infeasible = *problem;
        return outcome;
    }

    auto forbidden = recognition::patterns_from_names(request.forbidden);
    std::vector<int> colors(static_cast<std::size_t>(request.n), 1);
    for (int v = 0; v < request.corners; ++v)
        colors[v] = 0;
    auto fast = options;
    fast.canonical_witness = false;

    std::map<std::vector<Edge>, Graph> classes;
    LabelledSearch(request, forbidden).run([&](const Graph & h) {
        ++outcome.labelled_graphs;
        for (const auto & f : forbidden)
            if (recognition::contains_induced(h, f.graph))
                return;
        if (mds::min_dominating(h, fast).size != request.gamma)
            return;
        auto form = recognition::canonical_form(h, colors);
        classes.emplace(form.graph.edges(), form.graph);
    });
    outcome.classes = classes.size();

    for (const auto & [edges, h] : classes) {
        GadgetSpec spec;
        spec.name = "search-n" + std::to_string(request.n) + "-c" + std::to_string(request.corners) + "-"
            + std::to_string(outcome.gadgets.size() + 1);
        spec.graph = h;
        for (int v = 0; v < request.corners; ++v)
            spec.corners.push_back(v);
        spec.gamma = request.gamma;
        spec.corner_degree = request.corner_degree;
        spec.internal_degree = request.internal_degree;
        spec.forbidden = request.forbidden;
        if (verify_gadget(spec, options).passed())
            outcome.gadgets.push_back(std::move(spec));
    }
    return outcome;
}

auto stretch_gadget(const GadgetSpec & spec, int p) -> GadgetSpec
{
    if (p < 1)
        throw std::invalid_argument("stretch needs p >= 1");
    if (auto problem = structure_issue(spec))
        throw GadgetError("template " + spec.name + ": " + *problem);
    const auto & h = spec.graph;
    int length = 3 * p;
    GraphBuilder b(h.size());
    if (h.has_labels())
        for (int v = 0; v < h.size(); ++v)
            b.set_label(v, h.label(v));
    auto stretched = [&](Edge e) {
        return std::find(spec.stretch_edges.begin(), spec.stretch_edges.end(), e) != spec.stretch_edges.end()
            || std::find(spec.stretch_edges.begin(), spec.stretch_edges.end(), Edge{e.second, e.first})
                != spec.stretch_edges.end();
    };
    for (auto e : h.edges())
        if (! stretched(e))
            b.add_edge(e.first, e.second);
    for (auto [x, y] : spec.stretch_edges) {
        int previous = x;
        for (int i = 0; i < length; ++i) {
            int a = b.add_vertex();
            b.add_edge(previous, a);
            previous = a;
        }
        b.add_edge(previous, y);
    }
    GadgetSpec out = spec;
    out.name = spec.name + "@p" + std::to_string(p);
    out.graph = b.build();
    out.gamma = spec.gamma + p * static_cast<int>(spec.stretch_edges.size());
    out.stretch_edges.clear();
    out.internal_regular = spec.stretch_edges.empty() && spec.internal_regular;
    return out;
}

} // namespace dominion::gadgets
