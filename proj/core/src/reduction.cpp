#include <dominion/reduction.hpp>
#include <dominion/graph_io.hpp>
#include <dominion/named_graphs.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dominion::reductions {

namespace {
    auto require_regular(const Graph & g, int d, const std::string & what) -> void
    {
        if (g.size() == 0 || g.regular_degree() != d)
            throw ReductionError("source graph is not " + what);
    }

    auto rank_of(const Graph & g, int v, int neighbour) -> int
    {
        int r = 0;
        g.neighbors(v).for_each([&](int u) { r += u < neighbour; });
        return r;
    }

    /// One copy of the gadget per source vertex; source edges join the assigned corners, optionally through a path.
    auto substitute(const Graph & g, const gadgets::GadgetSpec & spec, int path_length, std::string mode)
        -> ReductionResult
    {
        int block = spec.graph.size();
        GraphBuilder b(g.size() * block);
        ReductionResult r;
        r.mode = std::move(mode);
        for (int v = 0; v < g.size(); ++v) {
            int first = v * block;
            r.placement.push_back({first, block});
            for (int j = 0; j < block; ++j)
                b.set_label(first + j, "v" + std::to_string(v + 1) + "." + std::to_string(j + 1));
            for (auto [x, y] : spec.graph.edges())
                b.add_edge(first + x, first + y);
        }
        for (auto [u, v] : g.edges()) {
            Wire w;
            w.source = {u, v};
            w.end_u = u * block + spec.corners[rank_of(g, u, v)];
            w.end_v = v * block + spec.corners[rank_of(g, v, u)];
            int previous = w.end_u;
            for (int i = 0; i < path_length; ++i) {
                int a = b.add_vertex("e" + std::to_string(u + 1) + "-" + std::to_string(v + 1) + "." + std::to_string(i + 1));
                b.add_edge(previous, a);
                w.path.push_back(a);
                previous = a;
            }
            b.add_edge(previous, w.end_v);
            r.wiring.push_back(std::move(w));
        }
        r.output = b.build();
        return r;
    }

    auto require_free(const Graph & out, const std::vector<std::string> & names) -> void
    {
        auto report = recognition::check_class(out, recognition::patterns_from_names(names));
        if (! report.is_free())
            throw ReductionError("output contains forbidden pattern " + report.forbidden_hits.front().pattern);
    }

    auto require_corners(const gadgets::GadgetSpec & spec, int count) -> void
    {
        if (static_cast<int>(spec.corners.size()) != count)
            throw ReductionError("gadget " + spec.name + " needs " + std::to_string(count) + " corners");
        if (spec.corner_degree != 2 || spec.internal_degree != 3)
            throw ReductionError("gadget " + spec.name + " needs corner degree 2 and internal degree 3");
    }
}

auto reduce_4reg_to_cubic(const Graph & g, const gadgets::VerifiedGadget & gadget) -> ReductionResult
{
    require_regular(g, 4, "4-regular");
    const auto & spec = gadget.spec();
    require_corners(spec, 4);
    auto r = substitute(g, spec, 0, "cubic");
    r.offset = (spec.gamma - 1) * g.size();
    if (r.output.regular_degree() != 3)
        throw ReductionError("output is not cubic");
    require_free(r.output, spec.forbidden);
    return r;
}

auto reduce_cubic_butterfly(const Graph & g, const gadgets::VerifiedGadget & gadget) -> ReductionResult
{
    require_regular(g, 3, "cubic");
    const auto & spec = gadget.spec();
    require_corners(spec, 3);
    auto r = substitute(g, spec, 0, "butterfly");
    r.offset = (spec.gamma - 1) * g.size();
    if (r.output.regular_degree() != 3)
        throw ReductionError("output is not cubic");
    require_free(r.output, spec.forbidden);
    return r;
}

auto reduce_cubic_to_odd_regular(const Graph & g, int k) -> ReductionResult
{
    if (k < 5 || k % 2 == 0)
        throw ReductionError("k must be odd and at least 5");
    require_regular(g, 3, "cubic");
    int copies = (k - 3) / 2;
    int block = 1 + copies * (k + 1);
    auto clique = complete_minus_edge(k + 1);
    int s = k - 1, t = k;

    GraphBuilder b(g.size() * block);
    ReductionResult r;
    r.mode = "odd:" + std::to_string(k);
    for (int v = 0; v < g.size(); ++v) {
        int first = v * block;
        r.placement.push_back({first, block});
        b.set_label(first, "v" + std::to_string(v + 1));
        for (int c = 0; c < copies; ++c) {
            int base = first + 1 + c * (k + 1);
            for (int j = 0; j <= k; ++j)
                b.set_label(base + j, "v" + std::to_string(v + 1) + ".k" + std::to_string(c + 1) + "." + std::to_string(j + 1));
            for (auto [x, y] : clique.edges())
                b.add_edge(base + x, base + y);
            b.add_edge(first, base + s);
            b.add_edge(first, base + t);
        }
    }
    for (auto [u, v] : g.edges()) {
        b.add_edge(u * block, v * block);
        r.wiring.push_back({{u, v}, u * block, v * block, {}});
    }
    r.output = b.build();
    r.offset = copies * g.size();
    if (r.output.regular_degree() != k)
        throw ReductionError("output is not " + std::to_string(k) + "-regular");
    return r;
}

auto reduce_stretch_family(const Graph & g, const gadgets::GadgetSpec & templ, int p, StretchMode mode)
    -> ReductionResult
{
    if (p < 1)
        throw ReductionError("stretch needs p >= 1");
    if (templ.stretch_edges.empty())
        throw ReductionError("template " + templ.name + " declares no stretch edges");
    bool ck = mode == StretchMode::ck_free;
    require_regular(g, ck ? 4 : 3, ck ? "4-regular" : "cubic");
    if (static_cast<int>(templ.corners.size()) != (ck ? 4 : 3))
        throw ReductionError("template " + templ.name + " needs " + std::string(ck ? "4" : "3") + " corners");

    gadgets::GadgetSpec stretched;
    try {
        stretched = gadgets::stretch_gadget(templ, p);
    }
    catch (const gadgets::GadgetError & e) {
        throw ReductionError(e.what());
    }
    auto r = substitute(g, stretched, templ.edge_paths ? 3 * p : 0, (ck ? "ck:" : "kdt:") + std::to_string(p));
    r.offset = (stretched.gamma - 1) * g.size() + (templ.edge_paths ? p * g.edge_count() : 0);

    if (r.output.max_degree() > 3)
        throw ReductionError("output has a vertex of degree above 3");
    if (! recognition::is_claw_free(r.output))
        throw ReductionError("output contains a claw");
    if (ck) {
        auto hole = recognition::shortest_hole(r.output);
        if (hole && *hole <= 12 * p)
            throw ReductionError("output has an induced cycle of length " + std::to_string(*hole));
    }
    else if (6 + 3 * p - 1 <= recognition::max_pattern_vertices) {
        if (recognition::contains_induced(r.output, double_triangle(3 * p - 1)))
            throw ReductionError("output contains a " + std::to_string(3 * p - 1) + "-double-triangle");
    }
    return r;
}

auto verify_reduction(const Graph & source, const ReductionResult & r, const mds::SolverOptions & options)
    -> ReductionCheck
{
    auto fast = options;
    fast.canonical_witness = false;
    ReductionCheck check;
    check.offset = r.offset;
    check.source_gamma = mds::min_dominating(source, fast).size;
    check.output_gamma = mds::min_dominating(r.output, fast).size;
    check.holds = check.output_gamma == check.source_gamma + r.offset;
    return check;
}

using nlohmann::json;

auto write_reduction(const ReductionResult & r, const std::filesystem::path & dir) -> void
{
    std::filesystem::create_directories(dir);
    write_graph_file(r.output, dir / "output.graph");
    json doc;
    doc["mode"] = r.mode;
    doc["offset"] = r.offset;
    json placement = json::array();
    for (const auto & p : r.placement)
        placement.push_back({p.first + 1, p.count});
    doc["placement"] = placement;
    json wiring = json::array();
    for (const auto & w : r.wiring) {
        std::vector<int> path;
        for (int v : w.path)
            path.push_back(v + 1);
        wiring.push_back({{"source", {w.source.first + 1, w.source.second + 1}},
                          {"ends", {w.end_u + 1, w.end_v + 1}},
                          {"path", path}});
    }
    doc["wiring"] = wiring;
    std::ofstream out(dir / "reduction.json");
    if (! out)
        throw ReductionError("cannot write " + (dir / "reduction.json").string());
    out << doc.dump(2) << "\n";
}

auto read_reduction(const std::filesystem::path & dir) -> ReductionResult
{
    ReductionResult r;
    std::ifstream in(dir / "reduction.json");
    if (! in)
        throw ReductionError("cannot open " + (dir / "reduction.json").string());
    r.output = read_graph_file(dir / "output.graph");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        auto doc = json::parse(buffer.str());
        r.mode = doc.at("mode").get<std::string>();
        r.offset = doc.at("offset").get<int>();
        for (const auto & p : doc.at("placement"))
            r.placement.push_back({p.at(0).get<int>() - 1, p.at(1).get<int>()});
        for (const auto & w : doc.at("wiring")) {
            Wire wire;
            wire.source = {w.at("source").at(0).get<int>() - 1, w.at("source").at(1).get<int>() - 1};
            wire.end_u = w.at("ends").at(0).get<int>() - 1;
            wire.end_v = w.at("ends").at(1).get<int>() - 1;
            for (int v : w.at("path").get<std::vector<int>>())
                wire.path.push_back(v - 1);
            r.wiring.push_back(std::move(wire));
        }
    }
    catch (const json::exception & e) {
        throw ReductionError(std::string("malformed reduction.json: ") + e.what());
    }
    return r;
}

} // namespace dominion::reductions
