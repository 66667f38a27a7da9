#include <dominion/dichotomy.hpp>
#include <dominion/named_graphs.hpp>

#include <algorithm>
#include <stdexcept>

namespace dominion::dichotomy {

auto to_string(Verdict verdict) -> std::string
{
    switch (verdict) {
    case Verdict::np_complete: return "NP-complete";
    case Verdict::polynomial: return "Polynomial";
    case Verdict::open: return "Open";
    }
    return "?";
}

namespace {
    struct Kernel {
        std::string id;
        Graph graph;
        std::string citation;
    };

    auto kernels_for(int size) -> std::vector<Kernel>
    {
        std::vector<Kernel> kernels{
            {"claw", claw(), "(claw,H)-free equals claw-free when H contains a claw; claw-free domination is NP-complete"},
            {"diamond", diamond(), "NP-complete for (claw,diamond,K4,C4)-free perfect graphs (line graphs of bipartite graphs)"},
            {"K:4", complete_graph(4), "NP-complete for (claw,diamond,K4,C4)-free perfect graphs (line graphs of bipartite graphs)"},
            {"butterfly", butterfly(), "NP-complete for cubic (claw,butterfly,diamond,C4,C5,K4)-free graphs (9-vertex gadget reduction)"},
        };
        for (int k = 4; k <= size; ++k) {
            std::string why = k == 4
                ? "NP-complete for (claw,diamond,K4,C4)-free perfect graphs (line graphs of bipartite graphs)"
                : k == 5 ? "NP-complete for claw-free perfect graphs, which have no induced C5"
                         : "NP-complete for (claw,C4,...,Ck)-free graphs (stretched gadget reduction)";
            kernels.push_back({"C:" + std::to_string(k), cycle_graph(k), why});
        }
        for (int k = 0; k + 6 <= size; ++k)
            kernels.push_back({"dt:" + std::to_string(k), double_triangle(k),
                               "NP-complete for (claw,k-double-triangle)-free subcubic graphs (stretched gadget reduction)"});
        return kernels;
    }

    const std::string two_triangle_citation =
        "NP-complete when a component of H holds two distinct triangles (reduces to a smaller kernel)";

    auto citation_of(const std::string & kernel) -> std::string
    {
        if (kernel == "two-triangles")
            return two_triangle_citation;
        for (const auto & k : kernels_for(64))
            if (k.id == kernel)
                return k.citation;
        return {};
    }

    struct Family {
        std::string reason;
        std::string spec;
        std::string citation;
    };

    const std::vector<Family> & bases()
    {
        static const std::vector<Family> list{
            {"cycle-only", "K:3", "connected (claw,K3)-free graphs are paths and cycles"},
            {"subgraph-of-net", "net", "polynomial for (claw,net)-free graphs [external algorithm]"},
            {"subgraph-of-P8", "P:8", "polynomial for (claw,P8)-free graphs [external algorithm]"},
            {"co-claw", "K:3+K:1", "(claw,co-claw)-free graphs have bounded clique-width [external algorithm]"},
            {"K3+2K1", "K:3+2xK:1", "a triangle T with N[T] != V forces the rest to be a clique, so gamma <= 4"},
            {"K3+K2", "K:3+K:2", "an induced P8 with a vertex outside N[P8] yields K3+K2, so N[P8] = V and gamma <= 8"},
            {"paw+K1", "paw+K:1", "an induced P8 with a vertex outside N[P8] yields paw+K1, so N[P8] = V and gamma <= 8"},
            {"(2,0,0)-triangle", "tri:2,0,0", "an induced P8 with a vertex outside N[P8] yields the (2,0,0)-triangle, so gamma <= 8"},
            {"2K2-family", "2xK:2", "polynomial for 2K2-free graphs [external algorithm]"},
        };
        return list;
    }

    const std::vector<std::string> & h6_list()
    {
        static const std::vector<std::string> list{"K:3+P:3", "tri:3,0,0", "tri:2,0,0+K:1", "2xK:3", "P:3+3xK:1",
            "2xK:2+2xK:1", "paw+2xK:1", "bull+K:1", "K:3+K:2+K:1", "paw+K:2", "tri:2,1,0", "K:2+4xK:1", "K:3+3xK:1"};
        return list;
    }

    const std::string h6_citation =
        "a longest induced path of 8 or more vertices with a vertex outside its closed neighbourhood yields H, "
        "so either (claw,P8)-free or gamma <= 8";
    const std::string h5_citation = "every other claw-free H on five vertices lies in a polynomial family";
    const std::string kk1_citation = "claw-free means gamma = i <= alpha < k, so independent sets below size k suffice";

    auto is_edgeless(const Graph & h) -> bool { return h.edge_count() == 0; }

    auto same_class(const Graph & a, const Graph & b) -> bool
    {
        return a.size() == b.size() && a.edge_count() == b.edge_count() && recognition::isomorphic(a, b).has_value();
    }

    auto in_h6_list(const Graph & h) -> bool
    {
        return std::any_of(h6_list().begin(), h6_list().end(),
                           [&](const std::string & s) { return same_class(h, parse_graph_spec(s)); });
    }

    auto base_holds(const Graph & h, const Family & family) -> bool
    {
        auto base = parse_graph_spec(family.spec);
        if (family.reason == "cycle-only")
            return same_class(h, base);
        return h.size() <= base.size() && recognition::contains_induced(base, h).has_value();
    }
}

auto hardness_witness(const Graph & h) -> std::optional<HardnessWitness>
{
    for (auto & kernel : kernels_for(h.size()))
        if (kernel.graph.size() <= h.size())
            if (auto e = recognition::contains_induced(h, kernel.graph))
                return HardnessWitness{kernel.id, std::move(kernel.graph), std::move(*e)};
    if (auto two = recognition::has_two_triangle_component(h)) {
        std::vector<int> members(two->first.begin(), two->first.end());
        members.insert(members.end(), two->second.begin(), two->second.end());
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return HardnessWitness{"two-triangles", induced_subgraph(h, members), recognition::Embedding{members}};
    }
    return std::nullopt;
}

auto reason_holds(const Graph & h, const std::string & reason) -> bool
{
    if (reason == "kK1")
        return is_edgeless(h);
    if (reason == "H6-list")
        return h.size() == 6 && in_h6_list(h);
    if (reason == "H5-list")
        return h.size() == 5 && recognition::is_claw_free(h) && ! hardness_witness(h);
    for (const auto & family : bases())
        if (family.reason == reason)
            return base_holds(h, family);
    return false;
}

auto classify(const Graph & h) -> Classification
{
    Classification c;
    if (auto witness = hardness_witness(h)) {
        c.verdict = Verdict::np_complete;
        c.citation = citation_of(witness->kernel);
        c.witness = std::move(witness);
        return c;
    }
    c.verdict = Verdict::polynomial;
    if (h.size() <= 8 || is_edgeless(h)) {
        for (const auto & family : bases())
            if (base_holds(h, family)) {
                c.reason = family.reason;
                c.citation = family.citation;
                return c;
            }
        if (is_edgeless(h)) {
            c.reason = "kK1";
            c.citation = kk1_citation;
            return c;
        }
        if (h.size() == 5) {
            c.reason = "H5-list";
            c.citation = h5_citation;
            return c;
        }
        if (h.size() == 6) {
            c.reason = "H6-list";
            c.citation = h6_citation;
            return c;
        }
        if (h.size() < 5) {
            // every claw-free graph on at most four vertices without a kernel is in a base family
            c.reason = "subgraph-of-P8";
            c.citation = bases()[2].citation;
            return c;
        }
    }
    c.verdict = Verdict::open;
    c.reason.clear();
    c.citation = "no hardness kernel and no known polynomial family for graphs of this size";
    return c;
}

auto catalog_name(const Graph & h) -> std::string
{
    static const std::vector<std::pair<std::string, Graph>> catalog = [] {
        std::vector<std::string> specs{"K:1", "K:2", "2xK:1", "K:3", "P:3", "K:2+K:1", "3xK:1", "K:4", "diamond",
            "C:4", "paw", "P:4", "claw", "K:3+K:1", "P:3+K:1", "2xK:2", "K:2+2xK:1", "4xK:1", "C:5", "K:5", "Kme:5",
            "~(P:3+2xK:1)", "W4", "~(claw+K:1)", "~(K:2+P:3)", "gem", "~(K:3+2xK:1)", "K:4+K:1", "C:4+K:1", "dart",
            "house", "diamond+K:1", "butterfly", "bull", "P:5", "P:3+2xK:1", "2xK:2+K:1", "K:2+3xK:1", "K:2+P:3",
            "P:4+K:1", "5xK:1", "paw+K:1", "tri:2,0,0", "K:3+2xK:1", "K:3+K:2", "net", "C:6", "dt:0", "P:6",
            "6xK:1", "K:6", "prism"};
        specs.insert(specs.end(), h6_list().begin(), h6_list().end());
        std::vector<std::pair<std::string, Graph>> out;
        for (const auto & s : specs)
            out.emplace_back(s, parse_graph_spec(s));
        return out;
    }();
    for (const auto & [name, g] : catalog)
        if (same_class(h, g))
            return name;
    return {};
}

auto classify_all(int n) -> std::vector<ClassRow>
{
    if (n > 6)
        throw std::invalid_argument("classify_all covers at most 6 vertices; the dichotomy is incomplete beyond");
    if (n < 1)
        throw std::invalid_argument("classify_all needs n >= 1");
    std::vector<ClassRow> rows;
    for (auto & g : recognition::graph_classes(n, false, recognition::is_claw_free)) {
        auto name = catalog_name(g);
        auto c = classify(g);
        rows.push_back({std::move(g), std::move(name), std::move(c)});
    }
    return rows;
}

} // namespace dominion::dichotomy
