#include <dominion/gadget.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dominion::gadgets {

using nlohmann::json;

auto parse_gadget_json(const std::string & text) -> GadgetSpec
{
    json doc;
    try {
        doc = json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw GadgetError(std::string("gadget file is not valid JSON: ") + e.what());
    }
    try {
        GadgetSpec spec;
        spec.name = doc.value("name", std::string("gadget"));
        int n = doc.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto & e : doc.at("edges")) {
            auto pair = e.get<std::vector<int>>();
            if (pair.size() != 2)
                throw GadgetError("edge entries must be pairs");
            edges.emplace_back(pair[0] - 1, pair[1] - 1);
        }
        spec.graph = Graph(n, edges);
        for (int c : doc.at("corners").get<std::vector<int>>())
            spec.corners.push_back(c - 1);
        spec.gamma = doc.at("gamma").get<int>();
        spec.forbidden = doc.value("forbidden", std::vector<std::string>{});
        for (int i : doc.value("stretch_edges", std::vector<int>{})) {
            if (i < 0 || i >= static_cast<int>(edges.size()))
                throw GadgetError("stretch edge index " + std::to_string(i) + " out of range");
            spec.stretch_edges.push_back(edges[i]);
        }
        spec.edge_paths = doc.value("edge_paths", false);
        spec.internal_regular = doc.value("internal_regular", true);

        // degrees default to what the graph shows at the first corner / first non-corner
        spec.corner_degree = doc.contains("corner_degree") ? doc["corner_degree"].get<int>()
            : (! spec.corners.empty() && spec.corners.front() >= 0 && spec.corners.front() < n)
            ? spec.graph.degree(spec.corners.front())
            : 2;
        spec.internal_degree = 3;
        if (doc.contains("internal_degree"))
            spec.internal_degree = doc["internal_degree"].get<int>();
        else
            for (int v = 0; v < n; ++v)
                if (std::find(spec.corners.begin(), spec.corners.end(), v) == spec.corners.end()) {
                    spec.internal_degree = spec.internal_regular ? spec.graph.degree(v) : spec.graph.max_degree();
                    break;
                }
        return spec;
    }
    catch (const json::exception & e) {
        throw GadgetError(std::string("malformed gadget file: ") + e.what());
    }
    catch (const GraphError & e) {
        throw GadgetError(std::string("gadget graph: ") + e.what());
    }
}

auto to_gadget_json(const GadgetSpec & spec) -> std::string
{
    json doc;
    doc["name"] = spec.name;
    doc["n"] = spec.graph.size();
    auto edges = spec.graph.edges();
    json list = json::array();
    for (auto [u, v] : edges)
        list.push_back({u + 1, v + 1});
    doc["edges"] = list;
    json corners = json::array();
    for (int c : spec.corners)
        corners.push_back(c + 1);
    doc["corners"] = corners;
    doc["gamma"] = spec.gamma;
    doc["forbidden"] = spec.forbidden;
    doc["corner_degree"] = spec.corner_degree;
    doc["internal_degree"] = spec.internal_degree;
    if (! spec.internal_regular)
        doc["internal_regular"] = false;
    if (! spec.stretch_edges.empty()) {
        json indices = json::array();
        for (auto [u, v] : spec.stretch_edges) {
            auto it = std::find(edges.begin(), edges.end(), Edge{std::min(u, v), std::max(u, v)});
            indices.push_back(it - edges.begin());
        }
        doc["stretch_edges"] = indices;
    }
    if (spec.edge_paths)
        doc["edge_paths"] = true;
    // one key per line, values compact, in a fixed order
    std::string out = "{\n";
    bool first = true;
    for (const char * key : {"name", "n", "corners", "gamma", "corner_degree", "internal_degree", "internal_regular",
                             "forbidden", "edge_paths", "stretch_edges", "edges"}) {
        if (! doc.contains(key))
            continue;
        out += first ? "  " : ",\n  ";
        out += json(key).dump() + ": " + doc[key].dump();
        first = false;
    }
    return out + "\n}\n";
}

auto read_gadget_file(const std::filesystem::path & path) -> GadgetSpec
{
    std::ifstream in(path);
    if (! in)
        throw GadgetError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_gadget_json(buffer.str());
}

auto write_gadget_file(const GadgetSpec & spec, const std::filesystem::path & path) -> void
{
    std::ofstream out(path);
    if (! out)
        throw GadgetError("cannot write " + path.string());
    out << to_gadget_json(spec);
}

} // namespace dominion::gadgets
