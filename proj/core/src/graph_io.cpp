#include <dominion/graph_io.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace dominion {

namespace {
    auto split_tokens(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        return tokens;
    }

    auto to_int(std::string_view token, int line) -> long long
    {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
        return value;
    }
}

auto parse_graph(std::string_view text) -> Graph
{
    int n = -1;
    long long declared_edges = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0] == "c")
            continue;

        if (tokens[0] == "p") {
            if (n >= 0)
                throw ParseError(line_no, "second problem line");
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
            auto nv = to_int(tokens[2], line_no);
            declared_edges = to_int(tokens[3], line_no);
            if (nv < 0 || nv > Graph::max_vertices)
                throw ParseError(line_no, "vertex count out of range");
            if (declared_edges < 0)
                throw ParseError(line_no, "negative edge count");
            n = static_cast<int>(nv);
        }
        else if (tokens[0] == "e") {
            if (tokens.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            auto u = to_int(tokens[1], line_no);
            auto v = to_int(tokens[2], line_no);
            if (u == v)
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            if (n < 0)
                throw ParseError(line_no, "edge before problem line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
            Edge e{static_cast<int>(std::min(u, v)) - 1, static_cast<int>(std::max(u, v)) - 1};
            if (! seen.insert(e).second)
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            edges.push_back(e);
        }
        else
            throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    }

    if (n < 0)
        throw ParseError(line_no, "missing problem line");
    if (static_cast<long long>(edges.size()) != declared_edges)
        throw ParseError(line_no, "declared " + std::to_string(declared_edges) + " edges, found "
                + std::to_string(edges.size()));
    return Graph(n, edges);
}

auto read_graph_file(const std::filesystem::path & path) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw GraphError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

auto write_graph(const Graph & g) -> std::string
{
    std::string out = "p edge " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

auto write_graph_file(const Graph & g, const std::filesystem::path & path) -> void
{
    std::ofstream out(path);
    if (! out)
        throw GraphError("cannot write " + path.string());
    out << write_graph(g);
}

auto to_graph6(const Graph & g) -> std::string
{
    std::string out;
    int n = g.size();
    if (n <= 62)
        out.push_back(static_cast<char>(63 + n));
    else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int bits = 0, acc = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = acc = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

auto from_graph6(std::string_view code) -> Graph
{
    if (code.empty())
        throw GraphError("empty graph6 string");
    std::size_t pos = 0;
    int n = 0;
    if (code[0] == 126) {
        if (code.size() < 4)
            throw GraphError("truncated graph6 size");
        n = ((code[1] - 63) << 12) | ((code[2] - 63) << 6) | (code[3] - 63);
        pos = 4;
    }
    else {
        n = code[0] - 63;
        pos = 1;
    }
    if (n < 0)
        throw GraphError("invalid graph6 size byte");
    std::vector<Edge> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            std::size_t byte = pos + static_cast<std::size_t>(bit / 6);
            if (byte >= code.size())
                throw GraphError("truncated graph6 body");
            int value = code[byte] - 63;
            if (value < 0 || value > 63)
                throw GraphError("invalid graph6 character");
            if ((value >> (5 - bit % 6)) & 1)
                edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

} // namespace dominion
