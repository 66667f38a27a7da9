#include <dominion/named_graphs.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

namespace dominion {

namespace {
    auto require(bool ok, const std::string & what) -> void
    {
        if (! ok)
            throw GraphError(what);
    }

    auto arity(const NamedGraphId & id, std::size_t expected, const char * name) -> void
    {
        require(id.params.size() == expected,
                std::string(name) + " takes " + std::to_string(expected) + " parameter(s)");
    }
}

auto claw() -> Graph { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

auto diamond() -> Graph { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// u1 u2 u3 v1
auto paw() -> Graph { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

// u1 u2 u3 v1 v2
auto bull() -> Graph { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}); }

// u1 u2 u3 v1 v2 v3
auto net() -> Graph { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

// u1 u2 v v1 v2
auto butterfly() -> Graph { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 2}, {4, 2}}); }

// u1 u2 u3 u4 v
auto house() -> Graph { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}}); }

// u1 u2 u3 u4 v
auto gem() -> Graph { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }

auto path_graph(int n) -> Graph
{
    require(n >= 1, "P(n) needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

auto cycle_graph(int n) -> Graph
{
    require(n >= 3, "C(n) needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

auto complete_graph(int p) -> Graph
{
    require(p >= 1, "K(p) needs p >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v)
            edges.emplace_back(u, v);
    return Graph(p, edges);
}

auto multi_complete(int k, int p) -> Graph
{
    require(k >= 0 && p >= 1, "kK(p) needs k >= 0 and p >= 1");
    std::vector<Edge> edges;
    for (int c = 0; c < k; ++c)
        for (int u = 0; u < p; ++u)
            for (int v = u + 1; v < p; ++v)
                edges.emplace_back(c * p + u, c * p + v);
    return Graph(k * p, edges);
}

auto k_triangle(int k1, int k2, int k3) -> Graph
{
    require(k1 >= 0 && k2 >= 0 && k3 >= 0, "(k1,k2,k3)-triangle needs non-negative lengths");
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    int next = 3;
    int lengths[3] = {k1, k2, k3};
    for (int i = 0; i < 3; ++i) {
        int previous = i;
        for (int j = 0; j < lengths[i]; ++j) {
            edges.emplace_back(previous, next);
            previous = next++;
        }
    }
    return Graph(next, edges);
}

auto double_triangle(int k) -> Graph
{
    require(k >= 0, "k-double-triangle needs k >= 0");
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    int previous = 0;
    for (int j = 0; j < k; ++j) {
        edges.emplace_back(previous, 6 + j);
        previous = 6 + j;
    }
    edges.emplace_back(previous, 3);
    return Graph(6 + k, edges);
}

auto complete_minus_edge(int p) -> Graph
{
    require(p >= 2, "K(p)-e needs p >= 2");
    std::vector<Edge> edges;
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v)
            if (! (u == p - 2 && v == p - 1))
                edges.emplace_back(u, v);
    return Graph(p, edges);
}

auto wheel4() -> Graph
{
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

auto dart() -> Graph
{
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}});
}

auto petersen() -> Graph
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

auto prism() -> Graph
{
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

auto named_graph(const NamedGraphId & id) -> Graph
{
    const auto & p = id.params;
    switch (id.kind) {
    case NamedKind::claw: arity(id, 0, "claw"); return claw();
    case NamedKind::diamond: arity(id, 0, "diamond"); return diamond();
    case NamedKind::paw: arity(id, 0, "paw"); return paw();
    case NamedKind::bull: arity(id, 0, "bull"); return bull();
    case NamedKind::net: arity(id, 0, "net"); return net();
    case NamedKind::butterfly: arity(id, 0, "butterfly"); return butterfly();
    case NamedKind::house: arity(id, 0, "house"); return house();
    case NamedKind::gem: arity(id, 0, "gem"); return gem();
    case NamedKind::path: arity(id, 1, "P"); return path_graph(p[0]);
    case NamedKind::cycle: arity(id, 1, "C"); return cycle_graph(p[0]);
    case NamedKind::complete: arity(id, 1, "K"); return complete_graph(p[0]);
    case NamedKind::multi_complete: arity(id, 2, "kK"); return multi_complete(p[0], p[1]);
    case NamedKind::triangle: arity(id, 3, "tri"); return k_triangle(p[0], p[1], p[2]);
    case NamedKind::double_triangle: arity(id, 1, "dt"); return double_triangle(p[0]);
    case NamedKind::complete_minus_edge: arity(id, 1, "Kme"); return complete_minus_edge(p[0]);
    case NamedKind::wheel4: arity(id, 0, "W4"); return wheel4();
    case NamedKind::dart: arity(id, 0, "dart"); return dart();
    case NamedKind::petersen: arity(id, 0, "petersen"); return petersen();
    case NamedKind::prism: arity(id, 0, "prism"); return prism();
    }
    throw GraphError("unknown named graph");
}

namespace {
    class SpecParser {
    public:
        explicit SpecParser(std::string_view text) : _text(text) {}

        auto parse() -> Graph
        {
            auto g = spec();
            if (_pos != _text.size())
                fail("unexpected '" + std::string(1, _text[_pos]) + "'");
            return g;
        }

    private:
        auto spec() -> Graph
        {
            auto g = term();
            while (peek() == '+') {
                ++_pos;
                g = disjoint_union(g, term());
            }
            return g;
        }

        auto term() -> Graph
        {
            std::size_t save = _pos;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                int count = number();
                if (peek() == 'x') {
                    ++_pos;
                    auto one = factor();
                    Graph result(0, {});
                    for (int i = 0; i < count; ++i)
                        result = disjoint_union(result, one);
                    return result;
                }
                _pos = save;
            }
            return factor();
        }

        auto factor() -> Graph
        {
            if (peek() == '~') {
                ++_pos;
                return complement(factor());
            }
            if (peek() == '(') {
                ++_pos;
                auto g = spec();
                if (peek() != ')')
                    fail("missing ')'");
                ++_pos;
                return g;
            }
            return atom();
        }

        auto atom() -> Graph
        {
            std::size_t start = _pos;
            while (_pos < _text.size() && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_'))
                ++_pos;
            std::string name(_text.substr(start, _pos - start));
            if (name.empty())
                fail("expected a graph name");
            std::vector<int> params;
            if (peek() == ':') {
                ++_pos;
                params.push_back(number());
                while (peek() == ',') {
                    ++_pos;
                    params.push_back(number());
                }
            }
            static const std::map<std::string, NamedKind> names{
                {"claw", NamedKind::claw}, {"diamond", NamedKind::diamond}, {"paw", NamedKind::paw},
                {"bull", NamedKind::bull}, {"net", NamedKind::net}, {"butterfly", NamedKind::butterfly},
                {"house", NamedKind::house}, {"gem", NamedKind::gem}, {"P", NamedKind::path},
                {"C", NamedKind::cycle}, {"K", NamedKind::complete}, {"kK", NamedKind::multi_complete},
                {"tri", NamedKind::triangle}, {"dt", NamedKind::double_triangle},
                {"Kme", NamedKind::complete_minus_edge}, {"W4", NamedKind::wheel4}, {"dart", NamedKind::dart},
                {"petersen", NamedKind::petersen}, {"prism", NamedKind::prism}};
            auto it = names.find(name);
            if (it == names.end())
                fail("unknown graph name '" + name + "'");
            return named_graph({it->second, params});
        }

        auto number() -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(_text.data() + _pos, _text.data() + _text.size(), value);
            if (ec != std::errc{})
                fail("expected a number");
            _pos = static_cast<std::size_t>(ptr - _text.data());
            return value;
        }

        auto peek() const -> char { return _pos < _text.size() ? _text[_pos] : '\0'; }

        [[noreturn]] auto fail(const std::string & what) const -> void
        {
            throw GraphError("graph spec '" + std::string(_text) + "' at " + std::to_string(_pos) + ": " + what);
        }

        std::string_view _text;
        std::size_t _pos = 0;
    };
}

auto parse_graph_spec(std::string_view spec) -> Graph
{
    return SpecParser(spec).parse();
}

auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

auto random_regular(int n, int d, std::mt19937_64 & rng) -> Graph
{
    require(n > d && d >= 0 && (n * d) % 2 == 0, "no simple " + std::to_string(d) + "-regular graph on "
            + std::to_string(n) + " vertices");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i)
                points.push_back(v);
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Edge> edges;
        std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
        bool ok = true;
        for (std::size_t i = 0; i < points.size() && ok; i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v || rows[u].test(v))
                ok = false;
            else {
                rows[u].set(v);
                rows[v].set(u);
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
        if (ok)
            return Graph(n, edges);
    }
    throw GraphError("random_regular: too many rejected pairings");
}

} // namespace dominion
