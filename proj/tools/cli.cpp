#include "cli.hpp"

#include <dominion/dichotomy.hpp>
#include <dominion/gadget.hpp>
#include <dominion/graph_io.hpp>
#include <dominion/mds.hpp>
#include <dominion/named_graphs.hpp>
#include <dominion/poly_cases.hpp>
#include <dominion/recognition.hpp>
#include <dominion/reduction.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

namespace dominion::cli {
namespace {

namespace fs = std::filesystem;

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> node_cap;
    int jobs = 1;

    auto solver() const -> mds::SolverOptions
    {
        auto options = mds::default_options();
        if (node_cap)
            options.node_cap = *node_cap;
        options.jobs = jobs;
        return options;
    }
};

auto load_graph(const std::string & arg) -> Graph
{
    if (arg.rfind("g6:", 0) == 0)
        return from_graph6(arg.substr(3));
    if (fs::is_regular_file(arg))
        return read_graph_file(arg);
    return parse_graph_spec(arg);
}

/// "C4" and "K4" are accepted as shorthands for "C:4" and "K:4".
auto pattern_name(const std::string & name) -> std::string
{
    static const std::regex short_form("^(P|C|K|dt)([0-9]+)$");
    std::smatch m;
    if (std::regex_match(name, m, short_form))
        return m[1].str() + ":" + m[2].str();
    return name;
}

auto pattern_names(const std::vector<std::string> & names) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & n : names)
        out.push_back(pattern_name(n));
    return out;
}

auto read_vertex_file(const std::string & path, int n) -> VertexSet
{
    std::ifstream in(path);
    if (! in)
        throw DomainError("cannot open " + path);
    VertexSet s(n);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'c')
            continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream words(line);
        std::string word;
        while (words >> word) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(word, &used);
                if (used != word.size())
                    throw std::invalid_argument(word);
            }
            catch (const std::exception &) {
                throw DomainError(path + ": not a vertex id: " + word);
            }
            if (v < 1 || v > n)
                throw DomainError(path + ": vertex " + word + " outside 1.." + std::to_string(n));
            s.set(v - 1);
        }
    }
    return s;
}

auto ids(const std::vector<int> & vs, const char * sep = " ") -> std::string
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(vs[i] + 1);
    }
    return s;
}

auto ids(const VertexSet & s) -> std::string { return ids(s.members()); }

auto yes(bool b) -> const char * { return b ? "yes" : "no"; }

auto edge_text(const std::vector<Edge> & edges) -> std::string
{
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i)
            s += " ";
        s += std::to_string(edges[i].first + 1) + "-" + std::to_string(edges[i].second + 1);
    }
    return s;
}

auto parse_mode_parameter(const std::string & mode, const std::string & prefix) -> std::optional<int>
{
    if (mode.rfind(prefix, 0) != 0)
        return std::nullopt;
    auto rest = mode.substr(prefix.size());
    if (rest.empty() || ! std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw CLI::ValidationError("--mode", "expected " + prefix + "<integer>, got " + mode);
    return std::stoi(rest);
}

struct GenArgs {
    std::string kind;
    std::string spec;
    int n = 10;
    double p = 0.3;
    int degree = 3;
    std::string out;
};

auto cmd_gen(const GenArgs & a, const Globals & globals, std::ostream & out) -> int
{
    std::mt19937_64 rng(globals.seed);
    Graph g;
    if (a.kind == "named") {
        if (a.spec.empty())
            throw CLI::ValidationError("spec", "gen named needs a graph spec");
        g = parse_graph_spec(a.spec);
    }
    else if (a.kind == "random")
        g = random_graph(a.n, a.p, rng);
    else if (a.kind == "regular")
        g = random_regular(a.n, a.degree, rng);
    else if (a.kind == "claw-free") {
        bool found = false;
        for (int attempt = 0; attempt < 100000 && ! found; ++attempt) {
            g = random_graph(a.n, a.p, rng);
            found = recognition::is_claw_free(g);
        }
        if (! found)
            throw DomainError("no claw-free graph after 100000 samples; lower --p or --n");
    }
    if (a.out.empty())
        out << write_graph(g);
    else {
        write_graph_file(g, a.out);
        out << "p edge " << g.size() << " " << g.edge_count() << "\n";
    }
    return exit_code::success;
}

struct SolveArgs {
    std::string graph;
    bool independent = false;
    bool edges = false;
    std::string partial;
    std::string allowed;
    std::optional<int> budget;
    std::optional<std::size_t> enumerate;
    std::string strategy = "exact";
    std::string forbidden;
};

auto cmd_solve(const SolveArgs & a, const Globals & globals, std::ostream & out) -> int
{
    auto g = load_graph(a.graph);
    auto options = globals.solver();
    auto explored = [&](std::uint64_t count) {
        // node counts under several workers depend on scheduling
        if (globals.jobs == 1)
            out << "explored " << count << "\n";
    };

    if (a.strategy == "auto") {
        std::optional<Graph> h;
        if (! a.forbidden.empty())
            h = parse_graph_spec(pattern_name(a.forbidden));
        auto d = poly::dispatch_solve(g, h, options);
        out << "gamma " << d.result.size << "\n";
        out << "kind dispatch\n";
        out << "set " << ids(d.result.witness) << "\n";
        for (const auto & step : d.trace.steps) {
            out << "step " << poly::to_string(step.rule) << " vertices=" << ids(step.vertices, ",")
                << " chosen=" << ids(step.chosen, ",");
            if (! step.structure.empty())
                out << " structure=" << ids(step.structure, ",");
            if (step.parameter)
                out << " parameter=" << step.parameter;
            if (! step.evidence.empty())
                out << " :: " << step.evidence;
            out << "\n";
        }
        return exit_code::success;
    }

    if (a.edges) {
        auto r = mds::min_edge_dominating(g, options);
        out << "gamma " << r.size << "\n";
        out << "kind edge\n";
        out << "edges " << edge_text(r.edges) << "\n";
        return exit_code::success;
    }

    if (a.independent) {
        auto r = mds::min_independent_dominating(g, options);
        out << "gamma " << r.size << "\n";
        out << "kind independent\n";
        out << "set " << ids(r.witness) << "\n";
        explored(r.explored);
        return exit_code::success;
    }

    if (! a.partial.empty() || ! a.allowed.empty() || a.budget) {
        auto targets = a.partial.empty() ? g.all_vertices() : read_vertex_file(a.partial, g.size());
        auto allowed = a.allowed.empty() ? g.all_vertices() : read_vertex_file(a.allowed, g.size());
        auto r = mds::min_partial_dominating(g, {targets, allowed, a.budget}, options);
        switch (r.status) {
        case mds::PartialStatus::infeasible:
            out << "infeasible target " << *r.uncoverable_target + 1 << "\n";
            return exit_code::domain_error;
        case mds::PartialStatus::over_budget:
            out << "over-budget " << *a.budget << "\n";
            return exit_code::domain_error;
        case mds::PartialStatus::found:
            break;
        }
        out << "gamma " << r.result->size << "\n";
        out << "kind partial\n";
        out << "set " << ids(r.result->witness) << "\n";
        explored(r.explored);
        return exit_code::success;
    }

    if (a.enumerate) {
        auto all = mds::enumerate_min_dominating(g, *a.enumerate, options);
        out << "gamma " << (all.empty() ? 0 : all.front().count()) << "\n";
        out << "kind dominating\n";
        out << "count " << all.size() << "\n";
        for (const auto & s : all)
            out << "set " << ids(s) << "\n";
        return exit_code::success;
    }

    auto r = mds::min_dominating(g, options);
    out << "gamma " << r.size << "\n";
    out << "kind dominating\n";
    out << "set " << ids(r.witness) << "\n";
    out << "lower-bound " << mds::to_string(r.lower_bound_kind) << " " << r.root_lower_bound << "\n";
    explored(r.explored);
    return exit_code::success;
}

struct RecognizeArgs {
    std::string graph;
    std::vector<std::string> forbid;
    std::optional<int> regular;
};

auto cmd_recognize(const RecognizeArgs & a, std::ostream & out) -> int
{
    auto g = load_graph(a.graph);
    auto names = pattern_names(a.forbid);
    auto report = recognition::check_class(g, recognition::patterns_from_names(names), a.regular);
    out << "claw-free " << yes(report.claw_free) << "\n";
    out << "claw " << (report.claw ? ids(report.claw->map) : "-") << "\n";
    out << "regular " << (report.regular_degree ? std::to_string(*report.regular_degree) : "no") << "\n";
    out << "regular-ok " << (report.regular_ok ? yes(*report.regular_ok) : "-") << "\n";
    for (const auto & name : names) {
        auto hit = std::find_if(report.forbidden_hits.begin(), report.forbidden_hits.end(),
                                [&](const auto & h) { return h.pattern == name; });
        out << "forbidden " << name;
        if (hit == report.forbidden_hits.end())
            out << " absent\n";
        else
            out << " present " << ids(hit->embedding->map) << "\n";
    }
    bool ok = report.is_free() && report.regular_ok.value_or(true);
    out << "in-class " << yes(ok) << "\n";
    return exit_code::success;
}

auto cmd_classify(const std::string & spec, std::ostream & out) -> int
{
    auto h = load_graph(spec);
    auto c = dichotomy::classify(h);
    out << dichotomy::to_string(c.verdict) << "\n";
    if (c.witness) {
        out << "kernel " << c.witness->kernel << "\n";
        out << "embedding " << ids(c.witness->embedding.map) << "\n";
    }
    else
        out << "reason " << (c.reason.empty() ? "none" : c.reason) << "\n";
    out << "citation " << c.citation << "\n";
    if (auto name = dichotomy::catalog_name(h); ! name.empty())
        out << "name " << name << "\n";
    return exit_code::success;
}

auto cmd_classify_all(int n, const std::string & format, std::ostream & out) -> int
{
    auto rows = dichotomy::classify_all(n);
    auto tag = [](const dichotomy::ClassRow & row) {
        return row.classification.witness ? row.classification.witness->kernel : row.classification.reason;
    };
    if (format == "tsv") {
        for (const auto & row : rows)
            out << to_graph6(row.graph) << "\t" << dichotomy::to_string(row.classification.verdict) << "\t"
                << tag(row) << "\t" << row.classification.citation << "\t" << row.name << "\n";
        return exit_code::success;
    }
    int np = 0, poly = 0, open = 0;
    for (const auto & row : rows) {
        auto v = row.classification.verdict;
        np += v == dichotomy::Verdict::np_complete;
        poly += v == dichotomy::Verdict::polynomial;
        open += v == dichotomy::Verdict::open;
    }
    out << "classes " << rows.size() << " np-complete " << np << " polynomial " << poly << " open " << open << "\n";
    for (const auto & row : rows)
        out << to_graph6(row.graph) << " " << dichotomy::to_string(row.classification.verdict) << " " << tag(row)
            << (row.name.empty() ? "" : " " + row.name) << "\n";
    return exit_code::success;
}

struct ReduceArgs {
    std::string graph;
    std::string mode;
    std::string gadget;
    std::string out;
};

auto cmd_reduce(const ReduceArgs & a, const Globals & globals, std::ostream & out) -> int
{
    auto g = load_graph(a.graph);
    auto need_gadget = [&]() {
        if (a.gadget.empty())
            throw CLI::ValidationError("--gadget", "mode " + a.mode + " needs --gadget");
        return gadgets::read_gadget_file(a.gadget);
    };
    reductions::ReductionResult r;
    if (a.mode == "cubic")
        r = reductions::reduce_4reg_to_cubic(g, gadgets::VerifiedGadget::check(need_gadget(), globals.solver()));
    else if (a.mode == "butterfly")
        r = reductions::reduce_cubic_butterfly(g, gadgets::VerifiedGadget::check(need_gadget(), globals.solver()));
    else if (auto k = parse_mode_parameter(a.mode, "odd:"))
        r = reductions::reduce_cubic_to_odd_regular(g, *k);
    else if (auto p = parse_mode_parameter(a.mode, "ck:"))
        r = reductions::reduce_stretch_family(g, need_gadget(), *p, reductions::StretchMode::ck_free);
    else if (auto q = parse_mode_parameter(a.mode, "kdt:"))
        r = reductions::reduce_stretch_family(g, need_gadget(), *q, reductions::StretchMode::k_double_triangle);
    else
        throw CLI::ValidationError("--mode", "unknown mode " + a.mode);

    out << "reduction " << r.mode << " vertices " << r.output.size() << " edges " << r.output.edge_count()
        << " offset " << r.offset << "\n";
    if (a.out.empty())
        out << write_graph(r.output);
    else {
        reductions::write_reduction(r, a.out);
        out << "written " << a.out << "\n";
    }
    return exit_code::success;
}

auto cmd_verify_gadget(const std::string & file, const Globals & globals, std::ostream & out) -> int
{
    auto spec = gadgets::read_gadget_file(file);
    auto report = gadgets::verify_gadget(spec, globals.solver());
    auto verdict = gadgets::describe_failure(report);
    out << (report.passed() ? "ok" : "fail " + verdict) << "\n";
    out << "structure " << (report.structure_issue ? *report.structure_issue : "ok") << "\n";
    out << "gamma " << report.gamma << " claimed " << spec.gamma << "\n";
    out << "p1 " << yes(report.p1);
    if (report.p1_witness)
        out << " witness " << ids(*report.p1_witness);
    out << "\n";
    out << "p2 " << yes(report.p2) << "\n";
    for (const auto & c : report.corners) {
        out << "corner " << c.corner + 1 << " gamma-without " << c.gamma_without << " unique " << yes(c.unique)
            << " avoids-corners " << yes(c.avoids_corners);
        if (c.gamma_without >= 0)
            out << " optimum " << ids(c.optimum);
        out << "\n";
    }
    out << "p3 " << yes(report.p3) << " budget " << report.p3_budget;
    if (report.p3_counterexample)
        out << " counterexample " << ids(*report.p3_counterexample);
    out << "\n";
    out << "forbidden-free " << yes(report.forbidden_ok);
    for (const auto & hit : report.forbidden_hits)
        out << " " << hit.pattern;
    out << "\n";
    return report.passed() ? exit_code::success : exit_code::domain_error;
}

struct SearchArgs {
    gadgets::SearchRequest request;
    std::vector<std::string> forbid;
    std::string out_dir;
};

auto cmd_search_gadget(SearchArgs a, const Globals & globals, std::ostream & out) -> int
{
    a.request.forbidden = pattern_names(a.forbid);
    auto outcome = gadgets::search_gadget(a.request, globals.solver());
    if (outcome.infeasible) {
        out << "infeasible " << *outcome.infeasible << "\n";
        return exit_code::domain_error;
    }
    out << "found " << outcome.gadgets.size() << " labelled " << outcome.labelled_graphs << " classes "
        << outcome.classes << "\n";
    if (! a.out_dir.empty())
        fs::create_directories(a.out_dir);
    for (std::size_t i = 0; i < outcome.gadgets.size(); ++i) {
        const auto & g = outcome.gadgets[i];
        out << "gadget " << i + 1 << " corners " << ids(g.corners) << " edges " << edge_text(g.graph.edges()) << "\n";
        if (! a.out_dir.empty())
            gadgets::write_gadget_file(g, fs::path(a.out_dir) / ("gadget-" + std::to_string(i + 1) + ".json"));
    }
    return exit_code::success;
}

auto cmd_verify_reduction(const std::string & graph, const std::string & dir, const Globals & globals,
                          std::ostream & out) -> int
{
    auto g = load_graph(graph);
    auto r = reductions::read_reduction(dir);
    auto check = reductions::verify_reduction(g, r, globals.solver());
    out << "holds " << yes(check.holds) << " source-gamma " << check.source_gamma << " output-gamma "
        << check.output_gamma << " offset " << check.offset << "\n";
    return check.holds ? exit_code::success : exit_code::domain_error;
}

} // namespace

auto run(const std::vector<std::string> & args) -> CommandOutcome
{
    std::ostringstream out, err;
    CommandOutcome outcome;

    CLI::App app("Exact and structural minimum dominating set tools for claw-free graph classes.", "dominion");
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_option("--seed", globals.seed, "Seed for random graph generation")->capture_default_str();
    app.add_option("--node-cap", globals.node_cap, "Search node limit for the exact solver (env DOMINION_NODE_CAP)");
    app.add_option("--jobs", globals.jobs, "Worker threads for the exact solver")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();

    std::function<int()> action;
    const std::string graph_help = "Graph file (edge-list format), g6:<graph6> or a spec such as gem, P:7, dt:2";

    GenArgs gen;
    auto * gen_cmd = app.add_subcommand("gen", "Generate a graph in edge-list format (random, regular, claw-free or named)");
    gen_cmd->add_option("kind", gen.kind, "random | regular | claw-free | named")
        ->required()
        ->check(CLI::IsMember({"random", "regular", "claw-free", "named"}));
    gen_cmd->add_option("spec", gen.spec, "Graph spec for kind named");
    gen_cmd->add_option("--n", gen.n, "Vertex count")->check(CLI::Range(0, 4096))->capture_default_str();
    gen_cmd->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    gen_cmd->add_option("--degree", gen.degree, "Degree for kind regular")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Write to this file instead of stdout");
    gen_cmd->callback([&] { action = [&] { return cmd_gen(gen, globals, out); }; });

    SolveArgs solve;
    auto * solve_cmd = app.add_subcommand(
        "solve", "Minimum dominating set by exact branch and bound; also independent, edge and partial domination, "
                 "enumeration of all optima and the structural dispatcher for (claw,H)-free inputs");
    solve_cmd->add_option("graph", solve.graph, graph_help)->required();
    auto * ind = solve_cmd->add_flag("--independent", solve.independent, "Minimum independent dominating set");
    auto * edg = solve_cmd->add_flag("--edges", solve.edges, "Minimum edge dominating set (via the line graph)");
    auto * part = solve_cmd->add_option("--partial", solve.partial, "File of 1-based target vertices to dominate");
    auto * allw = solve_cmd->add_option("--allowed", solve.allowed, "File of 1-based vertices allowed in the set");
    auto * bud = solve_cmd->add_option("--budget", solve.budget, "Largest set size accepted")->check(CLI::NonNegativeNumber);
    auto * enu = solve_cmd->add_option("--enumerate", solve.enumerate, "List up to this many minimum sets in lexicographic order");
    auto * strat = solve_cmd->add_option("--strategy", solve.strategy, "exact | auto (structural rules, then exact)")
                       ->check(CLI::IsMember({"exact", "auto"}))
                       ->capture_default_str();
    solve_cmd->add_option("--forbidden", solve.forbidden, "H for --strategy auto: the input is taken as (claw,H)-free");
    ind->excludes(edg)->excludes(part)->excludes(allw)->excludes(bud)->excludes(enu)->excludes(strat);
    edg->excludes(part)->excludes(allw)->excludes(bud)->excludes(enu)->excludes(strat);
    enu->excludes(part)->excludes(allw)->excludes(bud)->excludes(strat);
    solve_cmd->callback([&] { action = [&] { return cmd_solve(solve, globals, out); }; });

    RecognizeArgs recognize;
    auto * rec_cmd = app.add_subcommand("recognize", "Claw check, forbidden induced subgraph scan and degree check");
    rec_cmd->add_option("graph", recognize.graph, graph_help)->required();
    rec_cmd->add_option("--forbid", recognize.forbid, "Comma-separated pattern specs (claw,diamond,C4,...)")
        ->delimiter(',');
    rec_cmd->add_option("--regular", recognize.regular, "Expected common degree");
    rec_cmd->callback([&] { action = [&] { return cmd_recognize(recognize, out); }; });

    std::string classify_spec;
    auto * cls_cmd = app.add_subcommand(
        "classify", "Complexity of minimum domination on (claw,H)-free graphs: hardness kernel or polynomial reason");
    cls_cmd->add_option("H", classify_spec, graph_help)->required();
    cls_cmd->callback([&] { action = [&] { return cmd_classify(classify_spec, out); }; });

    int all_n = 0;
    std::string all_format = "text";
    auto * all_cmd = app.add_subcommand("classify-all", "Classify every claw-free H on n vertices (n <= 6)");
    all_cmd->add_option("--n", all_n, "Vertex count of H")->required()->check(CLI::Range(1, 6));
    all_cmd->add_option("--format", all_format, "text | tsv")
        ->check(CLI::IsMember({"text", "tsv"}))
        ->capture_default_str();
    all_cmd->callback([&] { action = [&] { return cmd_classify_all(all_n, all_format, out); }; });

    ReduceArgs reduce;
    auto * red_cmd = app.add_subcommand(
        "reduce", "Build a reduction instance: cubic (4-regular to cubic), butterfly (cubic), odd:k (cubic to "
                  "k-regular), ck:p and kdt:p (stretched templates)");
    red_cmd->add_option("graph", reduce.graph, graph_help)->required();
    red_cmd->add_option("--mode", reduce.mode, "cubic | butterfly | odd:k | ck:p | kdt:p")->required();
    red_cmd->add_option("--gadget", reduce.gadget, "Gadget or template JSON file");
    red_cmd->add_option("--out", reduce.out, "Directory for output.graph and reduction.json");
    red_cmd->callback([&] { action = [&] { return cmd_reduce(reduce, globals, out); }; });

    std::string gadget_file;
    auto * vg_cmd = app.add_subcommand("verify-gadget", "Check a gadget file's domination properties exactly");
    vg_cmd->add_option("file", gadget_file, "Gadget JSON file")->required();
    vg_cmd->callback([&] { action = [&] { return cmd_verify_gadget(gadget_file, globals, out); }; });

    SearchArgs search;
    auto * sg_cmd = app.add_subcommand("search-gadget", "Exhaustive search for small gadgets with the verified properties");
    sg_cmd->add_option("--n", search.request.n, "Gadget vertex count (<= 12)")->required();
    sg_cmd->add_option("--corners", search.request.corners, "Corner count (3 or 4)")->capture_default_str();
    sg_cmd->add_option("--gamma", search.request.gamma, "Target domination number")->required();
    sg_cmd->add_option("--internal-degree", search.request.internal_degree, "Degree of non-corner vertices")
        ->capture_default_str();
    sg_cmd->add_option("--corner-degree", search.request.corner_degree, "Degree of corners inside the gadget")
        ->capture_default_str();
    sg_cmd->add_option("--forbid", search.forbid, "Comma-separated forbidden induced patterns")->delimiter(',');
    sg_cmd->add_option("--out-dir", search.out_dir, "Write each gadget as gadget-<i>.json here");
    sg_cmd->callback([&] { action = [&] { return cmd_search_gadget(search, globals, out); }; });

    std::string vr_graph, vr_dir;
    auto * vr_cmd = app.add_subcommand("verify-reduction", "Check gamma(output) = gamma(source) + offset exactly");
    vr_cmd->add_option("graph", vr_graph, graph_help)->required();
    vr_cmd->add_option("result-dir", vr_dir, "Directory written by reduce --out")->required();
    vr_cmd->callback([&] { action = [&] { return cmd_verify_reduction(vr_graph, vr_dir, globals, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        outcome.exit_code = action();
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        outcome.exit_code = code == 0 ? exit_code::success : exit_code::usage_error;
    }
    catch (const mds::NodeCapExceeded & e) {
        err << "error: " << e.what() << "\n";
        outcome.exit_code = exit_code::resource_cap;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        outcome.exit_code = exit_code::domain_error;
    }
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
}

} // namespace dominion::cli
