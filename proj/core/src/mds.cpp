#include <dominion/mds.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

namespace dominion::mds {

auto to_string(LowerBoundKind kind) -> std::string
{
    switch (kind) {
    case LowerBoundKind::trivial: return "trivial";
    case LowerBoundKind::packing: return "packing";
    case LowerBoundKind::counting: return "counting";
    }
    return "?";
}

auto default_options() -> SolverOptions
{
    SolverOptions options;
    if (const char * cap = std::getenv("DOMINION_NODE_CAP")) {
        char * end = nullptr;
        auto value = std::strtoull(cap, &end, 10);
        if (end != cap && *end == '\0' && value > 0)
            options.node_cap = value;
    }
    return options;
}

auto is_dominating(const Graph & g, const VertexSet & s, const VertexSet & targets) -> bool
{
    return targets.is_subset_of(g.closed_neighborhood(s));
}

auto is_dominating(const Graph & g, const VertexSet & s) -> bool
{
    return is_dominating(g, s, g.all_vertices());
}

auto is_independent(const Graph & g, const VertexSet & s) -> bool
{
    bool ok = true;
    s.for_each([&](int v) { ok = ok && ! g.neighbors(v).intersects(s); });
    return ok;
}

namespace {
    constexpr int unbounded = std::numeric_limits<int>::max() / 2;

    struct Bound {
        int value = 0;
        LowerBoundKind kind = LowerBoundKind::trivial;
    };

    struct Shared {
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<int> best{unbounded};
        std::mutex mutex;
        std::vector<int> best_set;
        /// Node counter charged by this search; nested component searches charge their parent's.
        std::atomic<std::uint64_t> * counter = &nodes;
    };

    /**
     * Set-cover view of domination: universe = undominated targets, one set
     * N[c] per candidate c. In independent mode choosing c also removes N[c]
     * from the candidates.
     */
    class Engine {
    public:
        Engine(const Graph & g, bool independent, const SolverOptions & options, Shared & shared)
            : _g(g), _independent(independent), _cap(options.node_cap), _shared(&shared)
        {
            _closed.reserve(static_cast<std::size_t>(g.size()));
            for (int v = 0; v < g.size(); ++v)
                _closed.push_back(g.closed_neighborhood(v));
        }

        auto closed(int v) const -> const VertexSet & { return _closed[v]; }

        auto tick() -> void
        {
            if (_shared->counter->fetch_add(1, std::memory_order_relaxed) + 1 > _cap)
                throw NodeCapExceeded(_cap);
        }

        auto useful(const VertexSet & undominated, const VertexSet & candidates) const -> VertexSet
        {
            VertexSet reach(_g.size());
            undominated.for_each([&](int u) { reach |= _closed[u]; });
            return candidates & reach;
        }

        /// Max of the coverage-counting and disjoint-neighbourhood packing bounds; unbounded if infeasible.
        auto bound(const VertexSet & undominated, const VertexSet & candidates) const -> Bound
        {
            int need = undominated.count();
            if (need == 0)
                return {};

            std::vector<int> histogram(static_cast<std::size_t>(need + 1), 0);
            long long total = 0;
            candidates.for_each([&](int c) {
                int cover = _closed[c].intersection_count(undominated);
                ++histogram[cover];
                total += cover;
            });
            if (total < need)
                return {unbounded, LowerBoundKind::counting};
            int counting = 0;
            for (int cover = need; cover > 0 && need > 0; --cover) {
                int take = std::min(histogram[cover], (need + cover - 1) / cover);
                counting += take;
                need -= take * cover;
            }

            // targets with few options first make for a tighter packing
            std::vector<std::pair<int, int>> order;
            undominated.for_each([&](int u) { order.emplace_back(_closed[u].intersection_count(candidates), u); });
            std::sort(order.begin(), order.end());
            VertexSet blocked(_g.size());
            int packing = 0;
            for (auto [options, u] : order) {
                if (options == 0)
                    return {unbounded, LowerBoundKind::packing};
                VertexSet choices = _closed[u] & candidates;
                if (! choices.intersects(blocked)) {
                    ++packing;
                    blocked |= choices;
                }
            }

            if (packing >= counting)
                return {packing, packing == 0 ? LowerBoundKind::trivial : LowerBoundKind::packing};
            return {counting, LowerBoundKind::counting};
        }

        /// Max-coverage greedy; empty optional when it gets stuck.
        auto greedy(VertexSet undominated, VertexSet candidates) const -> std::optional<std::vector<int>>
        {
            std::vector<int> chosen;
            while (undominated.any()) {
                int best = -1, best_cover = 0;
                candidates.for_each([&](int c) {
                    int cover = _closed[c].intersection_count(undominated);
                    if (cover > best_cover) {
                        best = c;
                        best_cover = cover;
                    }
                });
                if (best < 0)
                    return std::nullopt;
                chosen.push_back(best);
                undominated -= _closed[best];
                candidates.reset(best);
                if (_independent)
                    candidates -= _closed[best];
            }
            return chosen;
        }

        /// Undominated target with the fewest candidates (smallest id on ties), -1 if some target has none.
        auto branching_target(const VertexSet & undominated, const VertexSet & candidates) const -> int
        {
            int best = -1, best_options = unbounded;
            bool dead = false;
            undominated.for_each([&](int u) {
                if (dead)
                    return;
                int options = _closed[u].intersection_count(candidates);
                if (options == 0)
                    dead = true;
                else if (options < best_options) {
                    best = u;
                    best_options = options;
                }
            });
            return dead ? -1 : best;
        }

        auto after_choosing(const VertexSet & candidates, int c) const -> VertexSet
        {
            VertexSet next = candidates;
            next.reset(c);
            if (_independent)
                next -= _closed[c];
            return next;
        }

        /// Drops candidates whose remaining coverage another candidate also provides (the later id on ties).
        auto drop_dominated(const VertexSet & undominated, const VertexSet & candidates) const -> VertexSet
        {
            auto ids = candidates.members();
            std::vector<VertexSet> cover;
            cover.reserve(ids.size());
            for (int c : ids)
                cover.push_back(_closed[c] & undominated);
            VertexSet kept = candidates;
            for (std::size_t i = 0; i < ids.size(); ++i)
                for (std::size_t j = 0; j < ids.size(); ++j) {
                    if (i == j || ! kept.test(ids[j]))
                        continue;
                    if (cover[i].is_subset_of(cover[j]) && (j < i || ! (cover[j].is_subset_of(cover[i])))) {
                        kept.reset(ids[i]);
                        break;
                    }
                }
            return kept;
        }

        /// Groups of targets that share no candidate, as separate cover problems.
        auto split(const VertexSet & undominated, const VertexSet & candidates) const -> std::vector<VertexSet>
        {
            std::vector<VertexSet> parts;
            VertexSet left = undominated;
            while (left.any()) {
                VertexSet part(_g.size()), frontier(_g.size());
                frontier.set(left.first());
                while (frontier.any()) {
                    part |= frontier;
                    VertexSet reach(_g.size());
                    frontier.for_each([&](int u) { reach |= _closed[u]; });
                    reach &= candidates;
                    VertexSet next(_g.size());
                    reach.for_each([&](int c) { next |= _closed[c]; });
                    next &= left;
                    next -= part;
                    frontier = std::move(next);
                }
                left -= part;
                parts.push_back(std::move(part));
            }
            return parts;
        }

        /// Looks for sets strictly smaller than the shared best.
        auto search(const VertexSet & undominated, VertexSet candidates, std::vector<int> & chosen) -> void
        {
            tick();
            int depth = static_cast<int>(chosen.size());
            if (undominated.empty()) {
                std::lock_guard lock(_shared->mutex);
                if (depth < _shared->best.load()) {
                    _shared->best = depth;
                    _shared->best_set = chosen;
                }
                return;
            }
            if (depth + 1 >= _shared->best.load(std::memory_order_relaxed))
                return;

            candidates = useful(undominated, candidates);
            if (! _independent)
                candidates = drop_dominated(undominated, candidates);
            int target = branching_target(undominated, candidates);
            if (target < 0)
                return;
            if (depth + bound(undominated, candidates).value >= _shared->best.load(std::memory_order_relaxed))
                return;
            if (! _independent)
                if (auto parts = split(undominated, candidates); parts.size() > 1) {
                    solve_parts(parts, candidates, chosen);
                    return;
                }

            VertexSet options = _closed[target] & candidates;
            for (int c = options.first(); c >= 0; c = options.next(c + 1)) {
                chosen.push_back(c);
                search(undominated - _closed[c], after_choosing(candidates, c), chosen);
                chosen.pop_back();
                candidates.reset(c);
                if (depth + 1 >= _shared->best.load(std::memory_order_relaxed))
                    break;
            }
        }

        /// Solves independent parts one by one, each below what the incumbent still allows.
        auto solve_parts(const std::vector<VertexSet> & parts, const VertexSet & candidates, std::vector<int> & chosen)
            -> void
        {
            std::vector<VertexSet> pools;
            std::vector<int> lower;
            int rest = 0;
            for (const auto & part : parts) {
                pools.push_back(useful(part, candidates));
                lower.push_back(bound(part, pools.back()).value);
                rest += lower.back();
            }
            std::vector<int> combined = chosen;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                rest -= lower[i];
                int ceiling = _shared->best.load(std::memory_order_relaxed) - static_cast<int>(combined.size()) - rest;
                if (ceiling <= lower[i])
                    return;
                Shared local;
                local.counter = _shared->counter;
                local.best = ceiling;
                if (auto initial = greedy(parts[i], pools[i]); initial && static_cast<int>(initial->size()) < ceiling) {
                    local.best = static_cast<int>(initial->size());
                    local.best_set = *initial;
                }
                if (local.best.load() > lower[i]) {
                    auto saved = _shared;
                    _shared = &local;
                    std::vector<int> inner;
                    try {
                        search(parts[i], pools[i], inner);
                    }
                    catch (...) {
                        _shared = saved;
                        throw;
                    }
                    _shared = saved;
                }
                if (local.best.load() >= ceiling)
                    return;
                combined.insert(combined.end(), local.best_set.begin(), local.best_set.end());
            }
            std::lock_guard lock(_shared->mutex);
            if (static_cast<int>(combined.size()) < _shared->best.load()) {
                _shared->best = static_cast<int>(combined.size());
                _shared->best_set = combined;
            }
        }

        /**
         * Binary include/exclude over the smallest still-useful candidate, so
         * sets of size <= budget are reported in lexicographic order. The
         * callback returns true to stop.
         */
        auto lex(const VertexSet & undominated, VertexSet candidates, std::vector<int> & chosen, int budget,
                 const std::function<bool(const std::vector<int> &)> & found) -> bool
        {
            tick();
            if (undominated.empty())
                return found(chosen);
            int depth = static_cast<int>(chosen.size());
            if (depth == budget)
                return false;

            candidates = useful(undominated, candidates);
            if (branching_target(undominated, candidates) < 0)
                return false;
            if (depth + bound(undominated, candidates).value > budget)
                return false;

            int v = candidates.first();
            chosen.push_back(v);
            bool stop = lex(undominated - _closed[v], after_choosing(candidates, v), chosen, budget, found);
            chosen.pop_back();
            if (stop)
                return true;
            candidates.reset(v);
            return lex(undominated, std::move(candidates), chosen, budget, found);
        }

    private:
        const Graph & _g;
        bool _independent;
        std::uint64_t _cap;
        Shared * _shared;
        std::vector<VertexSet> _closed;
    };

    struct Solved {
        std::optional<std::vector<int>> set;
        std::uint64_t explored = 0;
        Bound root;
    };

    /// Minimum cover of targets by allowed vertices, below an exclusive ceiling (unbounded if none).
    auto solve_cover(const Graph & g, bool independent, const VertexSet & targets, const VertexSet & allowed,
                     int ceiling, const SolverOptions & options) -> Solved
    {
        Shared shared;
        Engine engine(g, independent, options, shared);

        VertexSet candidates = engine.useful(targets, allowed);
        Solved solved;
        solved.root = engine.bound(targets, candidates);

        shared.best = ceiling;
        if (auto initial = engine.greedy(targets, candidates); initial && static_cast<int>(initial->size()) < ceiling) {
            shared.best = static_cast<int>(initial->size());
            shared.best_set = *initial;
        }

        bool proven = shared.best.load() <= solved.root.value;
        if (! proven) {
            int target = engine.branching_target(targets, candidates);
            if (options.jobs <= 1 || target < 0) {
                std::vector<int> chosen;
                engine.search(targets, candidates, chosen);
            }
            else {
                // split the root branches across workers sharing the incumbent
                auto root_options = (engine.closed(target) & candidates).members();
                std::atomic<std::size_t> next{0};
                std::mutex error_mutex;
                std::exception_ptr error;
                auto work = [&] {
                    Engine local(g, independent, options, shared);
                    try {
                        for (std::size_t i = next++; i < root_options.size(); i = next++) {
                            VertexSet c_set = candidates;
                            for (std::size_t j = 0; j < i; ++j)
                                c_set.reset(root_options[j]);
                            int c = root_options[i];
                            std::vector<int> chosen{c};
                            local.search(targets - local.closed(c), local.after_choosing(c_set, c), chosen);
                        }
                    }
                    catch (...) {
                        std::lock_guard lock(error_mutex);
                        error = std::current_exception();
                        next = root_options.size();
                    }
                };
                std::vector<std::jthread> workers;
                for (int j = 0; j < options.jobs; ++j)
                    workers.emplace_back(work);
                workers.clear();
                if (error)
                    std::rethrow_exception(error);
            }
        }

        solved.explored = shared.nodes.load();
        if (shared.best.load() < ceiling)
            solved.set = shared.best_set;
        return solved;
    }

    /// Lexicographically least cover of exactly the given optimum size.
    auto canonical_cover(const Graph & g, bool independent, const VertexSet & targets, const VertexSet & allowed,
                         int size, const SolverOptions & options, std::uint64_t & explored) -> std::vector<int>
    {
        Shared shared;
        Engine engine(g, independent, options, shared);
        std::vector<int> chosen, result;
        bool ok = engine.lex(targets, allowed, chosen, size, [&](const std::vector<int> & s) {
            result = s;
            return true;
        });
        explored += shared.nodes.load();
        if (! ok)
            throw std::logic_error("canonical witness search found no set of the optimum size");
        return result;
    }

    auto to_result(const Graph & g, const std::vector<int> & members, const Solved & solved) -> DominationResult
    {
        DominationResult r;
        r.size = static_cast<int>(members.size());
        r.witness = VertexSet::of(g.size(), members);
        r.explored = solved.explored;
        r.lower_bound_kind = solved.root.kind;
        r.root_lower_bound = std::min(solved.root.value, r.size);
        return r;
    }

    auto solve_whole(const Graph & g, bool independent, const SolverOptions & options) -> DominationResult
    {
        auto all = g.all_vertices();
        auto solved = solve_cover(g, independent, all, all, unbounded, options);
        if (! solved.set)
            throw std::logic_error("domination search returned no solution");
        std::vector<int> members = *solved.set;
        if (options.canonical_witness)
            members = canonical_cover(g, independent, all, all, static_cast<int>(members.size()), options,
                    solved.explored);
        std::sort(members.begin(), members.end());
        return to_result(g, members, solved);
    }

    /// Components are independent subproblems; the union of per-component lexicographic optima is the global one.
    auto solve_by_components(const Graph & g, bool independent, const SolverOptions & options) -> DominationResult
    {
        auto components = connected_components(g);
        if (components.size() <= 1)
            return solve_whole(g, independent, options);

        DominationResult total;
        total.witness = g.empty_set();
        bool first = true;
        SolverOptions remaining = options;
        for (const auto & component : components) {
            auto part = solve_whole(induced_subgraph(g, component), independent, remaining);
            auto ids = component.members();
            part.witness.for_each([&](int local) { total.witness.set(ids[local]); });
            total.size += part.size;
            total.explored += part.explored;
            total.root_lower_bound += part.root_lower_bound;
            if (first || part.lower_bound_kind == LowerBoundKind::counting)
                total.lower_bound_kind = part.lower_bound_kind;
            first = false;
            remaining.node_cap = options.node_cap > total.explored ? options.node_cap - total.explored : 1;
        }
        return total;
    }
}

auto min_dominating(const Graph & g, const SolverOptions & options) -> DominationResult
{
    if (g.size() == 0)
        return DominationResult{0, VertexSet(0), 0, LowerBoundKind::trivial, 0};
    return solve_by_components(g, false, options);
}

auto min_independent_dominating(const Graph & g, const SolverOptions & options) -> DominationResult
{
    if (g.size() == 0)
        return DominationResult{0, VertexSet(0), 0, LowerBoundKind::trivial, 0};
    return solve_by_components(g, true, options);
}

auto min_partial_dominating(const Graph & g, const PartialDominationQuery & query, const SolverOptions & options)
    -> PartialOutcome
{
    if (query.targets.capacity() != g.size() || query.allowed.capacity() != g.size())
        throw GraphError("partial domination query sets do not match the graph");

    PartialOutcome outcome;
    for (int t = query.targets.first(); t >= 0; t = query.targets.next(t + 1))
        if (! g.closed_neighborhood(t).intersects(query.allowed)) {
            outcome.status = PartialStatus::infeasible;
            outcome.uncoverable_target = t;
            return outcome;
        }

    int ceiling = query.budget ? *query.budget + 1 : unbounded;
    if (ceiling <= 0) {
        outcome.status = query.targets.empty() ? PartialStatus::found : PartialStatus::over_budget;
        if (query.targets.empty())
            outcome.result = DominationResult{0, g.empty_set(), 0, LowerBoundKind::trivial, 0};
        return outcome;
    }

    auto solved = solve_cover(g, false, query.targets, query.allowed, ceiling, options);
    outcome.explored = solved.explored;
    if (! solved.set) {
        outcome.status = PartialStatus::over_budget;
        return outcome;
    }
    std::vector<int> members = *solved.set;
    if (options.canonical_witness)
        members = canonical_cover(g, false, query.targets, query.allowed, static_cast<int>(members.size()), options,
                solved.explored);
    std::sort(members.begin(), members.end());
    outcome.status = PartialStatus::found;
    outcome.result = to_result(g, members, solved);
    outcome.explored = solved.explored;
    return outcome;
}

auto enumerate_min_dominating(const Graph & g, std::size_t limit, const SolverOptions & options)
    -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    if (limit == 0)
        return result;
    if (g.size() == 0) {
        result.emplace_back(0);
        return result;
    }

    SolverOptions sizing = options;
    sizing.canonical_witness = false;
    int gamma = min_dominating(g, sizing).size;

    Shared shared;
    Engine engine(g, false, options, shared);
    std::vector<int> chosen;
    auto all = g.all_vertices();
    engine.lex(all, all, chosen, gamma, [&](const std::vector<int> & s) {
        if (static_cast<int>(s.size()) == gamma)
            result.push_back(VertexSet::of(g.size(), s));
        return result.size() >= limit;
    });
    return result;
}

auto min_edge_dominating(const Graph & g, const SolverOptions & options) -> EdgeDominationResult
{
    if (g.edge_count() == 0)
        throw GraphError("edge domination needs at least one edge");
    auto lg = line_graph(g);
    auto r = min_dominating(lg.graph, options);
    EdgeDominationResult out;
    out.size = r.size;
    out.explored = r.explored;
    r.witness.for_each([&](int i) { out.edges.push_back(lg.edge_of[i]); });
    return out;
}

auto critical_vertices(const Graph & g, const SolverOptions & options) -> VertexSet
{
    SolverOptions sizing = options;
    sizing.canonical_witness = false;
    int gamma = min_dominating(g, sizing).size;
    VertexSet result = g.empty_set();
    for (int v = 0; v < g.size(); ++v)
        if (min_dominating(remove_vertex(g, v), sizing).size > gamma)
            result.set(v);
    return result;
}

} // namespace dominion::mds
