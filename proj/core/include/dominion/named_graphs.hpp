#pragma once

#include <dominion/graph.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace dominion {

enum class NamedKind {
    claw,
    diamond,
    paw,
    bull,
    net,
    butterfly,
    house,
    gem,
    path,              // P(n), n >= 1
    cycle,             // C(n), n >= 3
    complete,          // K(p), p >= 1
    multi_complete,    // kK(p): k disjoint copies of K(p), k >= 0, p >= 1
    triangle,          // (k1,k2,k3)-triangle
    double_triangle,   // k-double-triangle, k >= 0
    complete_minus_edge, // K(p) - e, p >= 2
    // Conventional definitions for graphs the catalog names but does not draw:
    wheel4,            // W4: C4 plus a hub adjacent to all four
    dart,              // diamond plus a pendant on one degree-2 vertex
    petersen,
    prism,             // C3 x K2
};

struct NamedGraphId {
    NamedKind kind;
    std::vector<int> params;
};

/**
 * Builds the catalog graph. Vertex numbering follows the usual textual
 * definitions, e.g. the (k1,k2,k3)-triangle has its triangle on 0,1,2 and
 * the pendant paths appended in order; the k-double-triangle has triangles
 * {0,1,2} and {3,4,5} joined between 0 and 3 by k path vertices 6..5+k;
 * K(p)-e misses the edge between its two highest vertices.
 *
 * Throws GraphError on parameters outside the documented ranges.
 */
auto named_graph(const NamedGraphId & id) -> Graph;

auto claw() -> Graph;
auto diamond() -> Graph;
auto paw() -> Graph;
auto bull() -> Graph;
auto net() -> Graph;
auto butterfly() -> Graph;
auto house() -> Graph;
auto gem() -> Graph;
auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto complete_graph(int p) -> Graph;
auto multi_complete(int k, int p) -> Graph;
auto k_triangle(int k1, int k2, int k3) -> Graph;
auto double_triangle(int k) -> Graph;
auto complete_minus_edge(int p) -> Graph;
auto wheel4() -> Graph;
auto dart() -> Graph;
auto petersen() -> Graph;
auto prism() -> Graph;

/**
 * Parses a textual graph description:
 *
 *     spec   := term ('+' term)*          disjoint union
 *     term   := [count 'x'] factor        count disjoint copies
 *     factor := '~' factor | '(' spec ')' | atom
 *     atom   := name [':' int (',' int)*]
 *
 * Names: claw diamond paw bull net butterfly house gem W4 dart petersen prism,
 * P:n C:n K:p kK:k,p Kme:p (K_p - e) dt:k tri:k1,k2,k3. '~' complements.
 */
auto parse_graph_spec(std::string_view spec) -> Graph;

/// Erdos-Renyi G(n, p).
auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph;

/// Uniform-ish random simple d-regular graph via the pairing model with restarts.
auto random_regular(int n, int d, std::mt19937_64 & rng) -> Graph;

} // namespace dominion
