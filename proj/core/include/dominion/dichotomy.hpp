#pragma once

#include <dominion/recognition.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dominion::dichotomy {

enum class Verdict { np_complete, polynomial, open };

auto to_string(Verdict verdict) -> std::string;

struct HardnessWitness {
    /// Kernel id in graph spec syntax ("claw", "C:5", "dt:0", ...) or "two-triangles".
    std::string kernel;
    Graph kernel_graph;
    recognition::Embedding embedding;
};

struct Classification {
    Verdict verdict = Verdict::open;
    std::optional<HardnessWitness> witness;
    /// Polynomial reason tag, e.g. "subgraph-of-P8" or "H6-list".
    std::string reason;
    std::string citation;
};

/**
 * First hardness kernel that embeds in h, scanning claw, diamond, K4,
 * butterfly, C4..C|h|, double_triangle(0..|h|-6) and finally two triangles in
 * one component.
 */
auto hardness_witness(const Graph & h) -> std::optional<HardnessWitness>;

/// Complexity of minimum domination on (claw, h)-free graphs.
auto classify(const Graph & h) -> Classification;

/// Re-checks a polynomial reason's membership condition against h.
auto reason_holds(const Graph & h, const std::string & reason) -> bool;

struct ClassRow {
    Graph graph;
    /// Catalogue name when h matches a known small graph, else empty.
    std::string name;
    Classification classification;
};

/// Every claw-free graph on n vertices up to isomorphism, classified. Refuses n > 6.
auto classify_all(int n) -> std::vector<ClassRow>;

/// Catalogue name of a small graph ("gem", "K:3+2xK:1", ...), or empty.
auto catalog_name(const Graph & h) -> std::string;

} // namespace dominion::dichotomy
