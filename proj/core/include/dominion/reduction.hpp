#pragma once

#include <dominion/gadget.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace dominion::reductions {

class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Output vertices [first, first + count) belong to one source vertex.
struct Placement {
    int first = 0;
    int count = 0;
};

/// How one source edge is realised: the two output endpoints and any path inserted between them.
struct Wire {
    Edge source;
    int end_u = -1;
    int end_v = -1;
    std::vector<int> path;
};

struct ReductionResult {
    std::string mode;
    Graph output;
    /// Claimed: gamma(output) = gamma(source) + offset.
    int offset = 0;
    std::vector<Placement> placement;
    std::vector<Wire> wiring;
};

/// Gadget per vertex of a 4-regular graph, corners joined along source edges; output is cubic, offset (g-1)n.
auto reduce_4reg_to_cubic(const Graph & g, const gadgets::VerifiedGadget & gadget) -> ReductionResult;

/// 3-corner gadget per vertex of a cubic graph; output cubic and free of the gadget's forbidden patterns, offset 2n.
auto reduce_cubic_butterfly(const Graph & g, const gadgets::VerifiedGadget & gadget) -> ReductionResult;

/// (k-3)/2 copies of K(k+1)-e hung on every vertex of a cubic graph; output k-regular, offset (k-3)/2 n.
auto reduce_cubic_to_odd_regular(const Graph & g, int k) -> ReductionResult;

enum class StretchMode { ck_free, k_double_triangle };

/**
 * Stretched template per vertex: every stretch edge becomes an induced path
 * on 3p vertices, and with the template's edge_paths flag every source edge
 * becomes a path on 3p vertices too. ck_free takes 4-regular sources,
 * k_double_triangle cubic ones. The offset is n(g_p - 1) + p m with edge
 * paths, g_p being the stretched gadget's gamma claim.
 */
auto reduce_stretch_family(const Graph & g, const gadgets::GadgetSpec & templ, int p, StretchMode mode)
    -> ReductionResult;

struct ReductionCheck {
    bool holds = false;
    int source_gamma = 0;
    int output_gamma = 0;
    int offset = 0;
};

/// Solves both graphs exactly and compares gamma(output) with gamma(source) + offset.
auto verify_reduction(const Graph & source, const ReductionResult & r,
                      const mds::SolverOptions & options = mds::default_options()) -> ReductionCheck;

/// A directory with output.graph (edge-list format) and reduction.json (mode, offset, placement, wiring).
auto write_reduction(const ReductionResult & r, const std::filesystem::path & dir) -> void;
auto read_reduction(const std::filesystem::path & dir) -> ReductionResult;

} // namespace dominion::reductions
