#pragma once

#include <dominion/graph.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace dominion {

class ParseError : public GraphError {
public:
    ParseError(int line, const std::string & what)
        : GraphError("line " + std::to_string(line) + ": " + what), _line(line)
    {
    }

    auto line() const -> int { return _line; }

private:
    int _line;
};

/**
 * Reads the edge-list format
 *
 *     c <comment>
 *     p edge <n> <m>
 *     e <u> <v>        (m lines, 1-based ids)
 *
 * Blank lines are ignored. Throws ParseError carrying the offending line.
 */
auto parse_graph(std::string_view text) -> Graph;
auto read_graph_file(const std::filesystem::path & path) -> Graph;

/// "p edge n m" followed by "e u v" lines with u < v, sorted.
auto write_graph(const Graph & g) -> std::string;
auto write_graph_file(const Graph & g, const std::filesystem::path & path) -> void;

/// Standard graph6 encoding (n <= 62 uses the one-byte size prefix).
auto to_graph6(const Graph & g) -> std::string;
auto from_graph6(std::string_view code) -> Graph;

} // namespace dominion
