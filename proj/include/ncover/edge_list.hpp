#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncover/graph.hpp"

namespace ncover {

/// Natural order: digit runs compare numerically, everything else
/// bytewise, so v2 < v10 and plain numbers sort as numbers.
bool natural_less(std::string_view a, std::string_view b);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A graph together with its vertex names. Internal ids are dense and
/// follow the natural order of the tokens, which keeps deterministic
/// tie-breaking aligned with how humans number vertices.
struct TokenGraph {
    Graph graph;
    std::vector<std::string> tokens; // by dense vertex index

    const std::string& token(VertexId v) const;
    std::optional<VertexId> id_of(std::string_view token) const;
};

/// Parse the edge-list format: one "u v" edge per line, a single token
/// declares an isolated vertex, '#' starts a comment, blank lines are
/// ignored. Self-loops, duplicate edges, and lines with more than two
/// tokens are reported with their line number.
TokenGraph parse_edge_list(std::string_view text);

/// Wrap an integer-id graph with decimal tokens.
TokenGraph with_decimal_tokens(const Graph& g);

/// Serialize back to the edge-list format: edges sorted by id pair, then
/// one line per isolated vertex. parse(serialize(g)) == g.
std::string serialize_edge_list(const TokenGraph& tg);

} // namespace ncover
