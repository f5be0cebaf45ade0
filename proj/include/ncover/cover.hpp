#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncover/graph.hpp"

namespace ncover {

struct CoverCheck {
    bool covered = false;
    std::optional<VertexId> witness; // an uncovered vertex when !covered
};

/// True iff every vertex of g is in `cover` or within n hops of some
/// member (multi-source BFS). Requires n >= 1 and cover ⊆ vertices.
CoverCheck verify_cover(const Graph& g, std::span<const VertexId> cover, int n);

struct MatchingCover {
    std::vector<VertexId> cover; // both endpoints of every pick, sorted
    std::vector<Edge> picks;     // a maximal matching
};

/// Classic matching-based cover: pick edges until none remain, taking
/// both endpoints each time. |cover| == 2 * |picks|.
MatchingCover approx_vertex_cover(const Graph& g, RandomSource& rng);

/// Grow `cover` by adding an uncovered witness until verification
/// passes. Returns the augmented cover (unchanged when already valid).
std::vector<VertexId> repair(const Graph& g, std::vector<VertexId> cover, int n);

struct CoverSolution {
    std::vector<VertexId> cover; // sorted
    int n = 0;
    int repaired_count = 0;
    std::uint64_t seed = 0;
    bool deterministic = false;
    std::vector<Edge> matched_edges; // the matching picks on the reduced graph
};

/// Full pipeline: reduce (for n >= 2), cover the reduced graph with the
/// matching heuristic, pull in vertices isolated in the input, then
/// repair until the cover verifies against the original graph. The
/// returned cover always verifies. Requires n >= 1.
CoverSolution solve_nmvc(const Graph& g, int n, RandomSource& rng);

} // namespace ncover
