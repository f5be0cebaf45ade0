#pragma once

#include <optional>
#include <vector>

#include "ncover/graph.hpp"

namespace ncover {

class ReductionState;

/// Open trail: a walk whose edges are pairwise distinct and whose two
/// endpoints each appear exactly once in the vertex sequence (so both
/// have degree 1 counting trail edges only). Interior vertices may
/// repeat; closed walks are not trails here.
struct Trail {
    std::vector<VertexId> vertices; // walk order, edges.size() + 1 entries
    std::vector<Edge> edges;        // walk order

    VertexId start() const { return vertices.front(); }
    VertexId end() const { return vertices.back(); }
    int length() const { return static_cast<int>(edges.size()); }
};

/// Structural check of the Trail invariants against the eligible
/// (original) edges of a reduction state.
bool is_valid_trail(const ReductionState& state, const Trail& trail);

/// Search for a trail of exactly n eligible edges. A randomized greedy
/// walk runs first (restarted up to a fixed budget); when it comes up
/// empty the exhaustive decider takes over, so a nullopt result is a
/// guarantee that no such trail exists. Requires n >= 2.
std::optional<Trail> find_n_trail(const ReductionState& state, int n, RandomSource& rng);

/// Exact existence decider: edge-distinct depth-first search bounded at
/// depth n over eligible edges. Requires n >= 2.
bool n_trail_exists(const ReductionState& state, int n);

} // namespace ncover
