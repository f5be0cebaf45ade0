#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncover/graph.hpp"
#include "ncover/trail.hpp"

namespace ncover {

/// One synthetic-edge proposal: `target` gets wired directly to a trail
/// endpoint. The path is the BFS shortest path (over original edges, as
/// they stood at the start of the event) that justified the proposal;
/// path.size() == distance.
struct Attachment {
    VertexId endpoint = 0;
    VertexId target = 0;
    int distance = 0;
    std::vector<Edge> path;
    bool edge_added = true; // false when the proposal duplicated an existing edge
};

/// Record of a single contraction step.
struct ReductionEvent {
    int n_at_event = 0;
    Trail trail;
    std::vector<VertexId> targets_from_start; // attachment set of trail.start()
    std::vector<VertexId> targets_from_end;   // attachment set of trail.end()
    std::vector<Attachment> attachments;      // start-side proposals, then end-side
    std::vector<Attachment> unit_skips;       // degree-1 vertices one hop from an endpoint,
                                              // left alone by the reduction but recorded
                                              // for the extended-graph construction
    std::vector<Edge> added;                  // deduplicated synthetic edges, sorted
    std::vector<Edge> removed_from_start;     // deletion paths rooted at trail.start()
    std::vector<Edge> removed_from_end;       // rooted at trail.end(), minus the start-side edges

    std::vector<Edge> removed() const;        // union of both deletion sets, sorted
};

/// Mutable working state of the reduction: the fixed vertex set, the
/// surviving original (distance-1) edges, the synthetic edges added so
/// far, and the current trail length target. Only original edges are
/// eligible for trail search and distance queries.
class ReductionState {
public:
    ReductionState(const Graph& g, int n);

    int n_current() const { return n_current_; }
    void decrement() { --n_current_; }

    std::span<const VertexId> vertices() const { return base_.vertices(); }
    const std::set<Edge>& original_edges() const { return original_; }
    const std::set<Edge>& synthetic_edges() const { return synthetic_; }

    bool has_original_edge(VertexId a, VertexId b) const;
    bool has_any_edge(const Edge& e) const;

    /// Degree over surviving original edges.
    int original_degree(VertexId v) const;
    /// Neighbors over surviving original edges, ascending.
    const std::vector<VertexId>& original_neighbors(VertexId v) const;

    /// BFS over original edges from src; unreachable entries are -1.
    /// Neighbor exploration is in ascending id order, so parents are
    /// reproducible and deletion paths are well defined.
    struct BfsTree {
        std::vector<int> dist;      // by dense index
        std::vector<int> parent;    // dense index of parent, -1 at root/unreached
    };
    BfsTree original_bfs(VertexId src) const;

    int dist_at(const BfsTree& t, VertexId v) const { return t.dist[base_.index_of(v)]; }
    /// Edges of the tree path src -> v; requires v reached.
    std::vector<Edge> path_edges(const BfsTree& t, VertexId v) const;

    void add_synthetic(const Edge& e);
    void remove_original(const Edge& e);

    /// Graph over the fixed vertex set with surviving original plus
    /// synthetic edges, origin flags dropped.
    Graph result_graph() const;

    const Graph& base() const { return base_; }

private:
    Graph base_;
    std::set<Edge> original_;
    std::set<Edge> synthetic_;
    std::vector<std::vector<VertexId>> org_adj_; // by dense index, ascending
    int n_current_;
};

/// Attachment sets of a trail: from each endpoint, the vertices at
/// distance exactly n plus the degree-1 vertices at distance d with
/// 2 <= d < n, measured over the current original-edge subgraph.
std::pair<std::vector<VertexId>, std::vector<VertexId>>
attachment_sets(const ReductionState& state, const Trail& trail, int n);

/// Apply one contraction step for the given trail: add synthetic edges
/// toward both attachment sets, delete the BFS paths that justified
/// them, and return the event record. Throws if the trail is not a
/// valid trail of original edges in `state`. The event may be empty
/// (nothing added or removed) when both attachment sets are empty.
ReductionEvent reduce_once(ReductionState& state, const Trail& trail, int n);

struct ReductionResult {
    Graph reduced;                      // original survivors + synthetic edges
    std::vector<ReductionEvent> events; // in application order
    std::vector<Edge> surviving_original;
    std::vector<Edge> synthetic;
};

/// Full reduction loop: contract n-trails until none exists, decrement,
/// and stop below 2. Trails whose attachment sets are both empty cannot
/// make progress and are treated like a failed search (the length target
/// is decremented). Requires n >= 2.
ReductionResult reduce(const Graph& g, int n, RandomSource& rng);

/// Line-oriented text form of a reduction trace, one event block per
/// step. `token` renders vertex ids (defaults to decimal).
std::string serialize_trace(std::span<const ReductionEvent> events,
                            const std::function<std::string(VertexId)>& token = nullptr);

} // namespace ncover
