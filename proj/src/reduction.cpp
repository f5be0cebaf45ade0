#include "ncover/reduction.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace ncover {

std::vector<Edge> ReductionEvent::removed() const {
    std::vector<Edge> all = removed_from_start;
    all.insert(all.end(), removed_from_end.begin(), removed_from_end.end());
    std::sort(all.begin(), all.end());
    return all;
}

ReductionState::ReductionState(const Graph& g, int n) : base_(g), n_current_(n) {
    if (n < 1)
        throw std::invalid_argument("reduction state requires n >= 1");
    original_.insert(g.edges().begin(), g.edges().end());
    org_adj_.resize(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        org_adj_[i] = g.neighbors(g.vertices()[i]);
}

bool ReductionState::has_original_edge(VertexId a, VertexId b) const {
    if (a == b)
        return false;
    return original_.contains(Edge(a, b));
}

bool ReductionState::has_any_edge(const Edge& e) const {
    return original_.contains(e) || synthetic_.contains(e);
}

int ReductionState::original_degree(VertexId v) const {
    return static_cast<int>(org_adj_[base_.index_of(v)].size());
}

const std::vector<VertexId>& ReductionState::original_neighbors(VertexId v) const {
    return org_adj_[base_.index_of(v)];
}

ReductionState::BfsTree ReductionState::original_bfs(VertexId src) const {
    BfsTree t;
    t.dist.assign(base_.vertex_count(), -1);
    t.parent.assign(base_.vertex_count(), -1);
    const std::size_t root = base_.index_of(src);
    t.dist[root] = 0;
    std::deque<std::size_t> frontier{root};
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        for (VertexId w : org_adj_[cur]) { // ascending id order
            const std::size_t wi = base_.index_of(w);
            if (t.dist[wi] >= 0)
                continue;
            t.dist[wi] = t.dist[cur] + 1;
            t.parent[wi] = static_cast<int>(cur);
            frontier.push_back(wi);
        }
    }
    return t;
}

std::vector<Edge> ReductionState::path_edges(const BfsTree& t, VertexId v) const {
    std::size_t cur = base_.index_of(v);
    if (t.dist[cur] < 0)
        throw std::logic_error("path_edges: vertex unreachable");
    std::vector<Edge> path;
    while (t.parent[cur] >= 0) {
        const std::size_t par = static_cast<std::size_t>(t.parent[cur]);
        path.emplace_back(base_.vertices()[par], base_.vertices()[cur]);
        cur = par;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

void ReductionState::add_synthetic(const Edge& e) {
    if (has_any_edge(e))
        throw std::logic_error("add_synthetic: edge already present");
    synthetic_.insert(e);
}

void ReductionState::remove_original(const Edge& e) {
    if (original_.erase(e) == 0)
        throw std::logic_error("remove_original: edge not present");
    auto drop = [&](VertexId at, VertexId gone) {
        auto& nbrs = org_adj_[base_.index_of(at)];
        nbrs.erase(std::find(nbrs.begin(), nbrs.end(), gone));
    };
    drop(e.u, e.v);
    drop(e.v, e.u);
}

Graph ReductionState::result_graph() const {
    GraphBuilder b;
    for (VertexId v : base_.vertices())
        b.add_vertex(v);
    for (const Edge& e : original_)
        b.add_edge(e);
    for (const Edge& e : synthetic_)
        b.add_edge(e);
    return b.build();
}

namespace {

// Attachment targets seen from one endpoint: vertices at distance
// exactly n, plus degree-1 vertices in the band 2 <= d < n. Distances
// and degrees are over the surviving original edges.
std::vector<VertexId> targets_from(const ReductionState& state,
                                   const ReductionState::BfsTree& tree, int n) {
    std::vector<VertexId> out;
    for (VertexId v : state.vertices()) {
        const int d = state.dist_at(tree, v);
        if (d == n || (d >= 2 && d < n && state.original_degree(v) == 1))
            out.push_back(v);
    }
    return out; // ascending, since vertices() is ascending
}

std::vector<Attachment> unit_skips_from(const ReductionState& state, VertexId endpoint) {
    std::vector<Attachment> skips;
    for (VertexId t : state.original_neighbors(endpoint))
        if (state.original_degree(t) == 1)
            skips.push_back({endpoint, t, 1, {Edge(endpoint, t)}, false});
    return skips;
}

} // namespace

std::pair<std::vector<VertexId>, std::vector<VertexId>>
attachment_sets(const ReductionState& state, const Trail& trail, int n) {
    const auto from_start = state.original_bfs(trail.start());
    const auto from_end = state.original_bfs(trail.end());
    return {targets_from(state, from_start, n), targets_from(state, from_end, n)};
}

ReductionEvent reduce_once(ReductionState& state, const Trail& trail, int n) {
    if (trail.length() != n || !is_valid_trail(state, trail))
        throw std::invalid_argument("reduce_once: not a valid n-trail of original edges");

    ReductionEvent ev;
    ev.n_at_event = n;
    ev.trail = trail;

    // Everything below is measured before any mutation of this event.
    const auto tree_start = state.original_bfs(trail.start());
    const auto tree_end = state.original_bfs(trail.end());
    ev.targets_from_start = targets_from(state, tree_start, n);
    ev.targets_from_end = targets_from(state, tree_end, n);
    ev.unit_skips = unit_skips_from(state, trail.start());
    const auto end_skips = unit_skips_from(state, trail.end());
    ev.unit_skips.insert(ev.unit_skips.end(), end_skips.begin(), end_skips.end());

    auto propose = [&](VertexId endpoint, VertexId target,
                       const ReductionState::BfsTree& tree) {
        Attachment a;
        a.endpoint = endpoint;
        a.target = target;
        a.distance = state.dist_at(tree, target);
        a.path = state.path_edges(tree, target);
        const Edge e(endpoint, target);
        a.edge_added = !state.has_any_edge(e);
        if (a.edge_added) {
            state.add_synthetic(e);
            ev.added.push_back(e);
        }
        ev.attachments.push_back(std::move(a));
    };
    for (VertexId t : ev.targets_from_start)
        propose(trail.start(), t, tree_start);
    for (VertexId t : ev.targets_from_end)
        propose(trail.end(), t, tree_end);
    std::sort(ev.added.begin(), ev.added.end());

    // Deletion sets: one BFS tree per endpoint fixes the paths; the
    // end-side set excludes edges the start side already claimed.
    std::set<Edge> from_start;
    std::set<Edge> from_end;
    for (const Attachment& a : ev.attachments) {
        const bool start_side = a.endpoint == trail.start();
        for (const Edge& e : a.path) {
            if (start_side)
                from_start.insert(e);
            else if (!from_start.contains(e))
                from_end.insert(e);
        }
    }
    ev.removed_from_start.assign(from_start.begin(), from_start.end());
    ev.removed_from_end.assign(from_end.begin(), from_end.end());
    for (const Edge& e : ev.removed())
        state.remove_original(e);
    return ev;
}

ReductionResult reduce(const Graph& g, int n, RandomSource& rng) {
    if (n < 2)
        throw std::invalid_argument("reduce requires n >= 2");
    ReductionState state(g, n);
    std::vector<ReductionEvent> events;
    while (state.n_current() >= 2) {
        const auto trail = find_n_trail(state, state.n_current(), rng);
        if (!trail) {
            state.decrement();
            continue;
        }
        ReductionEvent ev = reduce_once(state, *trail, state.n_current());
        if (ev.removed_from_start.empty() && ev.removed_from_end.empty()) {
            // Both attachment sets were empty, so the step changed
            // nothing; retrying the same length cannot terminate.
            state.decrement();
            continue;
        }
        events.push_back(std::move(ev));
    }
    ReductionResult res;
    res.reduced = state.result_graph();
    res.events = std::move(events);
    res.surviving_original.assign(state.original_edges().begin(), state.original_edges().end());
    res.synthetic.assign(state.synthetic_edges().begin(), state.synthetic_edges().end());
    return res;
}

std::string serialize_trace(std::span<const ReductionEvent> events,
                            const std::function<std::string(VertexId)>& token) {
    auto name = [&](VertexId v) { return token ? token(v) : std::to_string(v); };
    auto edge_str = [&](const Edge& e) { return name(e.u) + "-" + name(e.v); };
    std::ostringstream out;
    for (const ReductionEvent& ev : events) {
        out << "event n=" << ev.n_at_event << "\n";
        out << "trail";
        for (VertexId v : ev.trail.vertices)
            out << ' ' << name(v);
        out << "\ntargets-start";
        for (VertexId v : ev.targets_from_start)
            out << ' ' << name(v);
        out << "\ntargets-end";
        for (VertexId v : ev.targets_from_end)
            out << ' ' << name(v);
        out << "\nadded";
        for (const Attachment& a : ev.attachments)
            if (a.edge_added)
                out << ' ' << edge_str(Edge(a.endpoint, a.target)) << ':' << a.distance;
        out << "\nremoved";
        for (const Edge& e : ev.removed())
            out << ' ' << edge_str(e);
        out << "\nskipped";
        for (const Attachment& a : ev.unit_skips)
            out << ' ' << edge_str(Edge(a.endpoint, a.target)) << ':' << a.distance;
        out << "\nend\n";
    }
    return out.str();
}

} // namespace ncover
