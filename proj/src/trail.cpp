#include "ncover/trail.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ncover/reduction.hpp"

namespace ncover {

namespace {

constexpr int kWalkRestarts = 32;

struct StartCandidate {
    Edge edge;
    VertexId tail; // trail start
    VertexId head; // walk continues from here
};

// Edges at v not yet consumed by the partial trail, over original edges.
int continuation_degree(const ReductionState& state, VertexId v, const std::set<Edge>& consumed) {
    int count = 0;
    for (VertexId w : state.original_neighbors(v))
        if (!consumed.contains(Edge(v, w)))
            ++count;
    return count;
}

// One randomized greedy walk. Mirrors the degree-guarded growth rule:
// every step moves to a vertex that still has a second unconsumed edge,
// so the walk never needs to look back. That makes it fast but
// incomplete; the exhaustive decider backs it up.
std::optional<Trail> greedy_walk(const ReductionState& state, int n, RandomSource& rng) {
    std::vector<StartCandidate> starts;
    for (const Edge& e : state.original_edges()) {
        if (state.original_degree(e.u) >= 2)
            starts.push_back({e, e.v, e.u});
        if (state.original_degree(e.v) >= 2)
            starts.push_back({e, e.u, e.v});
    }
    if (starts.empty())
        return std::nullopt;

    const StartCandidate& s = starts[rng.pick_index(starts.size())];
    Trail trail;
    trail.vertices = {s.tail, s.head};
    trail.edges = {s.edge};
    std::set<Edge> consumed{s.edge};
    std::set<VertexId> visited{s.tail, s.head};

    while (trail.length() < n) {
        const VertexId head = trail.end();
        const bool completing = trail.length() + 1 == n;
        std::vector<VertexId> nexts;
        for (VertexId m : state.original_neighbors(head)) {
            const Edge step(head, m);
            if (consumed.contains(step))
                continue;
            // Growth rule: the far vertex must still hold a second
            // unconsumed edge. Applies to every step, which is why this
            // walk can strand itself near leaves; the exhaustive decider
            // covers those cases.
            if (continuation_degree(state, m, consumed) < 2)
                continue;
            if (completing) {
                // The final vertex must be fresh so both endpoints keep
                // degree 1 within the trail (open trail).
                if (visited.contains(m))
                    continue;
            } else if (m == trail.start()) {
                continue; // revisiting the start would close it off
            }
            nexts.push_back(m);
        }
        if (nexts.empty())
            return std::nullopt;
        const VertexId m = nexts[rng.pick_index(nexts.size())];
        trail.edges.emplace_back(head, m);
        trail.vertices.push_back(m);
        consumed.insert(trail.edges.back());
        visited.insert(m);
    }
    return trail;
}

// Exhaustive edge-distinct DFS bounded at depth n. Finds a witness when
// any open n-trail of original edges exists.
std::optional<Trail> exhaustive_search(const ReductionState& state, int n) {
    const Graph& base = state.base();
    const std::size_t vcount = base.vertex_count();

    // Dense adjacency with edge indices for O(1) consumed checks.
    std::vector<Edge> edge_list(state.original_edges().begin(), state.original_edges().end());
    if (static_cast<int>(edge_list.size()) < n)
        return std::nullopt;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vcount); // (nbr idx, edge idx)
    for (std::size_t ei = 0; ei < edge_list.size(); ++ei) {
        const Edge& e = edge_list[ei];
        adj[base.index_of(e.u)].emplace_back(base.index_of(e.v), ei);
        adj[base.index_of(e.v)].emplace_back(base.index_of(e.u), ei);
    }
    for (auto& lst : adj)
        std::sort(lst.begin(), lst.end());

    std::vector<bool> consumed(edge_list.size(), false);
    std::vector<int> seen(vcount, 0); // occurrences in the current walk
    std::vector<std::size_t> walk;    // dense vertex indices

    std::optional<Trail> found;
    auto dfs = [&](auto&& self, std::size_t v0, std::size_t cur, int depth) -> bool {
        for (const auto& [nbr, ei] : adj[cur]) {
            if (consumed[ei])
                continue;
            if (depth + 1 == n) {
                if (seen[nbr] != 0)
                    continue; // endpoint must appear exactly once
            } else {
                if (nbr == v0)
                    continue; // keep the start endpoint at trail-degree 1
            }
            consumed[ei] = true;
            ++seen[nbr];
            walk.push_back(nbr);
            if (depth + 1 == n) {
                Trail t;
                for (std::size_t wi : walk)
                    t.vertices.push_back(base.vertices()[wi]);
                for (std::size_t i = 0; i + 1 < walk.size(); ++i)
                    t.edges.emplace_back(base.vertices()[walk[i]], base.vertices()[walk[i + 1]]);
                found = std::move(t);
                return true;
            }
            if (self(self, v0, nbr, depth + 1))
                return true;
            walk.pop_back();
            --seen[nbr];
            consumed[ei] = false;
        }
        return false;
    };

    for (std::size_t v0 = 0; v0 < vcount; ++v0) {
        seen[v0] = 1;
        walk.push_back(v0);
        if (dfs(dfs, v0, v0, 0))
            return found;
        walk.pop_back();
        seen[v0] = 0;
    }
    return std::nullopt;
}

} // namespace

bool is_valid_trail(const ReductionState& state, const Trail& trail) {
    if (trail.vertices.size() != trail.edges.size() + 1 || trail.edges.empty())
        return false;
    std::set<Edge> distinct;
    for (std::size_t i = 0; i < trail.edges.size(); ++i) {
        const Edge& e = trail.edges[i];
        if (e != Edge(trail.vertices[i], trail.vertices[i + 1]))
            return false; // consecutive edges must chain through the walk
        if (!state.has_original_edge(e.u, e.v))
            return false; // only eligible (original) edges
        if (!distinct.insert(e).second)
            return false;
    }
    // Open trail: both endpoints occur exactly once in the sequence.
    const VertexId a = trail.start();
    const VertexId b = trail.end();
    if (a == b)
        return false;
    int ca = 0;
    int cb = 0;
    for (VertexId v : trail.vertices) {
        ca += v == a;
        cb += v == b;
    }
    return ca == 1 && cb == 1;
}

std::optional<Trail> find_n_trail(const ReductionState& state, int n, RandomSource& rng) {
    if (n < 2)
        throw std::invalid_argument("trail search requires n >= 2");
    const int attempts = rng.deterministic_mode() ? 1 : kWalkRestarts;
    for (int i = 0; i < attempts; ++i) {
        if (auto t = greedy_walk(state, n, rng))
            return t;
    }
    // Fall back to the exact decider so a miss is a proof of absence.
    return exhaustive_search(state, n);
}

bool n_trail_exists(const ReductionState& state, int n) {
    if (n < 2)
        throw std::invalid_argument("trail search requires n >= 2");
    return exhaustive_search(state, n).has_value();
}

} // namespace ncover
