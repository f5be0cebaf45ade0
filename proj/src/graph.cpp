#include "ncover/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ncover {

Edge::Edge(VertexId a, VertexId b) {
    if (a == b)
        throw std::invalid_argument("self-loop edge (" + std::to_string(a) + ")");
    u = std::min(a, b);
    v = std::max(a, b);
}

Distance Distance::hops(int h) {
    if (h < 0)
        throw std::invalid_argument("negative hop count");
    return Distance(h);
}

int Distance::hops() const {
    if (is_infinite())
        throw std::logic_error("hops() on infinite distance");
    return value_;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a == b || !has_vertex(a) || !has_vertex(b))
        return false;
    const Edge e(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Graph::index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    return it->second;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    return adj_[index_of(v)];
}

int Graph::degree(VertexId v) const {
    return static_cast<int>(adj_[index_of(v)].size());
}

Distance Graph::distance(VertexId a, VertexId b) const {
    const std::size_t src = index_of(a);
    const std::size_t dst = index_of(b);
    if (src == dst)
        return Distance::hops(0);
    std::vector<int> dist(verts_.size(), -1);
    dist[src] = 0;
    std::deque<std::size_t> frontier{src};
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        for (VertexId w : adj_[cur]) {
            const std::size_t wi = index_.at(w);
            if (dist[wi] >= 0)
                continue;
            dist[wi] = dist[cur] + 1;
            if (wi == dst)
                return Distance::hops(dist[wi]);
            frontier.push_back(wi);
        }
    }
    return Distance::infinite();
}

std::vector<VertexId> Graph::vertices_within(VertexId source, int n) const {
    if (n < 1)
        throw std::invalid_argument("vertices_within requires n >= 1");
    const std::size_t src = index_of(source);
    std::vector<int> dist(verts_.size(), -1);
    dist[src] = 0;
    std::deque<std::size_t> frontier{src};
    std::vector<VertexId> out{verts_[src]};
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        if (dist[cur] == n)
            continue;
        for (VertexId w : adj_[cur]) {
            const std::size_t wi = index_.at(w);
            if (dist[wi] >= 0)
                continue;
            dist[wi] = dist[cur] + 1;
            out.push_back(w);
            frontier.push_back(wi);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::eccentricity(VertexId v) const {
    const std::size_t src = index_of(v);
    std::vector<int> dist(verts_.size(), -1);
    dist[src] = 0;
    std::deque<std::size_t> frontier{src};
    int worst = 0;
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        worst = std::max(worst, dist[cur]);
        for (VertexId w : adj_[cur]) {
            const std::size_t wi = index_.at(w);
            if (dist[wi] >= 0)
                continue;
            dist[wi] = dist[cur] + 1;
            frontier.push_back(wi);
        }
    }
    return worst;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.verts_ == b.verts_ && a.edges_ == b.edges_;
}

GraphBuilder& GraphBuilder::add_vertex(VertexId v) {
    if (v < 0)
        throw std::invalid_argument("vertex ids must be non-negative");
    verts_.push_back(v);
    return *this;
}

GraphBuilder& GraphBuilder::add_edge(VertexId a, VertexId b) {
    const Edge e(a, b); // rejects self-loops
    add_vertex(a);
    add_vertex(b);
    edges_.push_back(e);
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.verts_ = verts_;
    std::sort(g.verts_.begin(), g.verts_.end());
    g.verts_.erase(std::unique(g.verts_.begin(), g.verts_.end()), g.verts_.end());

    g.edges_ = edges_;
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
        throw std::invalid_argument("duplicate edge in graph construction");

    g.index_.reserve(g.verts_.size());
    for (std::size_t i = 0; i < g.verts_.size(); ++i)
        g.index_.emplace(g.verts_[i], i);
    g.adj_.resize(g.verts_.size());
    for (const Edge& e : g.edges_) {
        g.adj_[g.index_.at(e.u)].push_back(e.v);
        g.adj_[g.index_.at(e.v)].push_back(e.u);
    }
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph make_graph(std::span<const VertexId> vertices, std::span<const Edge> edges) {
    GraphBuilder b;
    for (VertexId v : vertices)
        b.add_vertex(v);
    for (const Edge& e : edges)
        b.add_edge(e);
    return b.build();
}

std::vector<Edge> greedy_maximal_matching(const Graph& g, RandomSource& rng) {
    std::vector<Edge> remaining = g.edges(); // sorted
    std::vector<Edge> picks;
    while (!remaining.empty()) {
        const Edge pick = remaining[rng.pick_index(remaining.size())];
        picks.push_back(pick);
        std::erase_if(remaining, [&](const Edge& e) {
            return e.touches(pick.u) || e.touches(pick.v);
        });
    }
    std::sort(picks.begin(), picks.end());
    return picks;
}

} // namespace ncover
