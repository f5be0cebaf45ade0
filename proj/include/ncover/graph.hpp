#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncover/random.hpp"

namespace ncover {

using VertexId = int;

/// Unordered pair of distinct vertices, stored normalized (u < v).
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b);

    bool touches(VertexId w) const { return u == w || v == w; }
    VertexId other(VertexId w) const { return w == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Hop count between two vertices; infinite when no path exists.
class Distance {
public:
    static Distance infinite() { return Distance(-1); }
    static Distance hops(int h);

    bool is_infinite() const { return value_ < 0; }
    bool is_finite() const { return value_ >= 0; }
    int hops() const; // throws when infinite

    friend bool operator==(const Distance&, const Distance&) = default;

private:
    explicit Distance(int v) : value_(v) {}
    int value_;
};

/// Simple undirected unweighted graph over integer vertex ids.
/// Immutable once built; construct through GraphBuilder.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Vertex ids in ascending order.
    std::span<const VertexId> vertices() const { return verts_; }
    /// Edges sorted by normalized (u, v) pair.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const { return index_.contains(v); }
    bool has_edge(VertexId a, VertexId b) const;

    /// Neighbors of v in ascending order. Throws on unknown vertex.
    const std::vector<VertexId>& neighbors(VertexId v) const;

    /// Number of incident edges. Throws on unknown vertex.
    int degree(VertexId v) const;

    bool is_isolated(VertexId v) const { return degree(v) == 0; }

    /// Geodesic (BFS) distance; infinite when u and v are disconnected.
    Distance distance(VertexId a, VertexId b) const;

    /// All vertices within n hops of source, source included, ascending.
    /// Requires n >= 1.
    std::vector<VertexId> vertices_within(VertexId source, int n) const;

    /// Largest finite distance from v to any reachable vertex.
    int eccentricity(VertexId v) const;

    /// Dense position of a vertex in [0, vertex_count). Throws if unknown.
    std::size_t index_of(VertexId v) const;

    friend bool operator==(const Graph&, const Graph&);

private:
    friend class GraphBuilder;

    std::vector<VertexId> verts_;          // ascending
    std::vector<Edge> edges_;              // sorted
    std::vector<std::vector<VertexId>> adj_; // by dense index, ascending
    std::unordered_map<VertexId, std::size_t> index_;
};

/// Single-threaded builder enforcing the simple-graph rules: self-loops
/// and duplicate edges are construction errors.
class GraphBuilder {
public:
    GraphBuilder& add_vertex(VertexId v);
    GraphBuilder& add_edge(VertexId a, VertexId b);
    GraphBuilder& add_edge(const Edge& e) { return add_edge(e.u, e.v); }

    Graph build() const;

private:
    std::vector<VertexId> verts_;
    std::vector<Edge> edges_;
};

/// Convenience: graph from explicit vertex and edge lists.
Graph make_graph(std::span<const VertexId> vertices, std::span<const Edge> edges);

/// Greedy maximal matching: repeatedly pick an edge (lexicographically
/// smallest in deterministic mode, uniform otherwise) and discard
/// everything incident to its endpoints. The result is always maximal.
std::vector<Edge> greedy_maximal_matching(const Graph& g, RandomSource& rng);

} // namespace ncover
