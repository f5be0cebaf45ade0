#include "ncover/cover.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "ncover/reduction.hpp"

namespace ncover {

CoverCheck verify_cover(const Graph& g, std::span<const VertexId> cover, int n) {
    if (n < 1)
        throw std::invalid_argument("verify_cover requires n >= 1");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<std::size_t> frontier;
    for (VertexId s : cover) {
        const std::size_t si = g.index_of(s); // throws on unknown vertex
        if (dist[si] < 0) {
            dist[si] = 0;
            frontier.push_back(si);
        }
    }
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        if (dist[cur] == n)
            continue;
        for (VertexId w : g.neighbors(g.vertices()[cur])) {
            const std::size_t wi = g.index_of(w);
            if (dist[wi] >= 0)
                continue;
            dist[wi] = dist[cur] + 1;
            frontier.push_back(wi);
        }
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (dist[i] < 0)
            return {false, g.vertices()[i]}; // smallest uncovered vertex
    return {true, std::nullopt};
}

MatchingCover approx_vertex_cover(const Graph& g, RandomSource& rng) {
    MatchingCover out;
    out.picks = greedy_maximal_matching(g, rng);
    for (const Edge& e : out.picks) {
        out.cover.push_back(e.u);
        out.cover.push_back(e.v);
    }
    std::sort(out.cover.begin(), out.cover.end());
    return out;
}

std::vector<VertexId> repair(const Graph& g, std::vector<VertexId> cover, int n) {
    for (auto check = verify_cover(g, cover, n); !check.covered;
         check = verify_cover(g, cover, n)) {
        cover.push_back(*check.witness);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

CoverSolution solve_nmvc(const Graph& g, int n, RandomSource& rng) {
    if (n < 1)
        throw std::invalid_argument("solve_nmvc requires n >= 1");
    CoverSolution sol;
    sol.n = n;
    sol.seed = rng.seed();
    sol.deterministic = rng.deterministic_mode();

    Graph target = g;
    if (n >= 2) {
        RandomSource reduce_rng = rng.derive("reduce");
        target = reduce(g, n, reduce_rng).reduced;
    }
    RandomSource avc_rng = rng.derive("avc");
    MatchingCover avc = approx_vertex_cover(target, avc_rng);
    sol.matched_edges = avc.picks;
    sol.cover = avc.cover;

    // Nothing can reach an isolated vertex, so it covers itself.
    for (VertexId v : g.vertices())
        if (g.is_isolated(v))
            sol.cover.push_back(v);
    std::sort(sol.cover.begin(), sol.cover.end());

    const std::size_t before = sol.cover.size();
    sol.cover = repair(g, std::move(sol.cover), n);
    sol.repaired_count = static_cast<int>(sol.cover.size() - before);
    return sol;
}

} // namespace ncover
