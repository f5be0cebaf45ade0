#include "ncover/extension.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncover {

bool ExtendedGraph::original_kept(const Edge& e) const {
    return graph.has_edge(e.u, e.v);
}

Graph ExtendedGraph::contracted() const {
    // Map every stretched-path edge back to the original edge it stands
    // for; everything else passes through.
    std::map<Edge, Edge> origin;
    for (const auto& [orig, paths] : splits)
        for (const auto& [inserted, path] : paths)
            for (const Edge& e : path)
                origin.emplace(e, orig);
    GraphBuilder b;
    for (VertexId v : base.vertices())
        b.add_vertex(v);
    std::set<Edge> seen;
    for (const Edge& e : graph.edges()) {
        const auto it = origin.find(e);
        const Edge mapped = it == origin.end() ? e : it->second;
        if (seen.insert(mapped).second)
            b.add_edge(mapped);
    }
    return b.build();
}

std::vector<Edge> ExtendedGraph::attachment_trail(const Attachment& a, int n_at_event) const {
    if (a.path.empty())
        throw std::invalid_argument("attachment has no path");
    std::vector<Edge> trail(a.path.begin(), a.path.end() - 1);
    for (const Edge& e : trail)
        if (!graph.has_edge(e.u, e.v))
            throw std::logic_error("attachment path edge missing from stretched graph");
    const Edge tail = a.path.back();
    const int inserted = n_at_event - a.distance;
    if (inserted == 0) {
        if (!graph.has_edge(tail.u, tail.v))
            throw std::logic_error("exact attachment edge missing from stretched graph");
        trail.push_back(tail);
        return trail;
    }
    const auto split_it = splits.find(tail);
    if (split_it == splits.end() || !split_it->second.contains(inserted))
        throw std::logic_error("no stretched path recorded for attachment");
    const std::vector<Edge>& replacement = split_it->second.at(inserted);
    for (const Edge& e : replacement)
        if (!graph.has_edge(e.u, e.v))
            throw std::logic_error("stretched path edge missing from graph");
    // Orient the replacement to run from the tail's path-side vertex.
    trail.insert(trail.end(), replacement.begin(), replacement.end());
    return trail;
}

ExtendedGraph extend_graph(const Graph& g, std::span<const ReductionEvent> trace, int n) {
    if (n < 2)
        throw std::invalid_argument("extend_graph requires n >= 2");

    // Demands: edge -> set of fresh-vertex counts it must provide.
    std::map<Edge, std::set<int>> demands;
    auto record = [&](const Attachment& a, int n_at_event) {
        if (a.path.empty() || static_cast<int>(a.path.size()) != a.distance)
            throw std::invalid_argument("trace attachment path does not match its distance");
        for (const Edge& e : a.path)
            if (!g.has_edge(e.u, e.v))
                throw std::invalid_argument("trace path edge not present in the input graph");
        demands[a.path.back()].insert(n_at_event - a.distance);
    };
    for (const ReductionEvent& ev : trace) {
        for (const Edge& e : ev.trail.edges)
            if (!g.has_edge(e.u, e.v))
                throw std::invalid_argument("trace trail edge not present in the input graph");
        for (const Attachment& a : ev.attachments)
            record(a, ev.n_at_event);
        for (const Attachment& a : ev.unit_skips)
            record(a, ev.n_at_event);
    }

    ExtendedGraph ext;
    ext.base = g;

    VertexId next_id = 0;
    for (VertexId v : g.vertices())
        next_id = std::max(next_id, v + 1);

    std::set<Edge> replaced;
    GraphBuilder b;
    for (VertexId v : g.vertices())
        b.add_vertex(v);

    for (const auto& [edge, counts] : demands) {
        const bool keep_original = counts.contains(0);
        bool first_positive = true;
        for (int inserted : counts) {
            if (inserted == 0)
                continue;
            std::vector<Edge> path;
            VertexId prev = edge.u;
            for (int i = 0; i < inserted; ++i) {
                const VertexId fresh = next_id++;
                ext.added_vertices.push_back(fresh);
                b.add_vertex(fresh);
                path.emplace_back(prev, fresh);
                prev = fresh;
            }
            path.emplace_back(prev, edge.v);
            for (const Edge& e : path)
                b.add_edge(e);
            ext.splits[edge].emplace(inserted, std::move(path));
            // The first stretched path replaces the edge unless an exact
            // attachment pinned the original in place; the rest run in
            // parallel.
            if (first_positive && !keep_original)
                replaced.insert(edge);
            first_positive = false;
        }
    }

    for (const Edge& e : g.edges())
        if (!replaced.contains(e))
            b.add_edge(e);

    ext.graph = b.build();
    return ext;
}

MatchingReport matching_report(const Graph& g, const Graph& g_reduced,
                               const Graph& g_stretched, int n, RandomSource& rng,
                               std::size_t oracle_limit) {
    if (n < 1)
        throw std::invalid_argument("matching_report requires n >= 1");
    MatchingReport rep;
    RandomSource rng_m = rng.derive("match:g");
    RandomSource rng_p = rng.derive("match:reduced");
    RandomSource rng_d = rng.derive("match:stretched");
    rep.m = greedy_maximal_matching(g, rng_m).size();
    rep.m_prime = greedy_maximal_matching(g_reduced, rng_p).size();
    rep.m_dprime = greedy_maximal_matching(g_stretched, rng_d).size();
    rep.n_effective = n % 2 == 0 ? n : n + 1;
    // m_prime <= (2/n_eff) * m_dprime, compared exactly in integers.
    rep.eq8_holds =
        static_cast<std::uint64_t>(rep.n_effective) * rep.m_prime <= 2 * rep.m_dprime;
    if (g_stretched.vertex_count() <= oracle_limit) {
        const OracleResult opt = exact_vc(g_stretched, oracle_limit);
        if (opt.size > 0)
            rep.eq10_value = 2.0 * static_cast<double>(rep.m_prime) / static_cast<double>(opt.size);
        else if (rep.m_prime == 0)
            rep.eq10_value = 0.0; // edgeless instance: bound holds vacuously
    }
    return rep;
}

std::string matching_report_csv_header() {
    return "graph_id,n,m,m_prime,m_dprime,n_effective,eq8_holds,eq10_value";
}

std::string matching_report_csv_row(const std::string& graph_id, int n,
                                    const MatchingReport& report) {
    std::ostringstream out;
    out << graph_id << ',' << n << ',' << report.m << ',' << report.m_prime << ','
        << report.m_dprime << ',' << report.n_effective << ','
        << (report.eq8_holds ? "true" : "false") << ',';
    if (report.eq10_value)
        out << *report.eq10_value;
    return out.str();
}

} // namespace ncover
