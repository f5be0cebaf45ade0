#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncover/graph.hpp"
#include "ncover/oracle.hpp"
#include "ncover/reduction.hpp"

namespace ncover {

/// Stretched version of a graph in which every recorded attachment made
/// below its event's trail length gets enough fresh vertices spliced
/// into the tail edge of its path that the endpoint-to-target trail has
/// exactly n_at_event edges.
///
/// When several attachments land demands on the same edge (possible when
/// a degree-1 vertex is reached from both trail endpoints at different
/// distances), one stretched path replaces the edge and the remaining
/// demands become parallel stretched paths between the same endpoints,
/// so every attachment still maps to a trail of exactly its event's
/// length. A zero demand (an attachment already at exact distance) keeps
/// the original edge in place alongside any stretched siblings.
struct ExtendedGraph {
    Graph graph; // the stretched graph
    Graph base;  // the input it was built from
    std::vector<VertexId> added_vertices; // fresh ids, above the base maximum
    /// original edge -> (inserted vertex count -> replacement path)
    std::map<Edge, std::map<int, std::vector<Edge>>> splits;

    /// True when the original edge survived (it carried no demand, or a
    /// zero demand kept it).
    bool original_kept(const Edge& e) const;

    /// Collapse every stretched path back to its original edge. Equals
    /// the base graph by construction.
    Graph contracted() const;

    /// The stretched-graph trail for an attachment: its recorded path
    /// with the tail edge routed through the stretched replacement of
    /// the right size. Throws if any piece is missing from the graph.
    std::vector<Edge> attachment_trail(const Attachment& a, int n_at_event) const;
};

/// Build the stretched graph for a reduction trace. Demands come from
/// every attachment proposal (added or duplicate-skipped) plus the
/// recorded degree-1 unit skips. Throws when the trace does not fit g.
ExtendedGraph extend_graph(const Graph& g, std::span<const ReductionEvent> trace, int n);

struct MatchingReport {
    std::size_t m = 0;        // maximal matching size on the input graph
    std::size_t m_prime = 0;  // on the reduced graph
    std::size_t m_dprime = 0; // on the stretched graph
    int n_effective = 0;      // n, bumped to the next even value when odd
    bool eq8_holds = false;   // m_prime <= (2 / n_effective) * m_dprime
    std::optional<double> eq10_value; // 2 * m_prime / OPT(stretched), when the oracle fits
};

/// Evaluate the matching-size bound chain on one instance. The three
/// graphs must come from one reduce/extend run over the same input.
MatchingReport matching_report(const Graph& g, const Graph& g_reduced,
                               const Graph& g_stretched, int n, RandomSource& rng,
                               std::size_t oracle_limit = 20);

std::string matching_report_csv_header();
std::string matching_report_csv_row(const std::string& graph_id, int n,
                                    const MatchingReport& report);

} // namespace ncover
