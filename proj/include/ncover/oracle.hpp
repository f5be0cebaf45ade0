#pragma once

#include <cstdint>
#include <vector>

#include "ncover/graph.hpp"

namespace ncover {

struct OracleResult {
    std::vector<VertexId> optimum; // sorted; lexicographically first among minima
    std::size_t size = 0;
    std::uint64_t explored = 0;    // candidate sets evaluated
};

/// Minimum n-distance cover by subset enumeration in increasing
/// cardinality (lexicographic within a cardinality), so the first hit is
/// the minimum and ties resolve deterministically. Intended for small
/// graphs; refuses inputs with more than `limit` vertices.
OracleResult exact_nmvc(const Graph& g, int n, std::size_t limit = 20);

/// Minimum classic vertex cover by the same enumeration scheme.
OracleResult exact_vc(const Graph& g, std::size_t limit = 20);

} // namespace ncover
