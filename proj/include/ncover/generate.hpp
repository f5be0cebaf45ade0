#pragma once

#include <cstdint>
#include <string_view>

#include "ncover/graph.hpp"

namespace ncover {

/// Path on k vertices (0 .. k-1), k >= 1.
Graph make_path(int k);
/// Cycle on k vertices, k >= 3.
Graph make_cycle(int k);
/// Star with the given number of leaves around center 0, leaves >= 1.
Graph make_star(int leaves);
/// Uniform random recursive tree on k vertices, k >= 1.
Graph random_tree(int k, std::uint64_t seed);
/// Erdos-Renyi G(k, p): every pair drawn independently.
Graph random_gnp(int k, double p, std::uint64_t seed);

/// Dispatch by model name: gnp | path | cycle | star | tree.
/// gnp uses p; the others ignore it. Deterministic in (model, k, p, seed).
Graph generate(std::string_view model, int k, double p, std::uint64_t seed);

} // namespace ncover
