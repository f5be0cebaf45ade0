#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ncover {

/// Seeded random stream with a deterministic mode.
///
/// In deterministic mode every choice falls back to the first candidate in
/// canonical (ascending) order, which is what the golden tests rely on.
/// Independent consumers should call derive() with a distinct tag so that
/// adding draws to one stage never perturbs another.
class RandomSource {
public:
    static RandomSource deterministic(std::uint64_t seed = 0) { return RandomSource(seed, true); }
    static RandomSource seeded(std::uint64_t seed) { return RandomSource(seed, false); }

    /// Child stream keyed by (base seed, tag). Deterministic mode is inherited.
    RandomSource derive(std::string_view tag) const;

    bool deterministic_mode() const { return deterministic_; }
    std::uint64_t seed() const { return seed_; }

    /// Uniform index in [0, count). Returns 0 in deterministic mode.
    /// count must be nonzero.
    std::size_t pick_index(std::size_t count);

    /// Uniform double in [0, 1). Draws from the stream even in
    /// deterministic mode (used by generators, which are seed-driven).
    double uniform01();

private:
    RandomSource(std::uint64_t seed, bool deterministic);

    std::uint64_t seed_;
    bool deterministic_;
    std::mt19937_64 engine_;
};

} // namespace ncover
