#include "ncover/random.hpp"

#include <stdexcept>

namespace ncover {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

RandomSource::RandomSource(std::uint64_t seed, bool deterministic)
    : seed_(seed), deterministic_(deterministic), engine_(splitmix64(seed)) {}

RandomSource RandomSource::derive(std::string_view tag) const {
    return RandomSource(splitmix64(seed_ ^ fnv1a(tag)), deterministic_);
}

std::size_t RandomSource::pick_index(std::size_t count) {
    if (count == 0)
        throw std::invalid_argument("pick_index: empty candidate set");
    if (deterministic_ || count == 1)
        return 0;
    // Rejection sampling keeps the draw unbiased and the stream portable
    // across standard library implementations.
    const std::uint64_t span = count;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
    std::uint64_t r = engine_();
    while (r >= limit)
        r = engine_();
    return static_cast<std::size_t>(r % span);
}

double RandomSource::uniform01() {
    return (engine_() >> 11) * 0x1.0p-53;
}

} // namespace ncover
