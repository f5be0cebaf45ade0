#include "ncover/generate.hpp"

#include <stdexcept>
#include <string>

#include "ncover/random.hpp"

namespace ncover {

Graph make_path(int k) {
    if (k < 1)
        throw std::invalid_argument("path needs k >= 1");
    GraphBuilder b;
    for (int i = 0; i < k; ++i)
        b.add_vertex(i);
    for (int i = 0; i + 1 < k; ++i)
        b.add_edge(i, i + 1);
    return b.build();
}

Graph make_cycle(int k) {
    if (k < 3)
        throw std::invalid_argument("cycle needs k >= 3");
    GraphBuilder b;
    for (int i = 0; i + 1 < k; ++i)
        b.add_edge(i, i + 1);
    b.add_edge(k - 1, 0);
    return b.build();
}

Graph make_star(int leaves) {
    if (leaves < 1)
        throw std::invalid_argument("star needs at least one leaf");
    GraphBuilder b;
    for (int i = 1; i <= leaves; ++i)
        b.add_edge(0, i);
    return b.build();
}

Graph random_tree(int k, std::uint64_t seed) {
    if (k < 1)
        throw std::invalid_argument("tree needs k >= 1");
    RandomSource rng = RandomSource::seeded(seed).derive("tree");
    GraphBuilder b;
    b.add_vertex(0);
    for (int i = 1; i < k; ++i)
        b.add_edge(static_cast<int>(rng.pick_index(static_cast<std::size_t>(i))), i);
    return b.build();
}

Graph random_gnp(int k, double p, std::uint64_t seed) {
    if (k < 0)
        throw std::invalid_argument("gnp needs k >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("gnp needs p in [0, 1]");
    RandomSource rng = RandomSource::seeded(seed).derive("gnp");
    GraphBuilder b;
    for (int i = 0; i < k; ++i)
        b.add_vertex(i);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (rng.uniform01() < p)
                b.add_edge(i, j);
    return b.build();
}

Graph generate(std::string_view model, int k, double p, std::uint64_t seed) {
    if (model == "gnp")
        return random_gnp(k, p, seed);
    if (model == "path")
        return make_path(k);
    if (model == "cycle")
        return make_cycle(k);
    if (model == "star")
        return make_star(k);
    if (model == "tree")
        return random_tree(k, seed);
    throw std::invalid_argument("unknown model '" + std::string(model) +
                                "' (expected gnp, path, cycle, star, or tree)");
}

} // namespace ncover
