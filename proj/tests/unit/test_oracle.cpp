#include <doctest.h>

#include <stdexcept>

#include "ncover/cover.hpp"
#include "ncover/oracle.hpp"
#include "test_support.hpp"

using namespace ncover;
using testsup::fig1;

TEST_CASE("a star is covered by its center") {
    for (int n : {1, 3}) {
        const OracleResult res = exact_nmvc(make_star(6), n);
        CHECK(res.size == 1);
        CHECK(res.optimum == testsup::ids({0}));
    }
}

TEST_CASE("the example graph needs two vertices at distance 2") {
    const OracleResult res = exact_nmvc(fig1(), 2);
    CHECK(res.size == 2);
    CHECK(verify_cover(fig1(), res.optimum, 2).covered);
}

TEST_CASE("the example graph needs only one vertex at distance 3") {
    // The hub reaches everything within three hops, so the optimum is
    // smaller than the two-vertex cover quoted for this instance.
    const OracleResult res = exact_nmvc(fig1(), 3);
    CHECK(res.size == 1);
    CHECK(res.optimum == testsup::ids({2}));
}

TEST_CASE("path center at distance 2") {
    const OracleResult res = exact_nmvc(make_path(5), 2);
    CHECK(res.size == 1);
    CHECK(res.optimum == testsup::ids({2}));
}

TEST_CASE("classic cover basics") {
    GraphBuilder single;
    single.add_edge(0, 1);
    CHECK(exact_vc(single.build()).size == 1);
    CHECK(exact_vc(make_cycle(4)).size == 2);

    const OracleResult p5 = exact_vc(make_path(5));
    CHECK(p5.size == 2);
    CHECK(p5.optimum == testsup::ids({1, 3}));
}

TEST_CASE("the oracle refuses graphs above its limit") {
    const Graph big = make_path(21);
    CHECK_THROWS_AS(exact_nmvc(big, 2), std::invalid_argument);
    CHECK_THROWS_AS(exact_vc(big), std::invalid_argument);
    CHECK(exact_nmvc(big, 2, 25).size > 0); // a raised limit admits it
    CHECK_THROWS_AS(exact_nmvc(make_path(3), 0), std::invalid_argument);
}

TEST_CASE("enumeration agrees with a full subset scan") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = testsup::sample_graph(seed, 8);
        for (int n : {1, 2, 3}) {
            const OracleResult res = exact_nmvc(g, n);
            CHECK(res.size == testsup::brute_min_nmvc(g, n));
            CHECK(verify_cover(g, res.optimum, n).covered);
            CHECK(res.optimum.size() == res.size);
            CHECK(res.explored >= 1);
        }
        CHECK(exact_vc(g).size == testsup::brute_min_vc(g));
    }
}

TEST_CASE("optimum size is monotone in n and collapses past the diameter") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = testsup::sample_graph(seed, 9);
        std::size_t prev = exact_nmvc(g, 1).size;
        for (int n = 2; n <= 5; ++n) {
            const std::size_t cur = exact_nmvc(g, n).size;
            CHECK(cur <= prev);
            prev = cur;
        }
        // Connected graph: once n reaches the diameter, one vertex suffices.
        bool connected = true;
        for (VertexId v : g.vertices())
            connected = connected && g.distance(g.vertices()[0], v).is_finite();
        if (connected && g.vertex_count() > 1) {
            int diameter = 0;
            for (VertexId v : g.vertices())
                diameter = std::max(diameter, g.eccentricity(v));
            CHECK(exact_nmvc(g, diameter).size == 1);
        }
    }
}

TEST_CASE("solver output never beats the oracle") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = testsup::sample_graph(seed, 10);
        const int n = 1 + static_cast<int>(seed % 4);
        RandomSource rng = RandomSource::seeded(seed);
        const CoverSolution sol = solve_nmvc(g, n, rng);
        CHECK(sol.cover.size() >= exact_nmvc(g, n).size);
    }
}
