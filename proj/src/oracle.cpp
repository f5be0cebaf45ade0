#include "ncover/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncover {

namespace {

// Word-array bitset sized for the coverage universe.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t nbits) : w((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void or_with(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] |= o.w[i];
    }

    bool covers(const Bits& universe) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((w[i] & universe.w[i]) != universe.w[i])
                return false;
        return true;
    }
};

// Smallest subset of items whose coverage bitsets union to `universe`.
// Enumerates by cardinality, lexicographically within each cardinality,
// and stops at the first hit.
OracleResult min_cover_by_enumeration(const Graph& g, const std::vector<Bits>& item_cover,
                                      const Bits& universe) {
    const std::size_t count = g.vertex_count();
    OracleResult res;
    std::vector<std::size_t> chosen;

    auto search = [&](auto&& self, std::size_t from, std::size_t remaining,
                      const Bits& acc) -> bool {
        if (remaining == 0) {
            ++res.explored;
            return acc.covers(universe);
        }
        for (std::size_t i = from; i + remaining <= count; ++i) {
            chosen.push_back(i);
            Bits next = acc;
            next.or_with(item_cover[i]);
            if (self(self, i + 1, remaining - 1, next))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t k = 0; k <= count; ++k) {
        chosen.clear();
        if (search(search, 0, k, Bits(universe.w.size() * 64))) {
            for (std::size_t i : chosen)
                res.optimum.push_back(g.vertices()[i]);
            res.size = k;
            return res;
        }
    }
    throw std::logic_error("enumeration exhausted without a cover"); // full set always covers
}

void check_limit(const Graph& g, std::size_t limit) {
    if (limit < 1)
        throw std::invalid_argument("oracle limit must be >= 1");
    if (g.vertex_count() > limit)
        throw std::invalid_argument(
            "graph has " + std::to_string(g.vertex_count()) + " vertices, above the oracle limit of " +
            std::to_string(limit) + "; use the approximate solver for instances this size");
}

} // namespace

OracleResult exact_nmvc(const Graph& g, int n, std::size_t limit) {
    if (n < 1)
        throw std::invalid_argument("exact_nmvc requires n >= 1");
    check_limit(g, limit);
    const std::size_t count = g.vertex_count();
    Bits universe(count);
    for (std::size_t i = 0; i < count; ++i)
        universe.set(i);
    // Each vertex covers its distance-n ball, itself included.
    std::vector<Bits> balls;
    balls.reserve(count);
    for (VertexId v : g.vertices()) {
        Bits b(count);
        for (VertexId w : g.vertices_within(v, n))
            b.set(g.index_of(w));
        balls.push_back(std::move(b));
    }
    return min_cover_by_enumeration(g, balls, universe);
}

OracleResult exact_vc(const Graph& g, std::size_t limit) {
    check_limit(g, limit);
    const std::size_t ecount = g.edge_count();
    Bits universe(std::max<std::size_t>(ecount, 1));
    for (std::size_t i = 0; i < ecount; ++i)
        universe.set(i);
    // Each vertex covers its incident edges.
    std::vector<Bits> incident(g.vertex_count(), Bits(std::max<std::size_t>(ecount, 1)));
    for (std::size_t ei = 0; ei < ecount; ++ei) {
        const Edge& e = g.edges()[ei];
        incident[g.index_of(e.u)].set(ei);
        incident[g.index_of(e.v)].set(ei);
    }
    return min_cover_by_enumeration(g, incident, universe);
}

} // namespace ncover
