#include <doctest.h>

#include <set>

#include "biplab/graph.hpp"
#include "biplab/rng.hpp"
#include "oracles.hpp"

using namespace biplab;

namespace {

BipartiteGraph complete(std::uint32_t a, std::uint32_t b) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < a; ++i)
        for (std::uint32_t j = 0; j < b; ++j) edges.emplace_back(i, j);
    return BipartiteGraph::build(a, b, edges);
}

}  // namespace

TEST_CASE("build_graph basics") {
    auto k11 = BipartiteGraph::build(1, 1, {{0, 0}});
    CHECK(k11.edge_count() == 1);

    auto empty22 = BipartiteGraph::build(2, 2, {});
    CHECK(empty22.edge_count() == 0);

    auto k23 = complete(2, 3);
    CHECK(k23.edge_count() == 6);

    CHECK_THROWS_AS(BipartiteGraph::build(2, 2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph::build(2, 2, {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("density") {
    CHECK(density(complete(2, 3)) == Rational{1, 1});
    CHECK(density(BipartiteGraph::build(4, 4, {})) == Rational{0, 1});
    auto g = BipartiteGraph::build(3, 3, {{0, 0}, {0, 1}, {1, 2}, {2, 0}});
    CHECK(density(g) == Rational{4, 9});
}

TEST_CASE("induced_edge_count") {
    auto k22 = complete(2, 2);
    CHECK(induced_edge_count(k22, Selection::all_of(k22)) == 4);
    CHECK(induced_edge_count(k22, Selection::none_of(k22)) == 0);

    auto k23 = complete(2, 3);
    Selection sel = Selection::none_of(k23);
    sel.x_mask.set(0);
    sel.y_mask.set(0);
    sel.y_mask.set(2);
    CHECK(induced_edge_count(k23, sel) == 2);

    Selection bad{BitVec(3), BitVec(3)};
    CHECK_THROWS_AS(induced_edge_count(k23, bad), std::invalid_argument);
}

TEST_CASE("induced_edge_count monotone under vertex addition") {
    auto g = random_bipartite(8, 9, 0.4, 5);
    auto rng = make_rng(17);
    for (int t = 0; t < 50; ++t) {
        Selection sel = Selection::none_of(g);
        for (std::uint32_t i = 0; i < 8; ++i)
            if (rng() & 1) sel.x_mask.set(i);
        for (std::uint32_t j = 0; j < 9; ++j)
            if (rng() & 1) sel.y_mask.set(j);
        const auto base = induced_edge_count(g, sel);
        Selection more = sel;
        const std::uint32_t extra = static_cast<std::uint32_t>(rand_below(rng, 17));
        if (extra < 8)
            more.x_mask.set(extra);
        else
            more.y_mask.set(extra - 8);
        CHECK(induced_edge_count(g, more) >= base);
    }
}

TEST_CASE("pack_degree_into") {
    auto k22 = complete(2, 2);
    const auto full = Selection::all_of(k22);
    CHECK(pack_degree_into(k22, VertexPack::single(Side::X, 0), full) == 2);
    CHECK(pack_degree_into(k22, VertexPack::pair(Side::Y, 0, 1), full) == 4);

    // identical neighborhoods of size 3 count twice
    auto g = BipartiteGraph::build(3, 4, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
    CHECK(pack_degree_into(g, VertexPack::pair(Side::X, 0, 1), Selection::all_of(g)) == 6);

    // full selection equals the plain degree sum
    auto h = random_bipartite(6, 7, 0.5, 3);
    const auto hf = Selection::all_of(h);
    for (std::uint32_t i = 0; i + 1 < 6; ++i) {
        const auto pack = VertexPack::pair(Side::X, i, i + 1);
        CHECK(pack_degree_into(h, pack, hf) == h.degree_x(i) + h.degree_x(i + 1));
    }
}

TEST_CASE("pack_symdiff_size against the multiset oracle") {
    auto rng = make_rng(23);
    for (int t = 0; t < 60; ++t) {
        const std::uint32_t nx = 2 + rng() % 4, ny = 2 + rng() % 4;
        auto g = random_bipartite(nx, ny, 0.5, derive_seed(23, t));
        Selection sel = Selection::none_of(g);
        for (std::uint32_t i = 0; i < nx; ++i)
            if (rng() & 1) sel.x_mask.set(i);
        for (std::uint32_t j = 0; j < ny; ++j)
            if (rng() & 1) sel.y_mask.set(j);

        std::vector<VertexPack> packs;
        for (std::uint32_t j = 0; j < ny; ++j) packs.push_back(VertexPack::single(Side::Y, j));
        for (std::uint32_t j = 0; j + 1 < ny; ++j)
            for (std::uint32_t k = j + 1; k < ny; ++k) packs.push_back(VertexPack::pair(Side::Y, j, k));

        for (std::size_t a = 0; a < packs.size(); ++a)
            for (std::size_t b = 0; b < packs.size(); ++b) {
                if (a == b || !packs[a].disjoint_from(packs[b])) continue;
                CHECK(pack_symdiff_size(g, packs[a], packs[b], sel) ==
                      oracle::pack_symdiff(g, packs[a], packs[b], sel));
            }
    }
}

TEST_CASE("pack_symdiff_size properties") {
    auto g = random_bipartite(5, 6, 0.5, 99);
    const auto full = Selection::all_of(g);
    const auto a = VertexPack::single(Side::X, 0);
    const auto b = VertexPack::single(Side::X, 1);
    const auto c = VertexPack::single(Side::X, 2);
    CHECK(pack_symdiff_size(g, a, b, full) == pack_symdiff_size(g, b, a, full));
    // triangle inequality for the multiset symmetric difference
    CHECK(pack_symdiff_size(g, a, c, full) <=
          pack_symdiff_size(g, a, b, full) + pack_symdiff_size(g, b, c, full));
    CHECK_THROWS_AS(pack_symdiff_size(g, a, a, full), std::invalid_argument);

    // identical singleton neighborhoods differ by zero
    auto twin = BipartiteGraph::build(2, 3, {{0, 0}, {0, 2}, {1, 0}, {1, 2}});
    CHECK(pack_symdiff_size(twin, VertexPack::single(Side::X, 0), VertexPack::single(Side::X, 1),
                            Selection::all_of(twin)) == 0);

    // disjoint neighborhoods of sizes 2 and 3
    auto disj = BipartiteGraph::build(2, 5, {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(pack_symdiff_size(disj, VertexPack::single(Side::X, 0), VertexPack::single(Side::X, 1),
                            Selection::all_of(disj)) == 5);
}

TEST_CASE("random_bipartite endpoints and concentration") {
    CHECK(random_bipartite(4, 5, 0.0, 1).edge_count() == 0);
    CHECK(random_bipartite(4, 5, 1.0, 1).edge_count() == 20);

    int in_range = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto e = random_bipartite(64, 64, 0.5, seed).edge_count();
        if (e >= 1843 && e <= 2253) ++in_range;
    }
    CHECK(in_range >= 990);

    // deterministic per seed
    CHECK(random_bipartite(16, 16, 0.3, 42) == random_bipartite(16, 16, 0.3, 42));
}

TEST_CASE("random_bipartite_exact_edges") {
    CHECK(random_bipartite_exact_edges(3, 4, 12, 9).edge_count() == 12);
    CHECK(random_bipartite_exact_edges(3, 4, 0, 9).edge_count() == 0);
    CHECK_THROWS_AS(random_bipartite_exact_edges(2, 2, 5, 1), std::invalid_argument);

    // per-cell inclusion frequency 4/9 ± 0.02 over 10^4 seeds
    std::vector<std::uint64_t> hits(9, 0);
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const auto g = random_bipartite_exact_edges(3, 3, 4, seed);
        for (std::uint32_t x = 0; x < 3; ++x)
            for (std::uint32_t y = 0; y < 3; ++y)
                if (g.has_edge(x, y)) ++hits[x * 3 + y];
    }
    for (auto h : hits) {
        const double freq = static_cast<double>(h) / 10000.0;
        CHECK(freq == doctest::Approx(4.0 / 9.0).epsilon(0.045));
    }
}

TEST_CASE("graph format round trip") {
    auto k11 = BipartiteGraph::build(1, 1, {{0, 0}});
    CHECK(serialize_graph(k11) == "bipartite v1\nx 1\ny 1\ne 1\n0 0\n");

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto rng = make_rng(seed);
        const auto g = random_bipartite(1 + rng() % 12, 1 + rng() % 12, 0.4, derive_seed(7, seed));
        CHECK(parse_graph(serialize_graph(g)) == g);
    }

    CHECK_THROWS(parse_graph("bipartite v1\nx 2\ny 2\ne 1\n0 5\n"));
    CHECK_THROWS(parse_graph("bipartite v2\nx 1\ny 1\ne 0\n"));
    CHECK_THROWS(parse_graph("bipartite v1\nx 2\ny 2\ne 2\n0 0\n0 0\n"));
    CHECK_THROWS(parse_graph("bipartite v1\nx 2\ny 2\ne 2\n0 0\n"));
}

TEST_CASE("transposition metadata") {
    auto g = random_bipartite(3, 7, 0.5, 5);
    auto t = g.transposed();
    CHECK(t.x_size() == 7);
    CHECK(t.is_transposed());
    CHECK_FALSE(t.transposed().is_transposed());
    CHECK(t.transposed() == g);
    for (std::uint32_t x = 0; x < 3; ++x)
        for (std::uint32_t y = 0; y < 7; ++y) CHECK(g.has_edge(x, y) == t.has_edge(y, x));
}
