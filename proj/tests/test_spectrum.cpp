#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "biplab/numtheory.hpp"
#include "biplab/rng.hpp"
#include "biplab/spectrum.hpp"

using namespace biplab;

namespace {

BipartiteGraph complete(std::uint32_t a, std::uint32_t b) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < a; ++i)
        for (std::uint32_t j = 0; j < b; ++j) edges.emplace_back(i, j);
    return BipartiteGraph::build(a, b, edges);
}

BipartiteGraph relabeled(const BipartiteGraph& g, std::uint64_t seed) {
    std::vector<std::uint32_t> px(g.x_size()), py(g.y_size());
    std::iota(px.begin(), px.end(), 0u);
    std::iota(py.begin(), py.end(), 0u);
    auto rng = make_rng(seed);
    for (std::size_t i = px.size(); i > 1; --i) std::swap(px[i - 1], px[rand_below(rng, i)]);
    for (std::size_t i = py.size(); i > 1; --i) std::swap(py[i - 1], py[rand_below(rng, i)]);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t x = 0; x < g.x_size(); ++x)
        for (std::uint32_t y = 0; y < g.y_size(); ++y)
            if (g.has_edge(x, y)) edges.emplace_back(px[x], py[y]);
    return BipartiteGraph::build(g.x_size(), g.y_size(), edges);
}

}  // namespace

TEST_CASE("phi_exact small cases") {
    auto empty = BipartiteGraph::build(3, 3, {});
    auto rep = phi_exact(empty);
    CHECK(rep.phi == 1);
    CHECK(rep.sizes.contains(0));

    auto k11 = BipartiteGraph::build(1, 1, {{0, 0}});
    CHECK(phi_exact(k11).phi == 2);

    auto k22 = complete(2, 2);
    rep = phi_exact(k22);
    CHECK(rep.phi == 4);
    CHECK(rep.sizes.to_vector() == multiplication_table(2).to_vector());
}

TEST_CASE("phi_exact_oracle small cases") {
    CHECK(phi_exact_oracle(complete(2, 3)).phi == 6);
    CHECK(phi_exact_oracle(BipartiteGraph::build(1, 1, {})).phi == 1);
    CHECK_THROWS(phi_exact_oracle(complete(12, 12)));
}

TEST_CASE("phi_exact agrees with the selection-enumeration oracle") {
    for (std::uint64_t t = 0; t < 120; ++t) {
        auto rng = make_rng(derive_seed(31, t));
        const std::uint32_t nx = 1 + rand_below(rng, 8);
        const std::uint32_t ny = 1 + rand_below(rng, 8);
        const double p = 0.15 + 0.7 * rand_unit(rng);
        const auto g = random_bipartite(nx, ny, p, derive_seed(32, t));
        const auto a = phi_exact(g);
        const auto b = phi_exact_oracle(g);
        REQUIRE(a.phi == b.phi);
        REQUIRE(a.sizes == b.sizes);
    }
}

TEST_CASE("phi_exact invariances") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        const auto g = random_bipartite(5, 7, 0.5, derive_seed(77, t));
        const auto base = phi_exact(g);
        CHECK(phi_exact(g.transposed()).sizes == base.sizes);
        CHECK(phi_exact(relabeled(g, t)).sizes == base.sizes);

        // spectrum endpoints
        CHECK(base.sizes.contains(0));
        CHECK(base.sizes.contains(g.edge_count()));
        // trivial cardinality bounds, shifted by the empty-subgraph convention
        CHECK(base.phi <= g.edge_count() + 1);
        CHECK(base.phi <= g.cell_count() + 1);
    }
}

TEST_CASE("phi_exact equals the product table on complete graphs") {
    for (std::uint32_t a = 1; a <= 8; ++a)
        for (std::uint32_t b = 1; b <= 8; ++b)
            CHECK(phi_exact(complete(a, b)).phi == phi_complete_bipartite(a, b));
}

TEST_CASE("isolated vertices leave the spectrum unchanged") {
    const auto g = random_bipartite(4, 5, 0.5, 11);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t x = 0; x < 4; ++x)
        for (std::uint32_t y = 0; y < 5; ++y)
            if (g.has_edge(x, y)) edges.emplace_back(x, y);
    const auto padded = BipartiteGraph::build(5, 6, edges);
    CHECK(phi_exact(padded).phi == phi_exact(g).phi);
}

TEST_CASE("phi_exact budget") {
    CHECK_THROWS_AS(phi_exact(complete(8, 8), 16), std::runtime_error);
}

TEST_CASE("phi_sampled") {
    const auto g = random_bipartite(6, 6, 0.5, 13);
    const auto exact = phi_exact(g);

    auto zero = phi_sampled(g, 0, 1);
    CHECK(zero.phi == 1);
    CHECK(zero.method == SpectrumMethod::Sampled);

    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const auto s = phi_sampled(g, 50, seed);
        CHECK(s.phi <= exact.phi);
        CHECK(s.sizes.subset_of(exact.sizes));
        CHECK(s.sizes.contains(0));
        CHECK(s.sizes.contains(g.edge_count()));
        // deterministic per seed
        CHECK(phi_sampled(g, 50, seed).sizes == s.sizes);
    }
}

TEST_CASE("interval_coverage") {
    SizeSet s(9);
    for (auto v : {0, 3, 5, 9}) s.insert(v);
    const auto prof = interval_coverage(s, 5);
    REQUIRE(prof.windows.size() == 2);
    CHECK(prof.windows[0].start == 0);
    CHECK(prof.windows[0].distinct == 2);
    CHECK(prof.windows[1].start == 5);
    CHECK(prof.windows[1].distinct == 2);
    CHECK(prof.min_distinct == 2);

    // full set: every window holds its width (last one truncated)
    SizeSet full(10);
    for (int v = 0; v <= 10; ++v) full.insert(v);
    const auto pf = interval_coverage(full, 4);
    REQUIRE(pf.windows.size() == 3);
    CHECK(pf.windows[0].distinct == 4);
    CHECK(pf.windows[1].distinct == 4);
    CHECK(pf.windows[2].distinct == 3);

    const auto mt = multiplication_table(100);
    const auto prof2 = interval_coverage(mt, 1000);
    std::uint64_t total = 0;
    for (const auto& w : prof2.windows) total += w.distinct;
    CHECK(total == mt.size());
    CHECK_THROWS_AS(interval_coverage(mt, 0), std::invalid_argument);
}
