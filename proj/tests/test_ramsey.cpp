#include <doctest.h>

#include <cmath>

#include "biplab/ramsey.hpp"
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

TEST_CASE("find_induced_biclique basics") {
    auto k33 = complete(3, 3);
    auto r = find_induced_biclique(k33, 2, 2, BicliqueKind::Complete);
    REQUIRE(r.witness.has_value());
    CHECK(verify_biclique(k33, *r.witness));

    auto empty33 = BipartiteGraph::build(3, 3, {});
    auto none = find_induced_biclique(empty33, 2, 2, BicliqueKind::Complete);
    CHECK_FALSE(none.witness.has_value());
    CHECK(none.exhaustive);
    auto yes = find_induced_biclique(empty33, 3, 3, BicliqueKind::Empty);
    CHECK(yes.witness.has_value());
}

TEST_CASE("biclique search agrees with the subset-scan oracle") {
    for (std::uint64_t t = 0; t < 50; ++t) {
        const auto g = random_bipartite(12, 12, 0.5, derive_seed(41, t));
        for (bool complete_kind : {true, false}) {
            const auto kind = complete_kind ? BicliqueKind::Complete : BicliqueKind::Empty;
            for (std::uint32_t a = 1; a <= 4; ++a) {
                const std::uint32_t max_b = oracle::max_b_for_a(g, a, complete_kind);
                for (std::uint32_t b = 1; b <= 4; ++b) {
                    const auto r = find_induced_biclique(g, a, b, kind);
                    REQUIRE(r.exhaustive);
                    CHECK(r.witness.has_value() == (max_b >= b));
                    if (r.witness) CHECK(verify_biclique(g, *r.witness));
                }
            }
        }
    }
}

TEST_CASE("biclique budget produces unknown, never a false negative") {
    const auto g = random_bipartite(16, 16, 0.5, 3);
    const auto r = find_induced_biclique(g, 6, 2, BicliqueKind::Complete, 5);
    if (!r.witness) CHECK_FALSE(r.exhaustive);
}

TEST_CASE("is_c_bipartite_ramsey") {
    for (std::uint32_t n : {3u, 5u, 8u, 16u}) {
        const auto v = is_c_bipartite_ramsey(complete(n, n), 5.0);
        CHECK_FALSE(v.is_ramsey);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->kind == BicliqueKind::Complete);
    }
    const auto ve = is_c_bipartite_ramsey(BipartiteGraph::build(4, 4, {}), 5.0);
    CHECK_FALSE(ve.is_ramsey);
    REQUIRE(ve.witness.has_value());
    CHECK(ve.witness->kind == BicliqueKind::Empty);

    // thresholds: ceil(C ln n), clamped
    const auto g = random_bipartite(64, 64, 0.5, 1);
    const auto v = is_c_bipartite_ramsey(g, 5.0);
    CHECK(v.a_threshold == static_cast<std::uint64_t>(std::ceil(5.0 * std::log(64.0))));
    CHECK(v.a_threshold == 21);
    CHECK(v.a_effective == 21);
}

TEST_CASE("random graphs are Ramsey at n=64, C=5") {
    int ramsey = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = random_bipartite(64, 64, 0.5, derive_seed(51, seed));
        const auto v = is_c_bipartite_ramsey(g, 5.0);
        CHECK(v.search_exhaustive);
        if (v.is_ramsey) ++ramsey;
    }
    CHECK(ramsey == 30);
}

TEST_CASE("max_balanced_biclique") {
    CHECK(max_balanced_biclique(complete(5, 7), BicliqueKind::Complete).value == 5);
    CHECK(max_balanced_biclique(BipartiteGraph::build(4, 6, {}), BicliqueKind::Empty).value == 4);
    CHECK(max_balanced_biclique(BipartiteGraph::build(4, 6, {}), BicliqueKind::Complete).value == 0);

    for (std::uint64_t t = 0; t < 50; ++t) {
        const auto g = random_bipartite(10, 10, 0.5, derive_seed(61, t));
        for (bool ck : {true, false}) {
            // oracle: largest a with max_b_for_a(a) >= a
            std::uint32_t want = 0;
            for (std::uint32_t a = 1; a <= 10; ++a)
                if (oracle::max_b_for_a(g, a, ck) >= a) want = a;
            const auto r =
                max_balanced_biclique(g, ck ? BicliqueKind::Complete : BicliqueKind::Empty);
            CHECK(r.exhaustive);
            CHECK(r.value == want);
        }
    }
}

TEST_CASE("diversity_check") {
    // complete graphs fail: identical rows everywhere
    for (std::uint32_t n : {4u, 6u, 9u}) {
        const auto rep = diversity_check(complete(n, n), 0.2, 0.5);
        CHECK_FALSE(rep.passes);
        CHECK(rep.x_side.max_bad_count == n - 1);
    }

    // pairwise complementary rows pass the X side at bad-count zero
    auto comp_rows = BipartiteGraph::build(2, 4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}});
    const auto rep = diversity_check(comp_rows, 1.0, 0.5);
    CHECK(rep.x_side.max_bad_count == 0);

    // against the naive oracle
    for (std::uint64_t t = 0; t < 25; ++t) {
        const auto g = random_bipartite(7, 9, 0.5, derive_seed(71, t));
        for (double c : {0.2, 0.5, 1.0}) {
            const auto r = diversity_check(g, c, 0.5);
            CHECK(r.x_side.max_bad_count == oracle::diversity_max_bad(g, true, c));
            CHECK(r.y_side.max_bad_count == oracle::diversity_max_bad(g, false, c));
        }
    }

    // G(64,64,1/2) passes at (0.2, 0.5) nearly always
    int pass = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed)
        pass += diversity_check(random_bipartite(64, 64, 0.5, derive_seed(81, seed)), 0.2, 0.5)
                    .passes;
    CHECK(pass >= 38);
}

TEST_CASE("diversity parameter monotonicity") {
    for (std::uint64_t t = 0; t < 15; ++t) {
        const auto g = random_bipartite(8, 8, 0.5, derive_seed(91, t));
        // smaller c can only lower bad counts
        CHECK(diversity_check(g, 0.1, 0.4).x_side.max_bad_count <=
              diversity_check(g, 0.6, 0.4).x_side.max_bad_count);
        // larger delta can only raise the threshold
        if (diversity_check(g, 0.4, 0.3).passes) CHECK(diversity_check(g, 0.4, 0.8).passes);
    }
}

TEST_CASE("pair_diversity_check brute-force agreement") {
    // exhaustive pair-vs-pair oracle on small graphs
    for (std::uint64_t t = 0; t < 20; ++t) {
        const auto g = random_bipartite(6, 6, 0.5, derive_seed(101, t));
        const double alpha = 0.4, delta = 0.5, eps = 0.5;
        const auto rep = pair_diversity_check(g, alpha, delta, eps);
        REQUIRE(rep.exact);

        const auto full = Selection::all_of(g);
        std::uint64_t worst = 0;
        for (std::uint32_t i = 0; i < 6; ++i)
            for (std::uint32_t j = i + 1; j < 6; ++j) {
                const auto x = VertexPack::pair(Side::X, i, j);
                std::uint64_t both = 0, neither = 0;
                for (std::uint32_t y = 0; y < 6; ++y) {
                    const bool e1 = g.has_edge(i, y), e2 = g.has_edge(j, y);
                    both += e1 && e2;
                    neither += !e1 && !e2;
                }
                if (static_cast<double>(both + neither) < alpha * 6) continue;
                std::uint64_t bad = 0;
                for (std::uint32_t a = 0; a < 6; ++a)
                    for (std::uint32_t b = a + 1; b < 6; ++b) {
                        if (a == i || a == j || b == i || b == j) continue;
                        const auto xp = VertexPack::pair(Side::X, a, b);
                        if (static_cast<double>(oracle::pack_symdiff(g, x, xp, full)) < eps * 6)
                            ++bad;
                    }
                worst = std::max(worst, bad);
            }
        CHECK(rep.x_side.max_bad_count == worst);
    }

    // identical multiset neighborhoods count as bad at distance zero
    auto twins = BipartiteGraph::build(
        5, 4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 2}, {3, 3}, {4, 0}});
    const auto rep = pair_diversity_check(twins, 0.2, 0.5, 0.1);
    CHECK(rep.x_side.max_bad_count >= 1);  // {0,1} vs {2,3} share the multiset exactly
}

TEST_CASE("richness exact on complete graphs and edge cases") {
    // gamma > 1: no qualifying W at all
    const auto vac = richness_check_exact(complete(4, 4), 1.5, 0.5, 0.25);
    CHECK(vac.passes);
    CHECK(vac.x_side.worst_offender < 0);

    // complete graph: every y sees W fully, bad iff |W| < eps*|X|; smallest
    // qualifying W decides
    const auto k66 = complete(6, 6);
    const auto r = richness_check_exact(k66, 0.5, 0.5, 0.9);
    // W of size 3 < 5.4 = eps*6, so all 6 vertices are bad; threshold 6^.5
    CHECK_FALSE(r.passes);
    CHECK(r.x_side.max_bad_count == 6);

    const auto ok = richness_check_exact(k66, 0.5, 0.5, 0.4);
    // every qualifying W has size >= 3 >= 2.4 and co-side |W \ N(y)| = 0 < 2.4:
    // all vertices bad on the second branch
    CHECK_FALSE(ok.passes);
}

TEST_CASE("richness exact vs plain-loop recount") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        const auto g = random_bipartite(6, 6, 0.5, derive_seed(111, t));
        const double gamma = 0.3, delta = 0.5, eps = 0.1;
        const auto rep = richness_check_exact(g, gamma, delta, eps);

        std::uint64_t worst = 0;
        for (std::uint32_t mask = 0; mask < 64; ++mask) {
            const int size = std::popcount(mask);
            if (size < gamma * 6) continue;
            std::uint64_t bad = 0;
            for (std::uint32_t y = 0; y < 6; ++y) {
                int in = 0;
                for (std::uint32_t x = 0; x < 6; ++x)
                    if (((mask >> x) & 1) && g.has_edge(x, y)) ++in;
                if (in < eps * 6 || (size - in) < eps * 6) ++bad;
            }
            worst = std::max(worst, bad);
        }
        CHECK(rep.x_side.max_bad_count == worst);
    }
}

TEST_CASE("richness sampled is sound and deterministic") {
    const auto k88 = complete(8, 8);
    const auto s = richness_check_sampled(k88, 0.5, 0.5, 0.4, 100, 7);
    CHECK_FALSE(s.passes);  // certified counterexample exists and is found fast
    CHECK(richness_check_exact(k88, 0.5, 0.5, 0.4).passes == false);

    const auto g = random_bipartite(10, 10, 0.5, 5);
    const auto a = richness_check_sampled(g, 0.3, 0.5, 0.1, 50, 9);
    const auto b = richness_check_sampled(g, 0.3, 0.5, 0.1, 50, 9);
    CHECK(a.x_side.max_bad_count == b.x_side.max_bad_count);
    CHECK(a.passes == b.passes);

    // any sampled failure implies the exact checker fails too
    if (!a.passes) CHECK_FALSE(richness_check_exact(g, 0.3, 0.5, 0.1).passes);
}

TEST_CASE("lemma46 implications hold on a randomized grid") {
    std::uint64_t rich_instances = 0;
    for (std::uint64_t t = 0; t < 60; ++t) {
        auto rng = make_rng(derive_seed(121, t));
        const std::uint32_t nx = 4 + rand_below(rng, 9);
        const std::uint32_t ny = 4 + rand_below(rng, 9);
        const auto g = random_bipartite(nx, ny, 0.5, derive_seed(122, t));
        for (double gamma : {0.25, 0.4})
            for (double delta : {0.3, 0.5})
                for (double eps : {0.05, 0.1}) {
                    const auto rep = lemma46_implications(g, gamma, delta, eps);
                    if (!rep.hypothesis_met) continue;
                    ++rich_instances;
                    CHECK(rep.diversity_ok);
                    CHECK(rep.pair_diversity_ok);
                    CHECK(rep.pair_count_ok);
                }
    }
    INFO("rich instances exercised: ", rich_instances);

    const auto k66 = complete(6, 6);
    CHECK_FALSE(lemma46_implications(k66, 0.4, 0.5, 0.1).hypothesis_met);
    CHECK_THROWS_AS(lemma46_implications(k66, 0.6, 0.5, 0.1), std::invalid_argument);
}

TEST_CASE("turan bounds and the greedy set") {
    CHECK(turan_bounds(10, 0, 0).by_degree == 10);
    CHECK(turan_bounds(10, 0, 0).by_edges == 10);
    CHECK(turan_bounds(10, 9, 45).by_degree == 1);
    CHECK(turan_bounds(10, 9, 45).by_edges == 1);

    for (std::uint64_t t = 0; t < 100; ++t) {
        auto rng = make_rng(derive_seed(131, t));
        const std::uint32_t n = 2 + rand_below(rng, 30);
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        std::uint64_t edges = 0, max_deg = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if (rand_unit(rng) < 0.3) {
                    adj[i][j] = adj[j][i] = 1;
                    ++edges;
                }
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint64_t d = 0;
            for (std::uint32_t j = 0; j < n; ++j) d += adj[i][j];
            max_deg = std::max(max_deg, d);
        }
        const auto ind = greedy_independent_set(
            n, [&](std::uint32_t a, std::uint32_t b) { return adj[a][b] != 0; });
        // maximal independent sets meet both Turan-style floors
        const auto tb = turan_bounds(n, max_deg, edges);
        CHECK(ind.size() >= tb.by_degree);
        CHECK(ind.size() >= tb.by_edges);
        for (std::size_t a = 0; a < ind.size(); ++a)
            for (std::size_t b = a + 1; b < ind.size(); ++b) CHECK(adj[ind[a]][ind[b]] == 0);
    }
}
