#include "biplab/spectrum.hpp"

#include <stdexcept>
#include <string>
#include <thread>

#include "biplab/rng.hpp"

namespace biplab {

namespace {

// Columns of the enumerated side packed into single words; valid while the
// enumerated side has at most 64 vertices (the budget caps it well below).
std::vector<std::uint64_t> packed_columns(const BipartiteGraph& g) {
    std::vector<std::uint64_t> cols(g.y_size(), 0);
    for (std::uint32_t yi = 0; yi < g.y_size(); ++yi) cols[yi] = g.row_y(yi).word(0);
    return cols;
}

// Spectrum of all selections (S, T) with S fixed: subset sums of the degree
// vector (|N(y) ∩ S|)_y by shift-or.
void accumulate_subset_spectrum(const std::vector<std::uint64_t>& cols, std::uint64_t mask,
                                BitVec& acc) {
    std::uint64_t total = 0;
    std::vector<std::uint32_t> degs;
    degs.reserve(cols.size());
    for (auto col : cols) {
        const auto d = static_cast<std::uint32_t>(std::popcount(col & mask));
        if (d) degs.push_back(d);
        total += d;
    }
    BitVec dp(static_cast<std::size_t>(total) + 1);
    dp.set(0);
    for (auto d : degs) dp.or_shift_self(d);
    dp.for_each_set([&](std::size_t v) { acc.set(v); });
}

}  // namespace

SpectrumReport phi_exact(const BipartiteGraph& g, std::uint64_t budget) {
    const BipartiteGraph oriented = g.x_size() <= g.y_size() ? g : g.transposed();
    const std::uint32_t n1 = oriented.x_size();
    if (n1 >= 63 || (std::uint64_t{1} << n1) > budget)
        throw std::runtime_error("phi_exact: budget exceeded, needs 2^" + std::to_string(n1) +
                                 " subset enumerations");

    const auto cols = packed_columns(oriented);
    const std::uint64_t num_masks = std::uint64_t{1} << n1;

    SpectrumReport rep;
    rep.sizes = SizeSet(g.edge_count());
    rep.method = SpectrumMethod::Exact;
    rep.budget_used = num_masks;

    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    if (num_masks < (std::uint64_t{1} << 16)) jobs = 1;

    if (jobs == 1) {
        BitVec acc(static_cast<std::size_t>(g.edge_count()) + 1);
        for (std::uint64_t mask = 0; mask < num_masks; ++mask)
            accumulate_subset_spectrum(cols, mask, acc);
        rep.sizes.bits() |= acc;
    } else {
        std::vector<BitVec> accs(jobs, BitVec(static_cast<std::size_t>(g.edge_count()) + 1));
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t mask = w; mask < num_masks; mask += jobs)
                    accumulate_subset_spectrum(cols, mask, accs[w]);
            });
        for (auto& t : pool) t.join();
        for (const auto& acc : accs) rep.sizes.bits() |= acc;
    }

    rep.phi = rep.sizes.size();
    return rep;
}

SpectrumReport phi_exact_oracle(const BipartiteGraph& g) {
    if (g.x_size() + g.y_size() > 22)
        throw std::runtime_error("phi_exact_oracle: graph too large (|X|+|Y| must be <= 22)");

    const std::uint32_t nx = g.x_size(), ny = g.y_size();
    SpectrumReport rep;
    rep.sizes = SizeSet(g.edge_count());
    rep.method = SpectrumMethod::Exact;
    rep.budget_used = std::uint64_t{1} << (nx + ny);

    std::vector<std::uint32_t> deg(ny, 0);
    for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << nx); ++xm) {
        for (std::uint32_t yi = 0; yi < ny; ++yi) {
            std::uint32_t d = 0;
            for (std::uint32_t xi = 0; xi < nx; ++xi)
                if ((xm >> xi) & 1) d += g.has_edge(xi, yi) ? 1 : 0;
            deg[yi] = d;
        }
        for (std::uint64_t ym = 0; ym < (std::uint64_t{1} << ny); ++ym) {
            std::uint64_t sum = 0;
            for (std::uint32_t yi = 0; yi < ny; ++yi)
                if ((ym >> yi) & 1) sum += deg[yi];
            rep.sizes.insert(sum);
        }
    }
    rep.phi = rep.sizes.size();
    return rep;
}

SpectrumReport phi_sampled(const BipartiteGraph& g, std::uint64_t trials, std::uint64_t seed) {
    SpectrumReport rep;
    rep.sizes = SizeSet(g.edge_count());
    rep.method = SpectrumMethod::Sampled;
    rep.budget_used = trials;

    if (trials == 0) {
        rep.sizes.insert(0);
        rep.phi = 1;
        return rep;
    }

    // empty and full selections are free
    rep.sizes.insert(0);
    rep.sizes.insert(g.edge_count());

    auto rng = make_rng(derive_seed(seed, 0));
    for (std::uint64_t t = 0; t < trials; ++t) {
        Selection sel = Selection::none_of(g);
        for (std::uint32_t xi = 0; xi < g.x_size(); ++xi)
            if (rng() & 1) sel.x_mask.set(xi);
        for (std::uint32_t yi = 0; yi < g.y_size(); ++yi)
            if (rng() & 1) sel.y_mask.set(yi);
        rep.sizes.insert(induced_edge_count(g, sel));
    }

    // full single-side spectra of 64 random small-side subsets
    const BipartiteGraph oriented = g.x_size() <= g.y_size() ? g : g.transposed();
    if (oriented.x_size() <= 64) {
        const auto cols = packed_columns(oriented);
        auto rng2 = make_rng(derive_seed(seed, 1));
        BitVec acc(static_cast<std::size_t>(g.edge_count()) + 1);
        const std::uint64_t side_mask = oriented.x_size() == 64
                                            ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << oriented.x_size()) - 1;
        for (int s = 0; s < 64; ++s) accumulate_subset_spectrum(cols, rng2() & side_mask, acc);
        rep.sizes.bits() |= acc;
        rep.budget_used += 64;
    }

    rep.phi = rep.sizes.size();
    return rep;
}

CoverageProfile interval_coverage(const SizeSet& sizes, std::uint64_t window) {
    if (window == 0) throw std::invalid_argument("interval_coverage: window must be positive");
    CoverageProfile prof;
    prof.window_width = window;
    prof.min_distinct = ~std::uint64_t{0};
    for (std::uint64_t start = 0; start <= sizes.max_value(); start += window) {
        const std::uint64_t stop = std::min(sizes.max_value() + 1, start + window);
        CoverageWindow w;
        w.start = start;
        w.distinct = sizes.bits().count_range(static_cast<std::size_t>(start),
                                              static_cast<std::size_t>(stop));
        prof.min_distinct = std::min(prof.min_distinct, w.distinct);
        prof.windows.push_back(w);
    }
    if (prof.windows.empty()) prof.min_distinct = 0;
    return prof;
}

}  // namespace biplab
