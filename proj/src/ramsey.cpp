#include "biplab/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "biplab/rng.hpp"

namespace biplab {

namespace {

struct SearchState {
    const std::vector<BitVec>* rows;
    std::uint32_t a, b;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<std::uint32_t> chosen;
    std::optional<BicliqueWitness> found;
};

void dfs(SearchState& st, const std::vector<std::uint32_t>& order, std::size_t pos,
         const BitVec& inter) {
    if (st.found || st.exhausted) return;
    if (++st.nodes > st.budget) {
        st.exhausted = true;
        return;
    }
    if (inter.count() < st.b) return;
    if (st.chosen.size() == st.a) {
        BicliqueWitness w;
        w.x_set = st.chosen;
        auto ys = inter.to_indices();
        ys.resize(st.b);
        w.y_set = std::move(ys);
        st.found = w;
        return;
    }
    for (std::size_t i = pos; i < order.size(); ++i) {
        if (order.size() - i < st.a - st.chosen.size()) break;
        st.chosen.push_back(order[i]);
        dfs(st, order, i + 1, inter & (*st.rows)[order[i]]);
        st.chosen.pop_back();
        if (st.found || st.exhausted) return;
    }
}

}  // namespace

BicliqueSearch find_induced_biclique(const BipartiteGraph& g, std::uint32_t a, std::uint32_t b,
                                     BicliqueKind kind, std::uint64_t budget) {
    if (a < 1 || b < 1) throw std::invalid_argument("find_induced_biclique: a, b must be >= 1");
    BicliqueSearch out;
    if (a > g.x_size() || b > g.y_size()) return out;  // nothing that large exists

    std::vector<BitVec> rows;
    rows.reserve(g.x_size());
    for (std::uint32_t xi = 0; xi < g.x_size(); ++xi)
        rows.push_back(kind == BicliqueKind::Complete ? g.row_x(xi) : g.row_x(xi).complement());

    std::vector<std::uint32_t> order(g.x_size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t u, std::uint32_t v) {
        const std::uint64_t du = g.degree_x(u), dv = g.degree_x(v);
        if (du != dv) return kind == BicliqueKind::Complete ? du > dv : du < dv;
        return u < v;
    });

    SearchState st;
    st.rows = &rows;
    st.a = a;
    st.b = b;
    st.budget = budget;
    dfs(st, order, 0, BitVec::full(g.y_size()));

    out.nodes = st.nodes;
    out.exhaustive = !st.exhausted;
    if (st.found) {
        st.found->kind = kind;
        std::sort(st.found->x_set.begin(), st.found->x_set.end());
        if (!verify_biclique(g, *st.found))
            throw std::logic_error("find_induced_biclique: produced witness failed verification");
        out.witness = std::move(st.found);
        out.exhaustive = true;  // a witness settles existence regardless of budget
    }
    return out;
}

bool verify_biclique(const BipartiteGraph& g, const BicliqueWitness& w) {
    if (w.x_set.empty() || w.y_set.empty()) return false;
    for (auto xi : w.x_set)
        for (auto yi : w.y_set) {
            if (xi >= g.x_size() || yi >= g.y_size()) return false;
            const bool edge = g.has_edge(xi, yi);
            if (edge != (w.kind == BicliqueKind::Complete)) return false;
        }
    return true;
}

RamseyVerdict is_c_bipartite_ramsey(const BipartiteGraph& g, double C, std::uint64_t budget) {
    if (C <= 0.0) throw std::invalid_argument("is_c_bipartite_ramsey: C must be positive");
    RamseyVerdict v;
    v.C = C;
    v.a_threshold = static_cast<std::uint64_t>(std::ceil(C * std::log(double(g.x_size()))));
    v.b_threshold = static_cast<std::uint64_t>(std::ceil(C * std::log(double(g.y_size()))));
    v.a_effective = std::clamp<std::uint64_t>(v.a_threshold, 1, g.x_size());
    v.b_effective = std::clamp<std::uint64_t>(v.b_threshold, 1, g.y_size());

    v.is_ramsey = true;
    for (auto kind : {BicliqueKind::Complete, BicliqueKind::Empty}) {
        auto r = find_induced_biclique(g, static_cast<std::uint32_t>(v.a_effective),
                                       static_cast<std::uint32_t>(v.b_effective), kind, budget);
        if (r.witness) {
            v.is_ramsey = false;
            v.witness = std::move(r.witness);
            v.search_exhaustive = true;
            return v;
        }
        v.search_exhaustive = v.search_exhaustive && r.exhaustive;
    }
    return v;
}

BalancedBicliqueResult max_balanced_biclique(const BipartiteGraph& g, BicliqueKind kind,
                                             std::uint64_t budget) {
    BalancedBicliqueResult res;
    std::uint32_t lo = 0, hi = g.min_side();
    while (lo < hi) {
        const std::uint32_t mid = lo + (hi - lo + 1) / 2;
        auto r = find_induced_biclique(g, mid, mid, kind, budget);
        if (r.witness) {
            lo = mid;
        } else {
            if (!r.exhaustive) res.exhaustive = false;
            hi = mid - 1;
        }
    }
    res.value = lo;
    return res;
}

namespace {

SideReport side_diversity(const BipartiteGraph& g, Side s, double c) {
    const std::uint32_t n = g.side_size(s);
    const double limit = c * static_cast<double>(g.side_size(opposite(s)));
    SideReport rep;
    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint64_t bad = 0;
        for (std::uint32_t u = 0; u < n; ++u) {
            if (u == v) continue;
            if (static_cast<double>(g.row(s, v).xor_count(g.row(s, u))) < limit) ++bad;
        }
        // lowest index wins ties
        if (rep.worst_offender < 0 || bad > rep.max_bad_count) {
            rep.max_bad_count = bad;
            rep.worst_offender = v;
        }
    }
    return rep;
}

}  // namespace

DiversityReport diversity_check(const BipartiteGraph& g, double c, double delta) {
    if (!(c > 0.0 && c <= 2.0)) throw std::invalid_argument("diversity_check: c outside (0,2]");
    if (!(delta > 0.0)) throw std::invalid_argument("diversity_check: delta must be positive");

    DiversityReport rep;
    rep.c = c;
    rep.delta = delta;
    rep.x_side = side_diversity(g, Side::X, c);
    rep.x_side.threshold = power_threshold(g.x_size(), delta);
    rep.x_side.passes = rep.x_side.max_bad_count <= rep.x_side.threshold;
    rep.y_side = side_diversity(g, Side::Y, c);
    rep.y_side.threshold = power_threshold(g.y_size(), delta);
    rep.y_side.passes = rep.y_side.max_bad_count <= rep.y_side.threshold;
    rep.passes = rep.x_side.passes && rep.y_side.passes;
    return rep;
}

namespace {

struct PackBits {
    VertexPack pack;
    BitVec uni;
    BitVec inter;
    std::uint64_t filter_value;  // |N(a)∩N(b)| + |co-N(a)∩co-N(b)|
};

std::vector<PackBits> all_disjoint_pairs(const BipartiteGraph& g, Side s) {
    const std::uint32_t n = g.side_size(s);
    const std::uint32_t opp = g.side_size(opposite(s));
    std::vector<PackBits> out;
    out.reserve(std::size_t{n} * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            PackBits pb{VertexPack::pair(s, i, j), g.row(s, i) | g.row(s, j),
                        g.row(s, i) & g.row(s, j), 0};
            const std::uint64_t both = pb.inter.count();
            const std::uint64_t neither = opp - pb.uni.count();
            pb.filter_value = both + neither;
            out.push_back(std::move(pb));
        }
    return out;
}

SideReport side_pair_diversity(const BipartiteGraph& g, Side s, double alpha, double eps,
                               std::uint64_t pair_budget, std::uint64_t seed, bool& exact) {
    const std::uint32_t opp = g.side_size(opposite(s));
    const double filter_limit = alpha * static_cast<double>(opp);
    const double close_limit = eps * static_cast<double>(opp);

    auto packs = all_disjoint_pairs(g, s);
    SideReport rep;
    const std::uint64_t total_pairs = packs.size();
    const bool within_budget = total_pairs * total_pairs <= pair_budget;
    const std::uint64_t samples =
        within_budget ? total_pairs : std::max<std::uint64_t>(1, pair_budget / std::max<std::uint64_t>(total_pairs, 1));
    if (!within_budget) exact = false;

    auto rng = make_rng(derive_seed(seed, s == Side::X ? 10 : 11));
    for (std::size_t i = 0; i < packs.size(); ++i) {
        if (static_cast<double>(packs[i].filter_value) < filter_limit) continue;
        std::uint64_t bad = 0;
        auto audit = [&](std::size_t j) {
            if (j == i) return;
            if (!packs[i].pack.disjoint_from(packs[j].pack)) return;
            const std::uint64_t sd = packs[i].uni.xor_count(packs[j].uni) +
                                     packs[i].inter.xor_count(packs[j].inter);
            if (static_cast<double>(sd) < close_limit) ++bad;
        };
        if (within_budget) {
            for (std::size_t j = 0; j < packs.size(); ++j) audit(j);
        } else {
            for (std::uint64_t t = 0; t < samples; ++t)
                audit(static_cast<std::size_t>(rand_below(rng, total_pairs)));
        }
        if (rep.worst_offender < 0 || bad > rep.max_bad_count) {
            rep.max_bad_count = bad;
            rep.worst_offender = static_cast<std::int64_t>(i);
        }
    }
    return rep;
}

}  // namespace

DiversityReport pair_diversity_check(const BipartiteGraph& g, double alpha, double delta,
                                     double eps, std::uint64_t pair_budget, std::uint64_t seed) {
    for (double v : {alpha, delta, eps})
        if (!(v > 0.0 && v < 2.0))
            throw std::invalid_argument("pair_diversity_check: parameters must lie in (0,2)");

    DiversityReport rep;
    rep.alpha = alpha;
    rep.c = eps;
    rep.delta = delta;
    rep.pair_mode = true;
    rep.x_side = side_pair_diversity(g, Side::X, alpha, eps, pair_budget, seed, rep.exact);
    rep.x_side.threshold = power_threshold(g.x_size(), delta);
    rep.x_side.passes = rep.x_side.max_bad_count <= rep.x_side.threshold;
    rep.y_side = side_pair_diversity(g, Side::Y, alpha, eps, pair_budget, seed, rep.exact);
    rep.y_side.threshold = power_threshold(g.y_size(), delta);
    rep.y_side.passes = rep.y_side.max_bad_count <= rep.y_side.threshold;
    rep.passes = rep.x_side.passes && rep.y_side.passes;
    return rep;
}

namespace {

// Count of vertices on the opposite side that see W lopsidedly. W lives on
// side s; the eps comparison is against eps*|side s| per the definition.
std::uint64_t bad_vertex_count(const BipartiteGraph& g, Side s, const BitVec& w, double eps) {
    const std::uint32_t ground = g.side_size(s);
    const std::uint32_t opp = g.side_size(opposite(s));
    const double limit = eps * static_cast<double>(ground);
    const std::uint64_t wsize = w.count();
    std::uint64_t bad = 0;
    for (std::uint32_t v = 0; v < opp; ++v) {
        const std::uint64_t in = g.row(opposite(s), v).and_count(w);
        if (static_cast<double>(in) < limit || static_cast<double>(wsize - in) < limit) ++bad;
    }
    return bad;
}

void richness_side_exact(const BipartiteGraph& g, Side s, double gamma, double eps,
                         SideReport& rep, std::vector<std::uint32_t>& worst_w) {
    const std::uint32_t n = g.side_size(s);
    if (n > 20) throw std::runtime_error("richness_check_exact: side exceeds 20 vertices");
    const double min_size = gamma * static_cast<double>(n);

    rep.max_bad_count = 0;
    rep.worst_offender = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<double>(std::popcount(mask)) < min_size) continue;
        BitVec w(n);
        for (std::uint32_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) w.set(i);
        const std::uint64_t bad = bad_vertex_count(g, s, w, eps);
        if (bad > rep.max_bad_count || rep.worst_offender < 0) {
            rep.max_bad_count = bad;
            rep.worst_offender = static_cast<std::int64_t>(mask);
            worst_w = w.to_indices();
        }
    }
}

}  // namespace

RichnessReport richness_check_exact(const BipartiteGraph& g, double gamma, double delta,
                                    double eps) {
    RichnessReport rep;
    rep.gamma = gamma;
    rep.delta = delta;
    rep.eps = eps;

    richness_side_exact(g, Side::X, gamma, eps, rep.x_side, rep.worst_w_x);
    rep.x_side.threshold = power_threshold(g.y_size(), delta);
    rep.x_side.passes = rep.x_side.worst_offender < 0 ||
                        rep.x_side.max_bad_count <= rep.x_side.threshold;

    richness_side_exact(g, Side::Y, gamma, eps, rep.y_side, rep.worst_w_y);
    rep.y_side.threshold = power_threshold(g.x_size(), delta);
    rep.y_side.passes = rep.y_side.worst_offender < 0 ||
                        rep.y_side.max_bad_count <= rep.y_side.threshold;

    rep.passes = rep.x_side.passes && rep.y_side.passes;
    return rep;
}

namespace {

void richness_side_sampled(const BipartiteGraph& g, Side s, double gamma, double eps,
                           std::uint64_t trials, std::uint64_t seed, SideReport& rep,
                           std::vector<std::uint32_t>& worst_w) {
    const std::uint32_t n = g.side_size(s);
    const std::uint32_t s_min_raw =
        static_cast<std::uint32_t>(std::ceil(gamma * static_cast<double>(n) - 1e-12));
    rep.max_bad_count = 0;
    rep.worst_offender = -1;
    if (s_min_raw > n) return;  // no qualifying W: vacuous

    // size weights proportional to binomial(n, s) over qualifying sizes
    std::vector<double> cum;
    double total = 0.0;
    for (std::uint32_t sz = s_min_raw; sz <= n; ++sz) {
        total += std::exp(std::lgamma(double(n) + 1) - std::lgamma(double(sz) + 1) -
                          std::lgamma(double(n - sz) + 1));
        cum.push_back(total);
    }

    auto rng = make_rng(derive_seed(seed, s == Side::X ? 20 : 21));
    std::vector<std::uint32_t> idx(n);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double pick = rand_unit(rng) * total;
        std::uint32_t sz = s_min_raw;
        for (std::size_t j = 0; j < cum.size(); ++j)
            if (pick < cum[j]) {
                sz = s_min_raw + static_cast<std::uint32_t>(j);
                break;
            }
        std::iota(idx.begin(), idx.end(), 0u);
        BitVec w(n);
        for (std::uint32_t i = 0; i < sz; ++i) {
            const auto j = i + static_cast<std::uint32_t>(rand_below(rng, n - i));
            std::swap(idx[i], idx[j]);
            w.set(idx[i]);
        }
        const std::uint64_t bad = bad_vertex_count(g, s, w, eps);
        if (bad > rep.max_bad_count || rep.worst_offender < 0) {
            rep.max_bad_count = bad;
            rep.worst_offender = static_cast<std::int64_t>(t);
            worst_w = w.to_indices();
        }
    }
}

}  // namespace

RichnessReport richness_check_sampled(const BipartiteGraph& g, double gamma, double delta,
                                      double eps, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("richness_check_sampled: trials must be >= 1");
    RichnessReport rep;
    rep.gamma = gamma;
    rep.delta = delta;
    rep.eps = eps;
    rep.sampled = true;

    richness_side_sampled(g, Side::X, gamma, eps, trials, seed, rep.x_side, rep.worst_w_x);
    rep.x_side.threshold = power_threshold(g.y_size(), delta);
    rep.x_side.passes = rep.x_side.worst_offender < 0 ||
                        rep.x_side.max_bad_count <= rep.x_side.threshold;

    richness_side_sampled(g, Side::Y, gamma, eps, trials, seed, rep.y_side, rep.worst_w_y);
    rep.y_side.threshold = power_threshold(g.x_size(), delta);
    rep.y_side.passes = rep.y_side.worst_offender < 0 ||
                        rep.y_side.max_bad_count <= rep.y_side.threshold;

    rep.passes = rep.x_side.passes && rep.y_side.passes;
    return rep;
}

namespace {

// Pairs {v1,v2} on side s with |N(v1) △ (co-N(v2) ∩ opposite)| < limit.
// The quantity is symmetric: it equals |N∩N| + |co-N∩co-N|.
std::uint64_t near_complement_pair_count(const BipartiteGraph& g, Side s, double limit) {
    const std::uint32_t n = g.side_size(s);
    const std::uint32_t opp = g.side_size(opposite(s));
    std::uint64_t count = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const std::uint64_t both = g.row(s, i).and_count(g.row(s, j));
            const std::uint64_t uni = both + g.row(s, i).xor_count(g.row(s, j));
            const std::uint64_t value = both + (opp - uni);
            if (static_cast<double>(value) < limit) ++count;
        }
    return count;
}

}  // namespace

Lemma46Report lemma46_implications(const BipartiteGraph& g, double gamma, double delta,
                                   double eps) {
    if (!(gamma < 0.5)) throw std::invalid_argument("lemma46_implications: gamma must be < 1/2");

    Lemma46Report rep;
    const auto rich = richness_check_exact(g, gamma, delta, eps);
    rep.hypothesis_met = rich.passes;
    if (!rep.hypothesis_met) return rep;

    rep.diversity_ok = diversity_check(g, eps / 2.0, delta).passes;

    const double alpha = 2.0 * gamma;
    rep.pair_diversity_ok = pair_diversity_check(g, alpha, delta, alpha * eps / 2.0).passes;

    rep.pair_count_x = near_complement_pair_count(g, Side::X, eps * g.y_size() / 2.0);
    rep.pair_count_y = near_complement_pair_count(g, Side::Y, eps * g.x_size() / 2.0);
    rep.pair_count_limit_x = std::pow(double(g.x_size()), 1.0 + delta);
    rep.pair_count_limit_y = std::pow(double(g.y_size()), 1.0 + delta);
    rep.pair_count_ok = static_cast<double>(rep.pair_count_x) <= rep.pair_count_limit_x + 1e-9 &&
                        static_cast<double>(rep.pair_count_y) <= rep.pair_count_limit_y + 1e-9;
    return rep;
}

TuranBounds turan_bounds(std::uint64_t n, std::uint64_t max_deg, std::uint64_t edges) {
    if (n < 1) throw std::invalid_argument("turan_bounds: n must be >= 1");
    TuranBounds b;
    b.by_degree = (n + max_deg) / (1 + max_deg);  // ceil(n / (1+max_deg))
    const std::uint64_t den = 2 * edges + n;
    b.by_edges = (n * n + den - 1) / den;  // ceil(n^2 / (2e+n))
    return b;
}

}  // namespace biplab
