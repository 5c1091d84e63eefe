#include "biplab/construction.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "biplab/ramsey.hpp"
#include "biplab/rng.hpp"

namespace biplab {

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::Orient: return "orient";
        case Stage::CandidatePairs: return "build_candidate_pairs";
        case Stage::Prune: return "prune_non_diverse_pairs";
        case Stage::StarOrMatching: return "star_or_matching";
        case Stage::Diversify: return "diversify";
        case Stage::SampleU: return "sample_u";
        case Stage::Claims: return "verify_claims";
        case Stage::Split: return "split_and_order";
        case Stage::QFamily: return "build_q_family";
        case Stage::Enumerate: return "enumerate_sizes";
        case Stage::Done: return "done";
    }
    return "?";
}

namespace {

double sqrt_f(const BipartiteGraph& g) { return std::sqrt(double(g.min_side())); }

std::uint64_t pack_degree_full(const BipartiteGraph& g, const VertexPack& v) {
    std::uint64_t d = 0;
    for (std::size_t k = 0; k < v.size(); ++k) d += g.degree(v.side(), v[k]);
    return d;
}

}  // namespace

CandidatePairs build_candidate_pairs(const BipartiteGraph& g) {
    if (g.y_size() < 4)
        throw std::invalid_argument("build_candidate_pairs: needs at least 4 large-side vertices");

    CandidatePairs out;
    out.bucket_width = static_cast<std::uint64_t>(std::ceil(sqrt_f(g)));
    if (out.bucket_width == 0) out.bucket_width = 1;

    std::vector<std::uint64_t> deg(g.y_size());
    for (std::uint32_t yi = 0; yi < g.y_size(); ++yi) deg[yi] = g.degree_y(yi);

    std::map<std::uint64_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> buckets;
    for (std::uint32_t i = 0; i < g.y_size(); ++i)
        for (std::uint32_t j = i + 1; j < g.y_size(); ++j)
            buckets[(deg[i] + deg[j]) / out.bucket_width].emplace_back(i, j);

    // most populated bucket, lowest center on ties (map iterates ascending)
    std::uint64_t best_bucket = 0;
    std::size_t best_size = 0;
    for (const auto& [b, v] : buckets)
        if (v.size() > best_size) {
            best_size = v.size();
            best_bucket = b;
        }

    out.d_prime = best_bucket * out.bucket_width + out.bucket_width / 2;
    for (auto [i, j] : buckets[best_bucket]) out.pairs.push_back(VertexPack::pair(Side::Y, i, j));
    return out;
}

PruneResult prune_non_diverse_pairs(const BipartiteGraph& g, const std::vector<VertexPack>& pairs,
                                    double gamma, double delta) {
    PruneResult out;
    const double limit = 2.0 * gamma * static_cast<double>(g.x_size());
    for (const auto& p : pairs) {
        const std::uint64_t both = g.row_y(p[0]).and_count(g.row_y(p[1]));
        const std::uint64_t only_first = g.degree_y(p[0]) - both;   // N(w1) ∩ co-N(w2)
        const std::uint64_t only_second = g.degree_y(p[1]) - both;  // N(w2) ∩ co-N(w1)
        if (static_cast<double>(only_first) >= limit && static_cast<double>(only_second) >= limit)
            out.kept.push_back(p);
        else
            ++out.removed;
    }
    out.removal_allowance = std::pow(double(g.y_size()), 1.0 + delta);
    out.removal_within_allowance = static_cast<double>(out.removed) <= out.removal_allowance + 1e-9;
    return out;
}

StarOrMatching star_or_matching(const BipartiteGraph& g, const std::vector<VertexPack>& pairs,
                                std::uint64_t d_prime) {
    if (pairs.empty()) throw std::invalid_argument("star_or_matching: empty pair set");

    std::vector<std::uint32_t> wdeg(g.y_size(), 0);
    for (const auto& p : pairs) {
        ++wdeg[p[0]];
        ++wdeg[p[1]];
    }

    std::vector<char> used(g.y_size(), 0);
    std::vector<VertexPack> matching;
    for (const auto& p : pairs) {
        if (used[p[0]] || used[p[1]]) continue;
        used[p[0]] = used[p[1]] = 1;
        matching.push_back(p);
    }

    // any vertex whose pair-degree reaches the matching size qualifies as a
    // star center; among those, favor many leaves and a large d'' = d'-d(y)
    // together, since both widen the later degree ladder (ties: lowest index)
    std::int64_t hub = -1;
    double hub_score = -1.0;
    for (std::uint32_t yi = 0; yi < g.y_size(); ++yi) {
        if (wdeg[yi] < matching.size()) continue;
        const double dd =
            std::max(1.0, static_cast<double>(d_prime) - static_cast<double>(g.degree_y(yi)));
        const double score = static_cast<double>(wdeg[yi]) * std::sqrt(dd);
        if (score > hub_score) {
            hub_score = score;
            hub = yi;
        }
    }

    StarOrMatching out;
    if (hub >= 0) {
        out.mode = PackMode::Star;
        out.star_center = hub;
        out.d_dprime = static_cast<std::int64_t>(d_prime) -
                       static_cast<std::int64_t>(g.degree_y(static_cast<std::uint32_t>(hub)));
        for (const auto& p : pairs) {
            if (p[0] == static_cast<std::uint32_t>(hub)) out.packs.push_back(VertexPack::single(Side::Y, p[1]));
            if (p[1] == static_cast<std::uint32_t>(hub)) out.packs.push_back(VertexPack::single(Side::Y, p[0]));
        }
        std::sort(out.packs.begin(), out.packs.end(),
                  [](const VertexPack& a, const VertexPack& b) { return a[0] < b[0]; });
    } else {
        out.mode = PackMode::Matching;
        out.d_dprime = static_cast<std::int64_t>(d_prime);
        out.packs = std::move(matching);
    }
    return out;
}

DiversifyResult diversify(const BipartiteGraph& g, const std::vector<VertexPack>& packs,
                          double gamma, double /*delta*/) {
    if (packs.empty()) throw std::invalid_argument("diversify: empty pack list");
    const double limit = 4.0 * gamma * gamma * static_cast<double>(g.x_size());
    const Selection full = Selection::all_of(g);
    const std::uint32_t n = static_cast<std::uint32_t>(packs.size());

    std::vector<BitVec> conflict(n, BitVec(n));
    std::uint64_t max_deg = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (!packs[i].disjoint_from(packs[j])) continue;  // shared vertex: not comparable
            if (static_cast<double>(pack_symdiff_size(g, packs[i], packs[j], full)) < limit) {
                conflict[i].set(j);
                conflict[j].set(i);
            }
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) max_deg = std::max(max_deg, conflict[i].count());

    auto chosen = greedy_independent_set(
        n, [&](std::uint32_t u, std::uint32_t v) { return conflict[u].test(v); });

    DiversifyResult out;
    out.conflict_max_degree = max_deg;
    out.turan_floor = (n + max_deg) / (1 + max_deg);
    for (auto i : chosen) out.packs.push_back(packs[i]);
    if (out.packs.size() < out.turan_floor)
        throw std::logic_error("diversify: greedy set fell below the degree bound");
    return out;
}

SampledU sample_u(const BipartiteGraph& g, std::uint64_t l, double c, std::uint64_t seed) {
    const double m = static_cast<double>(g.cell_count());
    if (static_cast<double>(l) < c * m || static_cast<double>(l) > 2.0 * c * m)
        throw std::invalid_argument("sample_u: l outside [c*m, 2*c*m] with c*m=" +
                                    std::to_string(c * m));
    if (g.edge_count() == 0) throw std::invalid_argument("sample_u: graph has no edges");
    const double p = std::sqrt(4.0 * static_cast<double>(l) / static_cast<double>(g.edge_count()));
    if (!(p > 0.0))
        throw std::invalid_argument("sample_u: p = sqrt(4l/e(G)) must be positive");
    if (!(p < 0.1))
        throw std::invalid_argument("sample_u: p = sqrt(4l/e(G)) = " + std::to_string(p) +
                                    " not below 0.1");

    SampledU out;
    out.p = p;
    out.u = Selection::none_of(g);
    auto rng = make_rng(seed);
    for (std::uint32_t xi = 0; xi < g.x_size(); ++xi)
        if (rand_unit(rng) < p) out.u.x_mask.set(xi);
    for (std::uint32_t yi = 0; yi < g.y_size(); ++yi)
        if (rand_unit(rng) < p) out.u.y_mask.set(yi);
    return out;
}

namespace {

bool pack_untouched(const VertexPack& v, const Selection& u) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (u.y_mask.test(v[k])) return false;
    return true;
}

}  // namespace

ClaimDiagnostics verify_claims(const BipartiteGraph& g, const Selection& u,
                               const std::vector<VertexPack>& packs, std::uint64_t l, double p,
                               std::int64_t d_dprime, const ConstructionParams& params) {
    const double m = static_cast<double>(g.cell_count());
    const double f = static_cast<double>(g.min_side());
    const double sf = std::sqrt(f);
    const double d = p * static_cast<double>(d_dprime);

    ClaimDiagnostics diag;
    diag.e_u = induced_edge_count(g, u);
    diag.deviation_1 = std::abs(static_cast<double>(diag.e_u) - 4.0 * static_cast<double>(l));
    diag.limit_1 = params.K1 * m / sf;
    diag.c1 = diag.deviation_1 <= diag.limit_1 + 1e-9;

    std::uint64_t untouched = 0, in_window = 0;
    std::vector<std::uint64_t> du(packs.size());
    for (std::size_t i = 0; i < packs.size(); ++i) {
        if (pack_untouched(packs[i], u)) ++untouched;
        du[i] = pack_degree_into(g, packs[i], u);
        if (std::abs(static_cast<double>(du[i]) - d) <= params.K2 * sf + 1e-9) ++in_window;
    }
    const double denom = packs.empty() ? 1.0 : static_cast<double>(packs.size());
    diag.fraction_untouched = static_cast<double>(untouched) / denom;
    diag.fraction_in_window = static_cast<double>(in_window) / denom;
    diag.c2 = diag.fraction_untouched >= 2.0 / 3.0 - 1e-12;
    diag.c3 = diag.fraction_in_window >= 2.0 / 3.0 - 1e-12;

    diag.limit_4 = params.K3 * f;
    diag.limit_5 = params.K4 * m * m / std::pow(f, 3.5);
    if (packs.size() < 2) {
        diag.vacuous_45 = true;
        diag.c4 = diag.c5 = true;
        return diag;
    }

    std::uint64_t min_sym = ~std::uint64_t{0};
    std::uint64_t equal_pairs = 0;
    for (std::size_t i = 0; i < packs.size(); ++i)
        for (std::size_t j = i + 1; j < packs.size(); ++j) {
            min_sym = std::min(min_sym, pack_symdiff_size(g, packs[i], packs[j], u));
            if (du[i] == du[j]) ++equal_pairs;
        }
    diag.min_pair_symdiff = min_sym;
    diag.equal_degree_pairs = equal_pairs;
    diag.c4 = static_cast<double>(min_sym) >= diag.limit_4 - 1e-9;
    diag.c5 = static_cast<double>(equal_pairs) <= diag.limit_5 + 1e-9;
    return diag;
}

SplitResult split_and_order(const BipartiteGraph& g, const Selection& u,
                            const std::vector<VertexPack>& packs, double p, std::int64_t d_dprime,
                            const ConstructionParams& params) {
    const double sf = sqrt_f(g);
    const double d = p * static_cast<double>(d_dprime);

    SplitResult out;

    struct Entry {
        VertexPack pack;
        std::uint64_t du;
    };
    std::vector<Entry> rq;
    for (const auto& v : packs) {
        if (!pack_untouched(v, u)) continue;
        const std::uint64_t dv = pack_degree_into(g, v, u);
        if (std::abs(static_cast<double>(dv) - d) > params.K2 * sf + 1e-9) continue;
        rq.push_back({v, dv});
    }

    // alternate assignment by position parity
    std::vector<Entry> h, pp;
    for (std::size_t i = 0; i < rq.size(); ++i) (i % 2 == 0 ? h : pp).push_back(rq[i]);

    auto by_degree = [](const Entry& a, const Entry& b) { return a.du < b.du; };
    std::stable_sort(h.begin(), h.end(), by_degree);
    std::stable_sort(pp.begin(), pp.end(), by_degree);

    // one representative per distinct degree = greedy independent set of the
    // equal-degree conflict graph (its components are cliques)
    auto ladder = [](const std::vector<Entry>& v) {
        std::vector<Entry> reps;
        for (const auto& e : v)
            if (reps.empty() || reps.back().du != e.du) reps.push_back(e);
        return reps;
    };
    std::vector<Entry> b_ladder = ladder(h);
    std::vector<Entry> z_ladder = ladder(pp);

    if (b_ladder.size() < 6) {
        out.failure = "distinct-degree ladder too short (|B| = " +
                      std::to_string(b_ladder.size()) + " < 6)";
        return out;
    }

    const std::size_t nb = b_ladder.size();
    const std::size_t half = nb / 2;
    const std::size_t third = nb / 3;

    auto class_members = [&](std::size_t rep_begin, std::size_t rep_end) {
        std::vector<Entry> members;
        for (const auto& e : h)
            for (std::size_t r = rep_begin; r < rep_end; ++r)
                if (e.du == b_ladder[r].du) {
                    members.push_back(e);
                    break;
                }
        std::stable_sort(members.begin(), members.end(), by_degree);
        return members;
    };

    const auto upper_members = class_members(nb - half, nb);
    const auto lower_members = class_members(0, half);

    std::vector<Entry> s_entries, t_entries;
    if (upper_members.size() >= lower_members.size()) {
        out.branch = 1;  // T = upper half classes, S = lower third of B
        t_entries = upper_members;
        s_entries.assign(b_ladder.begin(), b_ladder.begin() + third);
    } else {
        out.branch = 2;  // S = lower half classes, T = upper third of B
        s_entries = lower_members;
        t_entries.assign(b_ladder.end() - third, b_ladder.end());
    }

    const std::uint64_t max_s = s_entries.back().du;
    const std::uint64_t min_t = t_entries.front().du;
    if (min_t <= max_s) {
        out.failure = "degree separation collapsed";
        return out;
    }
    out.separation = min_t - max_s;

    for (const auto& e : s_entries) {
        out.S.push_back(e.pack);
        out.s_degrees.push_back(e.du);
    }
    for (const auto& e : t_entries) {
        out.T.push_back(e.pack);
        out.t_degrees.push_back(e.du);
    }
    for (const auto& e : z_ladder) {
        out.Z.push_back(e.pack);
        out.z_degrees.push_back(e.du);
    }
    for (const auto& e : b_ladder) out.B.push_back(e.pack);
    out.ok = true;
    return out;
}

QFamily build_q_family(const std::vector<VertexPack>& S, const std::vector<VertexPack>& T,
                       const BipartiteGraph& g, const ConstructionParams& params) {
    const double f = static_cast<double>(g.min_side());
    const double scale = static_cast<double>(g.cell_count()) / std::pow(f, 1.5);

    QFamily qf;
    qf.k_lo = std::max<std::int64_t>(1, std::llround(params.c1 * scale));
    qf.k_hi = std::llround(2.0 * params.c1 * scale);
    qf.i_max = std::llround(params.c1 * std::sqrt(f));

    const std::int64_t s_len = static_cast<std::int64_t>(S.size());
    const std::int64_t t_len = static_cast<std::int64_t>(T.size());
    const std::int64_t i_cap = std::min(qf.i_max, t_len);

    for (std::int64_t k = qf.k_lo; k <= qf.k_hi; ++k)
        for (std::int64_t i = 0; i <= std::min(i_cap, k); ++i) {
            if (k - i > s_len) continue;
            qf.entries.emplace_back(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(i));
        }

    const std::uint64_t nominal = qf.k_hi >= qf.k_lo
                                      ? static_cast<std::uint64_t>(qf.k_hi - qf.k_lo + 1) *
                                            static_cast<std::uint64_t>(qf.i_max + 1)
                                      : 0;
    qf.clipped = qf.entries.size() < nominal;
    return qf;
}

SizeFamily enumerate_sizes(const BipartiteGraph& g, const Selection& u, const QFamily& qf,
                           const SplitResult& split, double p, std::int64_t d_dprime,
                           const ConstructionParams& params) {
    const double f = static_cast<double>(g.min_side());
    const double sf = std::sqrt(f);
    const double d = p * static_cast<double>(d_dprime);

    SizeFamily fam;
    fam.final_sizes = SizeSet(g.edge_count());
    const std::uint64_t e_u = induced_edge_count(g, u);

    std::vector<std::uint64_t> ssum(split.S.size() + 1, 0), tsum(split.T.size() + 1, 0);
    for (std::size_t i = 0; i < split.S.size(); ++i) ssum[i + 1] = ssum[i] + split.s_degrees[i];
    for (std::size_t i = 0; i < split.T.size(); ++i) tsum[i + 1] = tsum[i] + split.t_degrees[i];

    const std::uint64_t fwd_gap =
        std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(params.c2 * sf)));

    std::map<std::uint64_t, SizeFamily::RawEntry> ladder;  // base size -> first (k,i)
    for (auto [k, i] : qf.entries) {
        const std::uint64_t base = e_u + ssum[k - i] + tsum[i];
        fam.raw.push_back({k, i, base});
        // keep only entries a full forward step below the next rung
        if (k + 1 > split.S.size()) continue;
        const std::uint64_t next = e_u + ssum[k + 1];
        if (next < base + fwd_gap) continue;
        ladder.try_emplace(base, SizeFamily::RawEntry{k, i, base});
    }
    for (const auto& [sz, ent] : ladder) fam.ladder.push_back(sz);

    fam.thinning_gap =
        static_cast<std::uint64_t>(std::floor(2.0 * params.Q_window * sf)) + 1;
    std::uint64_t last_kept = 0;
    bool have_last = false;
    for (const auto& [sz, ent] : ladder) {
        if (have_last && sz < last_kept + fam.thinning_gap) continue;
        fam.kept.push_back(sz);
        fam.kept_entries.push_back(ent);
        last_kept = sz;
        have_last = true;
    }

    std::vector<std::size_t> z_idx;
    for (std::size_t zi = 0; zi < split.Z.size(); ++zi)
        if (std::abs(static_cast<double>(split.z_degrees[zi]) - d) <=
            params.Q_window * sf + 1e-9)
            z_idx.push_back(zi);
    fam.z_used = z_idx.size();

    auto materialize = [&](const SizeFamily::RawEntry& ent,
                           const std::vector<VertexPack>* z) -> Selection {
        Selection sel = u;
        for (std::size_t s = 0; s < ent.k - ent.i; ++s)
            for (std::size_t v = 0; v < split.S[s].size(); ++v) sel.y_mask.set(split.S[s][v]);
        for (std::size_t t = 0; t < ent.i; ++t)
            for (std::size_t v = 0; v < split.T[t].size(); ++v) sel.y_mask.set(split.T[t][v]);
        if (z)
            for (const auto& pk : *z)
                for (std::size_t v = 0; v < pk.size(); ++v) sel.y_mask.set(pk[v]);
        return sel;
    };

    auto record = [&](std::uint64_t size, const Selection& sel) {
        if (fam.final_sizes.contains(size))
            throw std::logic_error("enumerate_sizes: size collision at " + std::to_string(size) +
                                   " (constants are inconsistent)");
        const std::uint64_t recount = induced_edge_count(g, sel);
        if (recount != size)
            throw std::logic_error("enumerate_sizes: bookkeeping said " + std::to_string(size) +
                                   " but recount found " + std::to_string(recount));
        fam.final_sizes.insert(size);
        ++fam.verified;
    };

    for (const auto& ent : fam.kept_entries) {
        if (z_idx.empty()) {
            record(ent.size, materialize(ent, nullptr));
        } else {
            for (auto zi : z_idx) {
                std::vector<VertexPack> zpack{split.Z[zi]};
                record(ent.size + split.z_degrees[zi], materialize(ent, &zpack));
            }
        }
    }
    fam.distinct_count = fam.final_sizes.size();
    return fam;
}

namespace {

struct StageTimer {
    std::map<std::string, double>& sink;
    std::string name;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    ~StageTimer() {
        sink[name] += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                t0)
                          .count();
    }
};

PipelineResult fail(Stage stage, std::string msg) {
    PipelineResult r;
    r.ok = false;
    r.failed_stage = stage;
    r.message = std::move(msg);
    return r;
}

}  // namespace

PipelineResult run_pipeline(const BipartiteGraph& g, std::uint64_t l,
                            const ConstructionParams& params) {
    ConstructionWitness w;
    w.params = params;
    w.l = l;
    w.seed = params.seed;

    const bool transpose = g.x_size() > g.y_size();
    const BipartiteGraph og = transpose ? g.transposed() : g;
    w.transposed = transpose;

    CandidatePairs cand;
    try {
        StageTimer t{w.stage_ms, "build_candidate_pairs"};
        cand = build_candidate_pairs(og);
    } catch (const std::exception& ex) {
        return fail(Stage::CandidatePairs, ex.what());
    }
    if (cand.pairs.empty()) return fail(Stage::CandidatePairs, "no candidate pairs");
    w.d_prime = cand.d_prime;

    PruneResult pruned;
    {
        StageTimer t{w.stage_ms, "prune_non_diverse_pairs"};
        pruned = prune_non_diverse_pairs(og, cand.pairs, params.gamma, params.delta);
    }
    if (pruned.kept.empty())
        return fail(Stage::Prune, "every candidate pair failed the co-neighborhood threshold");

    StarOrMatching som;
    {
        StageTimer t{w.stage_ms, "star_or_matching"};
        som = star_or_matching(og, pruned.kept, cand.d_prime);
    }
    w.mode = som.mode;
    w.d_dprime = som.d_dprime;

    DiversifyResult div;
    {
        StageTimer t{w.stage_ms, "diversify"};
        div = diversify(og, som.packs, params.gamma, params.delta);
    }
    w.A = div.packs;

    std::string last_failure = "no attempts made";
    Stage last_stage = Stage::SampleU;
    for (std::uint64_t attempt = 0; attempt <= params.retries; ++attempt) {
        w.attempts = static_cast<std::uint32_t>(attempt + 1);
        SampledU su;
        try {
            StageTimer t{w.stage_ms, "sample_u"};
            su = sample_u(og, l, params.c, derive_seed(params.seed, 100 + attempt));
        } catch (const std::exception& ex) {
            return fail(Stage::SampleU, ex.what());  // parameter error: retrying cannot help
        }
        w.u = su.u;
        w.p = su.p;
        w.d = su.p * static_cast<double>(som.d_dprime);

        {
            StageTimer t{w.stage_ms, "verify_claims"};
            w.diagnostics = verify_claims(og, su.u, div.packs, l, su.p, som.d_dprime, params);
        }
        if (!w.diagnostics.all()) {
            last_stage = Stage::Claims;
            last_failure = "per-U conditions failed";
            continue;
        }

        SplitResult split;
        {
            StageTimer t{w.stage_ms, "split_and_order"};
            split = split_and_order(og, su.u, div.packs, su.p, som.d_dprime, params);
        }
        if (!split.ok) {
            last_stage = Stage::Split;
            last_failure = split.failure;
            continue;
        }
        const double sep_floor = 8.0 * params.c2 * sqrt_f(og);
        if (static_cast<double>(split.separation) < sep_floor - 1e-9) {
            last_stage = Stage::Split;
            last_failure = "separation " + std::to_string(split.separation) + " below " +
                           std::to_string(sep_floor);
            continue;
        }
        // every kept pack must sit inside the K5 window around d
        bool window_ok = true;
        for (const auto* degs : {&split.s_degrees, &split.t_degrees, &split.z_degrees})
            for (auto du : *degs)
                if (std::abs(static_cast<double>(du) - w.d) > params.K5 * sqrt_f(og) + 1e-9)
                    window_ok = false;
        if (!window_ok) {
            last_stage = Stage::Split;
            last_failure = "kept pack degree outside the K5 window";
            continue;
        }

        QFamily qf;
        {
            StageTimer t{w.stage_ms, "build_q_family"};
            qf = build_q_family(split.S, split.T, og, params);
        }
        if (qf.entries.empty()) {
            last_stage = Stage::QFamily;
            last_failure = "ladder index set empty after clipping";
            continue;
        }

        SizeFamily fam;
        try {
            StageTimer t{w.stage_ms, "enumerate_sizes"};
            fam = enumerate_sizes(og, su.u, qf, split, su.p, som.d_dprime, params);
        } catch (const std::exception& ex) {
            return fail(Stage::Enumerate, ex.what());  // inconsistent constants: not retryable
        }
        if (fam.kept.empty()) {
            last_stage = Stage::Enumerate;
            last_failure = "no ladder entries survived filtering";
            continue;
        }

        w.S = split.S;
        w.T = split.T;
        w.Z = split.Z;
        w.B = split.B;
        w.separation = split.separation;
        w.branch = split.branch;
        w.q_family = qf;
        w.sub_nominal = qf.clipped;

        PipelineResult r;
        r.ok = true;
        r.witness = std::move(w);
        r.family = std::move(fam);
        return r;
    }

    auto r = fail(last_stage, "retries exhausted: " + last_failure);
    r.witness = std::move(w);  // diagnostics from the last attempt
    return r;
}

HarnessResult theorem_harness(const BipartiteGraph& g, const ConstructionParams& params) {
    HarnessResult out;
    out.total = SizeSet(g.edge_count());

    const double cm = params.c * static_cast<double>(g.cell_count());
    const std::uint64_t l_hi = static_cast<std::uint64_t>(std::floor(2.0 * cm + 1e-9));
    std::uint64_t l = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(cm - 1e-9)));

    const std::uint64_t default_step =
        std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(sqrt_f(g))));
    std::uint64_t last_span = 0;

    while (l <= l_hi) {
        ConstructionParams run_params = params;
        run_params.seed = derive_seed(params.seed, 1000 + l);
        HarnessRun run;
        run.l = l;

        auto res = run_pipeline(g, l, run_params);
        if (res.ok) {
            const auto sizes = res.family->final_sizes.to_vector();
            run.ok = true;
            run.distinct = res.family->distinct_count;
            run.span = sizes.empty() ? 0 : sizes.back() - sizes.front();
            out.total.bits() |= res.family->final_sizes.bits();
            last_span = run.span;
        } else {
            ++out.failures;
        }
        out.runs.push_back(run);

        const std::uint64_t step =
            std::max<std::uint64_t>(1, last_span > 0 ? (last_span + 3) / 4 : default_step);
        l += step;
    }
    out.distinct_count = out.total.size();
    return out;
}

}  // namespace biplab
