#include "biplab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "biplab/construction.hpp"
#include "biplab/json_io.hpp"
#include "biplab/numtheory.hpp"
#include "biplab/ramsey.hpp"
#include "biplab/rng.hpp"
#include "biplab/spectrum.hpp"

namespace biplab::cli {

namespace {

constexpr const char* kCsvSchema = "1";

struct CommonOpts {
    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = 1;
    bool no_timestamp = false;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_jobs = false) {
    cmd->add_option("--out", o.out_path, "write the report to this path instead of stdout");
    cmd->add_option("--format", o.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_flag("--no-timestamp", o.no_timestamp, "omit wall-time fields for byte-stable output");
    if (with_jobs) cmd->add_option("--jobs", o.jobs, "trial-level worker threads");
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

int emit(const CommonOpts& o, const std::string& text, std::ostream& out, std::ostream& err) {
    if (o.out_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << o.out_path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string finish_json(OrderedJson j, const CommonOpts& o, const Stopwatch& sw) {
    if (!o.no_timestamp) j["wall_ms"] = sw.ms();
    return j.dump(2) + "\n";
}

class Csv {
public:
    Csv(std::vector<std::string> cols, const CommonOpts& o) : opts_(o) {
        cols.insert(cols.begin(), {"schema_version", "experiment"});
        cols.push_back("wall_ms");
        for (std::size_t i = 0; i < cols.size(); ++i) buf_ += (i ? "," : "") + cols[i];
        buf_ += "\n";
    }
    void row(const std::string& experiment, const std::vector<std::string>& vals,
             const Stopwatch& sw) {
        buf_ += std::string(kCsvSchema) + "," + experiment;
        for (const auto& v : vals) buf_ += "," + v;
        buf_ += ",";
        if (!opts_.no_timestamp) buf_ += fmt_double(sw.ms());
        buf_ += "\n";
    }
    const std::string& text() const { return buf_; }

private:
    const CommonOpts& opts_;
    std::string buf_;
};

// Runs `trials` independent jobs with per-trial results kept in submission
// order, so the report is identical for any worker count.
template <class Fn>
void parallel_trials(std::uint64_t trials, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || trials <= 1) {
        for (std::uint64_t t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::uint64_t>(jobs, trials);
    for (unsigned w = 0; w < n; ++w)
        pool.emplace_back([&, w] {
            for (std::uint64_t t = w; t < trials; t += n) fn(t);
        });
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------- commands

int cmd_mtable(std::uint64_t n, bool dump, const CommonOpts& o, std::ostream& out,
               std::ostream& err) {
    Stopwatch sw;
    const bool dense_ok = n * n + 1 <= kDenseBitBudget;
    std::uint64_t size = 0;
    SizeSet table;
    if (dense_ok) {
        table = multiplication_table(n);
        size = table.size();
    } else {
        size = multiplication_table_size(n, std::uint64_t{1} << 26, o.jobs);
    }

    if (o.format == "csv") {
        Csv csv({"n", "size", "includes_zero"}, o);
        csv.row("mtable", {std::to_string(n), std::to_string(size), "true"}, sw);
        return emit(o, csv.text(), out, err);
    }
    OrderedJson j{{"n", n}, {"size", size}, {"includes_zero", true}};
    if (dump && dense_ok) j["values"] = table.to_vector();
    return emit(o, finish_json(j, o, sw), out, err);
}

int cmd_hxyz(std::uint64_t x, double y, double z, const CommonOpts& o, std::ostream& out,
             std::ostream& err) {
    Stopwatch sw;
    const std::uint64_t count = hxyz(x, y, z);
    if (o.format == "csv") {
        Csv csv({"x", "y", "z", "count"}, o);
        csv.row("hxyz", {std::to_string(x), fmt_double(y), fmt_double(z), std::to_string(count)},
                sw);
        return emit(o, csv.text(), out, err);
    }
    OrderedJson j{{"x", x}, {"y", y}, {"z", z}, {"count", count}};
    return emit(o, finish_json(j, o, sw), out, err);
}

int cmd_phi(const std::string& graph_path, std::uint64_t budget, bool sampled,
            std::uint64_t trials, std::uint64_t window, const CommonOpts& o, std::ostream& out,
            std::ostream& err) {
    Stopwatch sw;
    const BipartiteGraph g = load_graph_file(graph_path);
    const SpectrumReport rep = sampled ? phi_sampled(g, trials, o.seed) : phi_exact(g, budget);
    OrderedJson j = to_json(rep);
    if (window > 0) j["window_stats"] = to_json(interval_coverage(rep.sizes, window));
    if (o.format == "csv") {
        Csv csv({"graph", "phi", "method", "budget_used"}, o);
        csv.row("phi",
                {graph_path, std::to_string(rep.phi), method_name(rep.method),
                 std::to_string(rep.budget_used)},
                sw);
        return emit(o, csv.text(), out, err);
    }
    return emit(o, finish_json(j, o, sw), out, err);
}

int cmd_ramsey(const std::string& graph_path, double C, std::uint64_t budget, const CommonOpts& o,
               std::ostream& out, std::ostream& err) {
    Stopwatch sw;
    const BipartiteGraph g = load_graph_file(graph_path);
    const RamseyVerdict v = is_c_bipartite_ramsey(g, C, budget);
    int rc = emit(o, finish_json(to_json(v), o, sw), out, err);
    if (rc != 0) return rc;
    return v.is_ramsey ? 0 : 1;
}

int cmd_diverse(const std::string& graph_path, double c, double delta, bool pair_mode,
                double alpha, double eps, const CommonOpts& o, std::ostream& out,
                std::ostream& err) {
    Stopwatch sw;
    const BipartiteGraph g = load_graph_file(graph_path);
    const DiversityReport rep = pair_mode
                                    ? pair_diversity_check(g, alpha, delta, eps,
                                                           kDefaultPairBudget, o.seed)
                                    : diversity_check(g, c, delta);
    int rc = emit(o, finish_json(to_json(rep), o, sw), out, err);
    if (rc != 0) return rc;
    return rep.passes ? 0 : 1;
}

int cmd_rich(const std::string& graph_path, double gamma, double delta, double eps, bool sampled,
             std::uint64_t trials, const CommonOpts& o, std::ostream& out, std::ostream& err) {
    Stopwatch sw;
    const BipartiteGraph g = load_graph_file(graph_path);
    const RichnessReport rep = sampled
                                   ? richness_check_sampled(g, gamma, delta, eps, trials, o.seed)
                                   : richness_check_exact(g, gamma, delta, eps);
    int rc = emit(o, finish_json(to_json(rep), o, sw), out, err);
    if (rc != 0) return rc;
    return rep.passes ? 0 : 1;
}

int cmd_construct(const std::string& graph_path, std::uint64_t l, const std::string& params_path,
                  const std::string& sizes_out, const CommonOpts& o, std::ostream& out,
                  std::ostream& err) {
    Stopwatch sw;
    const BipartiteGraph g = load_graph_file(graph_path);
    ConstructionParams params =
        params_path.empty() ? ConstructionParams::defaults() : ConstructionParams::load_file(params_path);
    params.seed = o.seed;
    if (l == 0)
        l = std::max<std::uint64_t>(
            1, static_cast<std::uint64_t>(std::llround(1.5 * params.c * double(g.cell_count()))));

    const PipelineResult res = run_pipeline(g, l, params);
    OrderedJson j{{"ok", res.ok},
                  {"failed_stage", res.ok ? "" : stage_name(res.failed_stage)},
                  {"message", res.message}};
    if (res.witness) j["witness"] = witness_to_json(*res.witness, !o.no_timestamp);
    if (res.family) j["family"] = family_to_json(*res.family);

    if (!sizes_out.empty() && res.family) {
        std::ofstream f(sizes_out);
        if (!f) {
            err << "error: cannot write " << sizes_out << "\n";
            return 2;
        }
        for (auto v : res.family->final_sizes.to_vector()) f << v << "\n";
    }

    int rc = emit(o, finish_json(j, o, sw), out, err);
    if (rc != 0) return rc;
    return res.ok ? 0 : 1;
}

struct ConjectureRow {
    std::uint32_t n1 = 0, n2 = 0;
    std::uint64_t phi = 0;
    bool violation = false;
};

int cmd_conjecture(std::uint64_t n, std::uint64_t samples, std::uint64_t side_bound,
                   bool exhaustive, const CommonOpts& o, std::ostream& out, std::ostream& err) {
    Stopwatch sw;
    if (n < 1) {
        err << "error: n must be positive\n";
        return 2;
    }
    const std::uint64_t e = n * n;
    if (side_bound == 0) side_bound = 3 * n;
    const std::uint64_t phi_target = phi_complete_bipartite(n, n);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> shapes;
    for (std::uint32_t n1 = 1; n1 <= side_bound; ++n1)
        for (std::uint32_t n2 = n1; n2 <= side_bound; ++n2)
            if (std::uint64_t{n1} * n2 >= e) shapes.emplace_back(n1, n2);
    if (shapes.empty()) {
        err << "error: side bound " << side_bound << " admits no graph with " << e << " edges\n";
        return 2;
    }

    std::vector<ConjectureRow> rows;
    if (exhaustive) {
        for (auto [n1, n2] : shapes) {
            const std::uint64_t cells = std::uint64_t{n1} * n2;
            std::vector<std::uint32_t> comb(e);
            for (std::uint64_t i = 0; i < e; ++i) comb[i] = static_cast<std::uint32_t>(i);
            for (;;) {
                std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
                edges.reserve(e);
                for (auto cidx : comb)
                    edges.emplace_back(cidx / n2, cidx % n2);
                const auto g = BipartiteGraph::build(n1, n2, edges);
                const auto rep = phi_exact(g);
                rows.push_back({n1, n2, rep.phi, rep.phi < phi_target});
                // next e-combination of the cell indices
                std::int64_t i = static_cast<std::int64_t>(e) - 1;
                while (i >= 0 && comb[i] == cells - e + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (std::uint64_t k = i + 1; k < e; ++k) comb[k] = comb[k - 1] + 1;
            }
        }
    } else {
        rows.resize(samples);
        parallel_trials(samples, o.jobs, [&](std::uint64_t t) {
            auto rng = make_rng(derive_seed(o.seed, t));
            const auto [n1, n2] = shapes[rand_below(rng, shapes.size())];
            const auto g = random_bipartite_exact_edges(n1, n2, e, derive_seed(o.seed, 70000 + t));
            const auto rep = phi_exact(g);
            rows[t] = {n1, n2, rep.phi, rep.phi < phi_target};
        });
    }

    std::uint64_t violations = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        if (r.violation) ++violations;
        min_ratio = std::min(min_ratio, double(r.phi) / double(phi_target));
    }
    if (violations > 0)
        err << "CONJECTURE VIOLATION: " << violations << " graph(s) with phi below "
            << phi_target << " — inspect the per-row report\n";

    int rc;
    if (o.format == "csv") {
        Csv csv({"seed", "n", "n1", "n2", "edges", "phi", "phi_target", "violation"}, o);
        for (std::size_t t = 0; t < rows.size(); ++t)
            csv.row("conjecture",
                    {std::to_string(o.seed), std::to_string(n), std::to_string(rows[t].n1),
                     std::to_string(rows[t].n2), std::to_string(e), std::to_string(rows[t].phi),
                     std::to_string(phi_target), rows[t].violation ? "true" : "false"},
                    sw);
        rc = emit(o, csv.text(), out, err);
    } else {
        OrderedJson j{{"n", n},
                      {"edges", e},
                      {"phi_target", phi_target},
                      {"mode", exhaustive ? "exhaustive" : "sampled"},
                      {"graphs", rows.size()},
                      {"violations", violations},
                      {"min_ratio", min_ratio}};
        rc = emit(o, finish_json(j, o, sw), out, err);
    }
    if (rc != 0) return rc;
    return violations == 0 ? 0 : 1;
}

int cmd_density(std::uint64_t n, std::uint64_t trials, double C, const CommonOpts& o,
                std::ostream& out, std::ostream& err) {
    Stopwatch sw;
    struct Row {
        bool ramsey = false;
        double density = 0.0;
    };
    std::vector<Row> rows(trials);
    parallel_trials(trials, o.jobs, [&](std::uint64_t t) {
        const auto g = random_bipartite(static_cast<std::uint32_t>(n),
                                        static_cast<std::uint32_t>(n), 0.5,
                                        derive_seed(o.seed, t));
        const auto v = is_c_bipartite_ramsey(g, C);
        rows[t] = {v.is_ramsey && v.search_exhaustive, density(g).value()};
    });

    std::uint64_t passing = 0;
    double min_d = 1.0, max_d = 0.0;
    for (const auto& r : rows) {
        if (!r.ramsey) continue;
        ++passing;
        min_d = std::min(min_d, r.density);
        max_d = std::max(max_d, r.density);
    }

    if (o.format == "csv") {
        Csv csv({"seed", "n", "C", "trial", "is_ramsey", "density"}, o);
        for (std::size_t t = 0; t < rows.size(); ++t)
            csv.row("density",
                    {std::to_string(o.seed), std::to_string(n), fmt_double(C), std::to_string(t),
                     rows[t].ramsey ? "true" : "false", fmt_double(rows[t].density)},
                    sw);
        return emit(o, csv.text(), out, err);
    }
    OrderedJson j{{"n", n}, {"trials", trials}, {"C", C}, {"passing", passing}};
    if (passing > 0) {
        j["min_density"] = min_d;
        j["max_density"] = max_d;
        j["eps_empirical"] = std::min(min_d, 1.0 - max_d);
    }
    return emit(o, finish_json(j, o, sw), out, err);
}

int cmd_ford(const std::vector<std::uint64_t>& n_list, double band_lo, double band_hi,
             const CommonOpts& o, std::ostream& out, std::ostream& err) {
    Stopwatch sw;
    if (n_list.empty()) {
        err << "error: --n-list is empty\n";
        return 2;
    }
    struct Row {
        std::uint64_t n, size;
        double est, ratio;
    };
    std::vector<Row> rows;
    for (auto n : n_list) {
        if (n < 16) {
            err << "error: ford needs n >= 16\n";
            return 2;
        }
        const std::uint64_t size = multiplication_table_size(n, std::uint64_t{1} << 26, o.jobs);
        const double est = ford_estimate(n);
        rows.push_back({n, size, est, double(size) / est});
    }

    bool ok = true;
    for (const auto& r : rows) ok = ok && r.ratio > band_lo && r.ratio < band_hi;
    for (std::size_t i = 1; i < rows.size(); ++i)
        ok = ok && std::abs(rows[i].ratio / rows[i - 1].ratio - 1.0) < 0.5;

    Csv csv({"n", "m_size", "estimate", "ratio", "in_band"}, o);
    for (const auto& r : rows)
        csv.row("ford",
                {std::to_string(r.n), std::to_string(r.size), fmt_double(r.est),
                 fmt_double(r.ratio), (r.ratio > band_lo && r.ratio < band_hi) ? "true" : "false"},
                sw);
    int rc = emit(o, csv.text(), out, err);
    if (rc != 0) return rc;
    return ok ? 0 : 1;
}

int cmd_claims(std::uint64_t n, std::uint64_t trials, const std::string& params_path,
               const CommonOpts& o, std::ostream& out, std::ostream& err) {
    Stopwatch sw;
    ConstructionParams params =
        params_path.empty() ? ConstructionParams::defaults() : ConstructionParams::load_file(params_path);

    std::vector<std::array<bool, 5>> results(trials, {false, false, false, false, false});
    std::vector<char> structural(trials, 0);
    parallel_trials(trials, o.jobs, [&](std::uint64_t t) {
        const auto g = random_bipartite(static_cast<std::uint32_t>(n),
                                        static_cast<std::uint32_t>(n), 0.5,
                                        derive_seed(o.seed, 90000 + t));
        try {
            const auto cand = build_candidate_pairs(g);
            const auto pruned = prune_non_diverse_pairs(g, cand.pairs, params.gamma, params.delta);
            if (pruned.kept.empty()) {
                structural[t] = 1;
                return;
            }
            const auto som = star_or_matching(g, pruned.kept, cand.d_prime);
            const auto div = diversify(g, som.packs, params.gamma, params.delta);
            const std::uint64_t l = std::max<std::uint64_t>(
                1, static_cast<std::uint64_t>(std::llround(1.5 * params.c * double(g.cell_count()))));
            const auto su = sample_u(g, l, params.c, derive_seed(o.seed, 91000 + t));
            const auto diag = verify_claims(g, su.u, div.packs, l, su.p, som.d_dprime, params);
            results[t] = {diag.c1, diag.c2, diag.c3, diag.c4, diag.c5};
        } catch (const std::exception&) {
            structural[t] = 1;
        }
    });

    std::array<std::uint64_t, 5> held{};
    std::uint64_t structural_failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (structural[t]) ++structural_failures;
        for (int ci = 0; ci < 5; ++ci) held[ci] += results[t][ci] ? 1 : 0;
    }

    bool all_pass = true;
    std::array<double, 5> freq{};
    for (int ci = 0; ci < 5; ++ci) {
        freq[ci] = trials == 0 ? 0.0 : double(held[ci]) / double(trials);
        all_pass = all_pass && freq[ci] >= params.claim_floors[ci];
    }

    if (o.format == "json") {
        OrderedJson j{{"n", n},
                      {"trials", trials},
                      {"seed", o.seed},
                      {"structural_failures", structural_failures},
                      {"frequencies", freq},
                      {"floors", params.claim_floors},
                      {"pass", all_pass}};
        int rc = emit(o, finish_json(j, o, sw), out, err);
        if (rc != 0) return rc;
        return all_pass ? 0 : 1;
    }
    Csv csv({"seed", "n", "trials", "claim", "frequency", "floor", "pass"}, o);
    for (int ci = 0; ci < 5; ++ci)
        csv.row("claims",
                {std::to_string(o.seed), std::to_string(n), std::to_string(trials),
                 std::to_string(ci + 1), fmt_double(freq[ci]), fmt_double(params.claim_floors[ci]),
                 freq[ci] >= params.claim_floors[ci] ? "true" : "false"},
                sw);
    int rc = emit(o, csv.text(), out, err);
    if (rc != 0) return rc;
    return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"desk-scale experiments on induced-subgraph size spectra of bipartite graphs"};
    app.require_subcommand(1);

    CommonOpts o;

    // mtable
    std::uint64_t mt_n = 0;
    bool mt_dump = false;
    auto* mtable = app.add_subcommand("mtable", "distinct products a*b with 0 <= a,b <= n");
    mtable->add_option("--n", mt_n, "table bound")->required();
    mtable->add_flag("--dump", mt_dump, "include the value list in the report");
    add_common(mtable, o, true);

    // hxyz
    std::uint64_t hx_x = 0;
    double hx_y = 0.0, hx_z = 0.0;
    auto* hx = app.add_subcommand("hxyz", "integers up to x with a divisor in (y, z]");
    hx->add_option("--x", hx_x)->required();
    hx->add_option("--y", hx_y)->required();
    hx->add_option("--z", hx_z)->required();
    add_common(hx, o);

    // phi
    std::string phi_graph;
    std::uint64_t phi_budget = kDefaultSpectrumBudget, phi_trials = 1000, phi_window = 0;
    bool phi_sampled_flag = false;
    auto* phi = app.add_subcommand("phi", "induced-subgraph size spectrum of a graph file");
    phi->add_option("--graph", phi_graph, "graph file (bipartite v1 format)")->required();
    phi->add_option("--budget", phi_budget, "subset-enumeration budget");
    phi->add_flag("--sampled", phi_sampled_flag, "sampled lower bound instead of exact");
    phi->add_option("--trials", phi_trials, "sampled mode: number of random selections");
    phi->add_option("--window", phi_window, "also report per-window distinct counts");
    add_common(phi, o);

    // ramsey
    std::string ramsey_graph;
    double ramsey_C = 5.0;
    std::uint64_t ramsey_budget = kDefaultSearchBudget;
    auto* ramsey = app.add_subcommand("ramsey", "biclique/co-biclique verdict at the C*ln thresholds");
    ramsey->add_option("--graph", ramsey_graph)->required();
    ramsey->add_option("--C", ramsey_C, "threshold coefficient");
    ramsey->add_option("--budget", ramsey_budget, "search node budget");
    add_common(ramsey, o);

    // diverse
    std::string div_graph;
    double div_c = 0.2, div_delta = 0.5, div_alpha = 0.2, div_eps = 0.2;
    bool div_pair = false;
    auto* diverse = app.add_subcommand("diverse", "neighborhood diversity checker");
    diverse->add_option("--graph", div_graph)->required();
    diverse->add_option("--c", div_c, "closeness coefficient");
    diverse->add_option("--delta", div_delta, "bad-count exponent");
    diverse->add_flag("--pair", div_pair, "disjoint-pair variant");
    diverse->add_option("--alpha", div_alpha, "pair variant: filter coefficient");
    diverse->add_option("--eps", div_eps, "pair variant: closeness coefficient");
    add_common(diverse, o);

    // rich
    std::string rich_graph;
    double rich_gamma = 0.25, rich_delta = 0.5, rich_eps = 0.1;
    bool rich_sampled = false;
    std::uint64_t rich_trials = 200;
    auto* rich = app.add_subcommand("rich", "subset richness checker");
    rich->add_option("--graph", rich_graph)->required();
    rich->add_option("--gamma", rich_gamma)->required();
    rich->add_option("--delta", rich_delta)->required();
    rich->add_option("--eps", rich_eps)->required();
    rich->add_flag("--sampled", rich_sampled, "sampled audit instead of exhaustive");
    rich->add_option("--trials", rich_trials, "sampled mode: audits per side");
    add_common(rich, o);

    // construct
    std::string cons_graph, cons_params, cons_sizes_out;
    std::uint64_t cons_l = 0;
    auto* construct = app.add_subcommand("construct", "run the randomized size-family pipeline");
    construct->add_option("--graph", cons_graph)->required();
    construct->add_option("--l", cons_l, "target quarter edge count (default 1.5*c*m)");
    construct->add_option("--params", cons_params, "params config file (default: built-in)");
    construct->add_option("--sizes-out", cons_sizes_out, "write realized sizes, one per line");
    add_common(construct, o);

    // conjecture
    std::uint64_t conj_n = 0, conj_samples = 1000, conj_side_bound = 0;
    bool conj_exhaustive = false;
    auto* conjecture =
        app.add_subcommand("conjecture", "minimality desk check against the complete table");
    conjecture->add_option("--n", conj_n, "edge count is n^2")->required();
    conjecture->add_option("--samples", conj_samples, "sampled graphs");
    conjecture->add_option("--side-bound", conj_side_bound, "max side size (default 3n)");
    conjecture->add_flag("--exhaustive", conj_exhaustive, "enumerate every edge set instead");
    add_common(conjecture, o, true);

    // density
    std::uint64_t den_n = 64, den_trials = 100;
    double den_C = 5.0;
    auto* dens = app.add_subcommand("density", "density spread of Ramsey-passing random graphs");
    dens->add_option("--n", den_n)->required();
    dens->add_option("--trials", den_trials);
    dens->add_option("--C", den_C);
    add_common(dens, o, true);

    // ford
    std::vector<std::uint64_t> ford_ns;
    double ford_lo = 0.1, ford_hi = 10.0;
    auto* ford = app.add_subcommand("ford", "table sizes against the asymptotic estimate");
    ford->add_option("--n-list", ford_ns, "table bounds")->required()->delimiter(',');
    ford->add_option("--band-lo", ford_lo, "accepted ratio band, lower");
    ford->add_option("--band-hi", ford_hi, "accepted ratio band, upper");
    add_common(ford, o, true);

    // claims
    std::uint64_t cl_n = 64, cl_trials = 200;
    std::string cl_params;
    auto* claims = app.add_subcommand("claims", "empirical frequencies of the five per-U conditions");
    claims->add_option("--n", cl_n);
    claims->add_option("--trials", cl_trials);
    claims->add_option("--params", cl_params, "params config file (default: built-in)");
    add_common(claims, o, true);

    std::vector<const char*> argv;
    argv.push_back("bip-ramsey-lab");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    // tabular commands default to csv unless the user asked otherwise
    for (auto* tab : {ford, claims})
        if (*tab && tab->get_option("--format")->count() == 0) o.format = "csv";

    try {
        if (*mtable) return cmd_mtable(mt_n, mt_dump, o, out, err);
        if (*hx) return cmd_hxyz(hx_x, hx_y, hx_z, o, out, err);
        if (*phi)
            return cmd_phi(phi_graph, phi_budget, phi_sampled_flag, phi_trials, phi_window, o, out,
                           err);
        if (*ramsey) return cmd_ramsey(ramsey_graph, ramsey_C, ramsey_budget, o, out, err);
        if (*diverse)
            return cmd_diverse(div_graph, div_c, div_delta, div_pair, div_alpha, div_eps, o, out,
                               err);
        if (*rich)
            return cmd_rich(rich_graph, rich_gamma, rich_delta, rich_eps, rich_sampled, rich_trials,
                            o, out, err);
        if (*construct) return cmd_construct(cons_graph, cons_l, cons_params, cons_sizes_out, o, out, err);
        if (*conjecture)
            return cmd_conjecture(conj_n, conj_samples, conj_side_bound, conj_exhaustive, o, out,
                                  err);
        if (*dens) return cmd_density(den_n, den_trials, den_C, o, out, err);
        if (*ford) return cmd_ford(ford_ns, ford_lo, ford_hi, o, out, err);
        if (*claims) return cmd_claims(cl_n, cl_trials, cl_params, o, out, err);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    err << "usage error: no command\n";
    return 2;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace biplab::cli
