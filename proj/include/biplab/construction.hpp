#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biplab/graph.hpp"
#include "biplab/size_set.hpp"

namespace biplab {

/// Concrete stand-ins for every implied constant of the randomized
/// construction. Defaults come from the committed config file (see
/// config/construction_defaults.json), set by a seeded calibration run.
struct ConstructionParams {
    double C = 5.0;        ///< Ramsey threshold coefficient
    double alpha = 0.5;    ///< side-balance exponent (|X|,|Y| >= m^alpha)
    double c = 0.0005;     ///< edge-fraction constant; l ranges over [c*m, 2c*m]
    double c1 = 0.5;       ///< ladder index ranges: k in [c1*m/f^1.5, 2*c1*m/f^1.5], i <= c1*sqrt(f)
    double c2 = 0.015625;  ///< separation family: split needs sep >= 8*c2*sqrt(f); ladder filter gap c2*sqrt(f)
    double Q_window = 0.5; ///< degree window Q: distinct-degree picks stay within d ± Q*sqrt(f)
    double delta = 0.1;    ///< richness delta (default alpha/5)
    double gamma = 0.05;   ///< richness gamma; eps = 4*gamma unless overridden
    double eps = 0.2;
    double K1 = 0.25;      ///< stage-1 check: |e(U)-4l| <= K1*m/sqrt(f)
    double K2 = 1.0;       ///< stage-3 window: d_U within p*d'' ± K2*sqrt(f)
    double K3 = 0.0;       ///< stage-4 floor: min pairwise U-symdiff >= K3*f
    double K4 = 24.0;      ///< stage-5 cap: equal-degree pairs <= K4*m^2/f^3.5
    double K5 = 1.0;       ///< witness window: all kept packs within d ± K5*sqrt(f)
    std::uint64_t retries = 20;
    std::vector<double> claim_floors{0.6, 0.6, 0.6, 0.6, 0.6};
    std::uint64_t seed = 1;

    /// Compiled-in copy of the committed defaults file.
    static ConstructionParams defaults();
    static ConstructionParams from_json_text(const std::string& text);
    static ConstructionParams load_file(const std::string& path);
};

enum class PackMode : std::uint8_t { Star, Matching };

inline const char* mode_name(PackMode m) { return m == PackMode::Star ? "star" : "matching"; }

enum class Stage : std::uint8_t {
    Orient,
    CandidatePairs,
    Prune,
    StarOrMatching,
    Diversify,
    SampleU,
    Claims,
    Split,
    QFamily,
    Enumerate,
    Done
};

const char* stage_name(Stage s);

struct CandidatePairs {
    std::uint64_t d_prime = 0;       ///< center of the most populated degree-sum bucket
    std::uint64_t bucket_width = 0;  ///< ceil(sqrt(f))
    std::vector<VertexPack> pairs;   ///< the bucket's pairs, on the large side
};

/// Bucket all large-side pairs by degree sum into windows of width
/// ceil(sqrt(f)); ties between buckets go to the lowest center.
CandidatePairs build_candidate_pairs(const BipartiteGraph& g);

struct PruneResult {
    std::vector<VertexPack> kept;
    std::uint64_t removed = 0;
    double removal_allowance = 0.0;  ///< |Y|^(1+delta), diagnostic only
    bool removal_within_allowance = true;
};

/// Drop pairs whose one-sided co-neighborhood overlap stays under
/// 2*gamma*|X| in either orientation; survivors have both
/// |N(w1) ∩ co-N(w2)| and |N(w2) ∩ co-N(w1)| at least that large.
PruneResult prune_non_diverse_pairs(const BipartiteGraph& g, const std::vector<VertexPack>& pairs,
                                    double gamma, double delta);

struct StarOrMatching {
    PackMode mode = PackMode::Matching;
    std::vector<VertexPack> packs;   ///< singletons (star) or disjoint pairs (matching)
    std::int64_t d_dprime = 0;       ///< d' minus the hub degree in star mode, else d'
    std::int64_t star_center = -1;
};

/// Interpret the surviving pairs as a graph on the large side; take the
/// max-degree star when it beats the greedy matching, else the matching.
StarOrMatching star_or_matching(const BipartiteGraph& g, const std::vector<VertexPack>& pairs,
                                std::uint64_t d_prime);

struct DiversifyResult {
    std::vector<VertexPack> packs;      ///< greedy independent set A
    std::uint64_t conflict_max_degree = 0;
    std::uint64_t turan_floor = 0;      ///< |L| / (1 + max degree), rounded up
};

/// Conflict two packs whose full multiset symdiff is under 4*gamma^2*|X|,
/// then take the greedy maximal independent set.
DiversifyResult diversify(const BipartiteGraph& g, const std::vector<VertexPack>& packs,
                          double gamma, double delta);

struct SampledU {
    Selection u;
    double p = 0.0;  ///< sqrt(4l / e(G)), must land in (0, 0.1)
};

/// Each vertex of X ∪ Y joins U independently with probability p.
SampledU sample_u(const BipartiteGraph& g, std::uint64_t l, double c, std::uint64_t seed);

struct ClaimDiagnostics {
    std::uint64_t e_u = 0;
    double deviation_1 = 0.0;       ///< |e(U) - 4l|
    double limit_1 = 0.0;           ///< K1 * m / sqrt(f)
    double fraction_untouched = 0.0;
    double fraction_in_window = 0.0;
    std::uint64_t min_pair_symdiff = 0;  ///< over pack pairs, restricted to U
    double limit_4 = 0.0;           ///< K3 * f
    std::uint64_t equal_degree_pairs = 0;
    double limit_5 = 0.0;           ///< K4 * m^2 / f^3.5
    bool vacuous_45 = false;        ///< fewer than two packs
    bool c1 = false, c2 = false, c3 = false, c4 = false, c5 = false;
    bool all() const { return c1 && c2 && c3 && c4 && c5; }
};

/// Measure the five per-U conditions exactly against the configured
/// constants. Never throws on failure; booleans carry the verdicts.
ClaimDiagnostics verify_claims(const BipartiteGraph& g, const Selection& u,
                               const std::vector<VertexPack>& packs, std::uint64_t l, double p,
                               std::int64_t d_dprime, const ConstructionParams& params);

struct SplitResult {
    bool ok = false;
    std::string failure;
    std::vector<VertexPack> S;  ///< low-degree side, ordered by (d_U, index)
    std::vector<VertexPack> T;  ///< high-degree side, same order
    std::vector<VertexPack> Z;  ///< distinct-degree picks from the other half
    std::vector<VertexPack> B;  ///< distinct-degree ladder the split was read off
    std::vector<std::uint64_t> s_degrees, t_degrees, z_degrees;
    std::uint64_t separation = 0;  ///< min_T d_U - max_S d_U
    int branch = 0;                ///< 1: T took the upper half classes, 2: S took the lower
};

/// Keep the packs untouched by U and inside the degree window, split them
/// alternately into two halves, extract distinct-degree ladders from both,
/// and cut S / T around the middle so their U-degrees separate by at least
/// |B|/6. Fails when the ladder has under six rungs.
SplitResult split_and_order(const BipartiteGraph& g, const Selection& u,
                            const std::vector<VertexPack>& packs, double p, std::int64_t d_dprime,
                            const ConstructionParams& params);

struct QFamily {
    std::int64_t k_lo = 0, k_hi = -1;
    std::int64_t i_max = 0;
    bool clipped = false;  ///< nominal index ranges exceeded |S| or |T|
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;  ///< valid (k, i)
};

/// The ladder index set: Q_{k,i} = first (k-i) elements of S plus first i
/// of T, for k in [c1*m/f^1.5, 2*c1*m/f^1.5] and i in [0, c1*sqrt(f)],
/// clipped to the available prefix lengths.
QFamily build_q_family(const std::vector<VertexPack>& S, const std::vector<VertexPack>& T,
                       const BipartiteGraph& g, const ConstructionParams& params);

struct SizeFamily {
    struct RawEntry {
        std::uint32_t k = 0, i = 0;
        std::uint64_t size = 0;
    };
    std::vector<RawEntry> raw;                 ///< e(U ∪ Q_{k,i}) over the whole family
    std::vector<std::uint64_t> ladder;         ///< filtered, deduplicated base sizes
    std::vector<std::uint64_t> kept;           ///< thinned base sizes
    std::vector<RawEntry> kept_entries;        ///< one representative (k,i) per kept size
    std::uint64_t thinning_gap = 0;            ///< kept bases differ by at least this
    std::uint64_t z_used = 0;                  ///< Z members inside the degree window
    SizeSet final_sizes;
    std::uint64_t distinct_count = 0;
    std::uint64_t verified = 0;                ///< sizes re-checked by full recount
};

/// Walk the ladder: exact incremental sizes (no intra-Y edges), the
/// forward-gap filter, thinning to gaps of at least 2*Q*sqrt(f)+1, then one
/// final size per (kept base, z). Every size is re-verified by an
/// independent recount and global distinctness is checked exactly.
SizeFamily enumerate_sizes(const BipartiteGraph& g, const Selection& u, const QFamily& qf,
                           const SplitResult& split, double p, std::int64_t d_dprime,
                           const ConstructionParams& params);

struct ConstructionWitness {
    ConstructionParams params;
    std::uint64_t l = 0;
    std::uint64_t seed = 0;           ///< master seed for this run
    std::uint32_t attempts = 0;       ///< U samples consumed (<= retries+1)
    bool transposed = false;          ///< construction ran on the side-swapped graph
    double p = 0.0;
    std::uint64_t d_prime = 0;
    std::int64_t d_dprime = 0;
    double d = 0.0;                   ///< p * d''
    PackMode mode = PackMode::Matching;
    Selection u;
    std::vector<VertexPack> A, S, T, Z, B;
    QFamily q_family;
    ClaimDiagnostics diagnostics;
    std::uint64_t separation = 0;
    int branch = 0;
    bool sub_nominal = false;         ///< index ranges were clipped
    std::map<std::string, double> stage_ms;
};

struct PipelineResult {
    bool ok = false;
    Stage failed_stage = Stage::Done;
    std::string message;
    std::optional<ConstructionWitness> witness;
    std::optional<SizeFamily> family;
};

/// Chain every stage with up to `retries` re-samples of U when a per-U
/// condition fails. Stage failures before U (bucketing, pruning) are
/// structural and never retried.
PipelineResult run_pipeline(const BipartiteGraph& g, std::uint64_t l,
                            const ConstructionParams& params);

struct HarnessRun {
    std::uint64_t l = 0;
    bool ok = false;
    std::uint64_t distinct = 0;
    std::uint64_t span = 0;
};

struct HarnessResult {
    SizeSet total;
    std::uint64_t distinct_count = 0;
    std::vector<HarnessRun> runs;
    std::uint64_t failures = 0;
};

/// Sweep l across [c*m, 2c*m], stepping by a quarter of the measured
/// per-run size span, and union the resulting families.
HarnessResult theorem_harness(const BipartiteGraph& g, const ConstructionParams& params);

}  // namespace biplab
