#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biplab/graph.hpp"

namespace biplab {

enum class BicliqueKind : std::uint8_t { Complete, Empty };

inline const char* kind_name(BicliqueKind k) {
    return k == BicliqueKind::Complete ? "complete" : "empty";
}

/// An induced all-edges or no-edges pattern between two vertex sets.
struct BicliqueWitness {
    std::vector<std::uint32_t> x_set;
    std::vector<std::uint32_t> y_set;
    BicliqueKind kind = BicliqueKind::Complete;
};

struct BicliqueSearch {
    std::optional<BicliqueWitness> witness;
    bool exhaustive = true;   ///< false means the node budget ran out first
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 22;

/// Branch-and-bound over X-subsets of size a: candidates ordered by degree
/// (descending for complete, ascending for empty, lowest index on ties),
/// pruning when the running row intersection drops below b. A returned
/// witness is always verified; "not found" is only final when exhaustive.
BicliqueSearch find_induced_biclique(const BipartiteGraph& g, std::uint32_t a, std::uint32_t b,
                                     BicliqueKind kind,
                                     std::uint64_t budget = kDefaultSearchBudget);

bool verify_biclique(const BipartiteGraph& g, const BicliqueWitness& w);

struct RamseyVerdict {
    double C = 0.0;
    std::uint64_t a_threshold = 0;  ///< ceil(C ln|X|)
    std::uint64_t b_threshold = 0;  ///< ceil(C ln|Y|)
    std::uint64_t a_effective = 0;  ///< threshold clamped to |X| so small graphs stay decidable
    std::uint64_t b_effective = 0;
    bool is_ramsey = false;
    std::optional<BicliqueWitness> witness;
    bool search_exhaustive = true;
};

/// Checks for an induced K_{a,b} or its bipartite complement at the C·ln
/// thresholds (ceilinged, clamped to the side sizes).
RamseyVerdict is_c_bipartite_ramsey(const BipartiteGraph& g, double C,
                                    std::uint64_t budget = kDefaultSearchBudget);

struct BalancedBicliqueResult {
    std::uint32_t value = 0;
    bool exhaustive = true;  ///< false: value is only a lower bound
};

/// Largest a with an induced K_{a,a} (or complement), by binary search.
BalancedBicliqueResult max_balanced_biclique(const BipartiteGraph& g, BicliqueKind kind,
                                             std::uint64_t budget = kDefaultSearchBudget);

/// One side of a diversity/richness style report.
struct SideReport {
    std::uint64_t max_bad_count = 0;
    std::uint64_t threshold = 0;  ///< floor(n^delta) of the audited side
    bool passes = true;
    std::int64_t worst_offender = -1;  ///< index (or pack id) attaining the max
};

struct DiversityReport {
    double c = 0.0;  ///< closeness coefficient (eps for the pair variant)
    double delta = 0.0;
    double alpha = 0.0;     ///< pair variant only: filter coefficient
    bool pair_mode = false;
    bool exact = true;      ///< pair variant may fall back to sampling
    SideReport x_side;
    SideReport y_side;
    bool passes = true;
};

/// Definition check: for each vertex, how many same-side partners have
/// symmetric difference below c·|opposite side|; passes when every count is
/// at most n^delta on both sides.
DiversityReport diversity_check(const BipartiteGraph& g, double c, double delta);

inline constexpr std::uint64_t kDefaultPairBudget = std::uint64_t{1} << 26;

/// Pair variant over disjoint vertex pairs with multiset neighborhoods.
/// Only pairs passing the alpha-filter are audited; counted partners are
/// vertex-disjoint pairs with multiset symmetric difference below eps·n.
DiversityReport pair_diversity_check(const BipartiteGraph& g, double alpha, double delta,
                                     double eps, std::uint64_t pair_budget = kDefaultPairBudget,
                                     std::uint64_t seed = 0);

struct RichnessReport {
    double gamma = 0.0, delta = 0.0, eps = 0.0;
    bool sampled = false;
    SideReport x_side;  ///< audits W ⊆ X, counts bad Y-vertices
    SideReport y_side;
    std::vector<std::uint32_t> worst_w_x;  ///< the worst audited subset, as indices
    std::vector<std::uint32_t> worst_w_y;
    bool passes = true;
};

/// Exhaustive audit of every W with |W| >= gamma·|side|; a vertex v on the
/// other side is bad for W when |N(v) ∩ W| or |W \ N(v)| is below
/// eps·|ground side| (the ground side is W's side, exactly as defined).
/// Requires both sides at most 20 vertices.
RichnessReport richness_check_exact(const BipartiteGraph& g, double gamma, double delta,
                                    double eps);

/// Audits `trials` uniformly random qualifying W per side. A reported
/// failure is a certified counterexample; a pass only means none was found.
RichnessReport richness_check_sampled(const BipartiteGraph& g, double gamma, double delta,
                                      double eps, std::uint64_t trials, std::uint64_t seed);

struct Lemma46Report {
    bool hypothesis_met = false;  ///< richness_check_exact passed
    bool diversity_ok = false;
    bool pair_diversity_ok = false;
    bool pair_count_ok = false;
    std::uint64_t pair_count_x = 0;  ///< X-pairs below the eps/2 co-neighborhood bound
    std::uint64_t pair_count_y = 0;
    double pair_count_limit_x = 0.0;  ///< |X|^(1+delta)
    double pair_count_limit_y = 0.0;
    bool all_ok() const { return diversity_ok && pair_diversity_ok && pair_count_ok; }
};

/// The machine-checkable content of the richness-to-diversity implications:
/// when the graph is (gamma, delta, eps)-rich with gamma < 1/2 it must be
/// (eps/2, delta)-diverse, (alpha, delta, alpha·eps/2)-pair-diverse for
/// alpha = 2·gamma, and have few near-complement pairs per side.
Lemma46Report lemma46_implications(const BipartiteGraph& g, double gamma, double delta,
                                   double eps);

struct TuranBounds {
    std::uint64_t by_degree = 0;  ///< ceil(n / (1 + max_deg))
    std::uint64_t by_edges = 0;   ///< ceil(n^2 / (2e + n))
};

TuranBounds turan_bounds(std::uint64_t n, std::uint64_t max_deg, std::uint64_t edges);

/// Greedy maximal independent set, lowest index first; size is at least
/// n/(1+max_degree). `conflict(i,j)` must be symmetric.
template <class ConflictFn>
std::vector<std::uint32_t> greedy_independent_set(std::uint32_t n, ConflictFn&& conflict) {
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t v = 0; v < n; ++v) {
        bool free = true;
        for (auto u : chosen)
            if (conflict(u, v)) {
                free = false;
                break;
            }
        if (free) chosen.push_back(v);
    }
    return chosen;
}

/// Count <= n^delta with a deterministic tolerance for pow() rounding.
inline std::uint64_t power_threshold(std::uint64_t n, double delta) {
    return static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(n), delta) + 1e-9));
}

}  // namespace biplab
