#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "biplab/graph.hpp"
#include "biplab/size_set.hpp"

namespace biplab {

enum class SpectrumMethod : std::uint8_t { Exact, Sampled };

inline const char* method_name(SpectrumMethod m) {
    return m == SpectrumMethod::Exact ? "exact" : "sampled";
}

/// The induced-subgraph size spectrum of a graph and its cardinality.
/// `sampled` reports are lower bounds and are flagged as such so callers
/// can never silently mix the two modes.
struct SpectrumReport {
    SizeSet sizes;
    std::uint64_t phi = 0;
    SpectrumMethod method = SpectrumMethod::Exact;
    std::uint64_t budget_used = 0;
};

inline constexpr std::uint64_t kDefaultSpectrumBudget = std::uint64_t{1} << 24;

/// Exact spectrum. Orients the graph so the enumerated side is the smaller
/// one, then for each subset S of it runs a bit-vector shift-or subset-sum
/// over the other side's degree vector into S. Work unit = one subset;
/// throws when 2^min(|X|,|Y|) exceeds the budget.
SpectrumReport phi_exact(const BipartiteGraph& g,
                         std::uint64_t budget = kDefaultSpectrumBudget);

/// Independent oracle: enumerates all 2^(|X|+|Y|) selections with plain
/// per-vertex counting. Requires |X|+|Y| <= 22. Exists to cross-check
/// phi_exact and stays free of BitVec word tricks.
SpectrumReport phi_exact_oracle(const BipartiteGraph& g);

/// Lower-bound sampler: `trials` uniform selections plus the full one-side
/// spectra of 64 random subsets of the smaller side. trials == 0 yields {0}.
SpectrumReport phi_sampled(const BipartiteGraph& g, std::uint64_t trials, std::uint64_t seed);

struct CoverageWindow {
    std::uint64_t start = 0;
    std::uint64_t distinct = 0;
};

struct CoverageProfile {
    std::vector<CoverageWindow> windows;
    std::uint64_t min_distinct = 0;
    std::uint64_t window_width = 0;
};

/// Partition [0, max_value] into consecutive windows of the given width and
/// count distinct achieved sizes per window.
CoverageProfile interval_coverage(const SizeSet& sizes, std::uint64_t window);

}  // namespace biplab
