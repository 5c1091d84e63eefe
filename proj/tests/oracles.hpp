#pragma once

// Independent oracles for cross-checking the library. Everything here is
// deliberately written with plain loops and std containers, no bit-vector
// word tricks, so a shared bug with the implementation under test is
// as unlikely as we can make it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "biplab/graph.hpp"

namespace oracle {

/// M(n) by the double loop over all (a, b).
inline std::set<std::uint64_t> mtable(std::uint64_t n) {
    std::set<std::uint64_t> out;
    for (std::uint64_t a = 0; a <= n; ++a)
        for (std::uint64_t b = 0; b <= n; ++b) out.insert(a * b);
    return out;
}

/// Distinct products i*j with 0 <= i <= a, 0 <= j <= b.
inline std::uint64_t phi_complete(std::uint64_t a, std::uint64_t b) {
    std::set<std::uint64_t> out;
    for (std::uint64_t i = 0; i <= a; ++i)
        for (std::uint64_t j = 0; j <= b; ++j) out.insert(i * j);
    return out.size();
}

/// has_divisor[n] for 1 <= n <= x: some divisor d of n with y < d <= z,
/// found by trial division.
inline std::vector<char> divisor_flags(std::uint64_t x, double y, double z) {
    std::vector<char> flag(x + 1, 0);
    for (std::uint64_t n = 1; n <= x; ++n) {
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            for (std::uint64_t div : {d, n / d}) {
                if (static_cast<double>(div) > y && static_cast<double>(div) <= z) {
                    flag[n] = 1;
                    break;
                }
            }
            if (flag[n]) break;
        }
    }
    return flag;
}

/// H(x,y,z) by per-integer divisor enumeration.
inline std::uint64_t hxyz(std::uint64_t x, double y, double z) {
    const auto flag = divisor_flags(x, y, z);
    std::uint64_t c = 0;
    for (std::uint64_t n = 1; n <= x; ++n) c += flag[n];
    return c;
}

/// Multiset symmetric difference of two packs' neighborhoods restricted to
/// the selected opposite side, using explicit multiplicity maps.
inline std::uint64_t pack_symdiff(const biplab::BipartiteGraph& g, const biplab::VertexPack& a,
                                  const biplab::VertexPack& b, const biplab::Selection& sel) {
    using namespace biplab;
    auto mults = [&](const VertexPack& v) {
        std::map<std::uint32_t, int> m;
        const std::uint32_t opp = g.side_size(opposite(v.side()));
        for (std::size_t k = 0; k < v.size(); ++k)
            for (std::uint32_t u = 0; u < opp; ++u) {
                const bool edge =
                    v.side() == Side::X ? g.has_edge(v[k], u) : g.has_edge(u, v[k]);
                const bool selected = v.side() == Side::X ? sel.y_mask.test(u) : sel.x_mask.test(u);
                if (edge && selected) ++m[u];
            }
        return m;
    };
    auto ma = mults(a), mb = mults(b);
    std::uint64_t total = 0;
    for (const auto& [u, c] : ma) total += std::abs(c - (mb.count(u) ? mb[u] : 0));
    for (const auto& [u, c] : mb)
        if (!ma.count(u)) total += c;
    return total;
}

/// For each a, the largest b such that an induced K_{a,b} (or the empty
/// pattern) exists, by scanning every X-subset of size a.
inline std::uint32_t max_b_for_a(const biplab::BipartiteGraph& g, std::uint32_t a, bool complete) {
    using namespace biplab;
    const std::uint32_t nx = g.x_size(), ny = g.y_size();
    std::uint32_t best = 0;
    std::vector<std::uint32_t> comb(a);
    for (std::uint32_t i = 0; i < a; ++i) comb[i] = i;
    if (a > nx) return 0;
    for (;;) {
        std::uint32_t count = 0;
        for (std::uint32_t yi = 0; yi < ny; ++yi) {
            bool all = true;
            for (auto xi : comb)
                if (g.has_edge(xi, yi) != complete) {
                    all = false;
                    break;
                }
            if (all) ++count;
        }
        best = std::max(best, count);
        std::int64_t i = static_cast<std::int64_t>(a) - 1;
        while (i >= 0 && comb[i] == nx - a + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (std::uint32_t k = i + 1; k < a; ++k) comb[k] = comb[k - 1] + 1;
    }
    return best;
}

/// Direct quadratic count of bad partners for the plain diversity notion.
inline std::uint64_t diversity_max_bad(const biplab::BipartiteGraph& g, bool x_side, double c) {
    using namespace biplab;
    const std::uint32_t n = x_side ? g.x_size() : g.y_size();
    const std::uint32_t opp = x_side ? g.y_size() : g.x_size();
    std::uint64_t worst = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint64_t bad = 0;
        for (std::uint32_t u = 0; u < n; ++u) {
            if (u == v) continue;
            std::uint64_t sym = 0;
            for (std::uint32_t w = 0; w < opp; ++w) {
                const bool ev = x_side ? g.has_edge(v, w) : g.has_edge(w, v);
                const bool eu = x_side ? g.has_edge(u, w) : g.has_edge(w, u);
                if (ev != eu) ++sym;
            }
            if (static_cast<double>(sym) < c * opp) ++bad;
        }
        worst = std::max(worst, bad);
    }
    return worst;
}

}  // namespace oracle
