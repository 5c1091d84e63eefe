#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biplab/bitvec.hpp"

namespace biplab {

enum class Side : std::uint8_t { X, Y };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }
inline const char* side_name(Side s) { return s == Side::X ? "X" : "Y"; }

struct VertexId {
    Side side;
    std::uint32_t index;

    bool operator==(const VertexId&) const = default;
};

/// One vertex or a disjoint same-side pair treated as a unit. Pair
/// neighborhoods are multisets: a common neighbor counts twice.
class VertexPack {
public:
    static VertexPack single(Side s, std::uint32_t i) { return VertexPack(s, i, i, 1); }
    static VertexPack pair(Side s, std::uint32_t i, std::uint32_t j) {
        if (i == j) throw std::invalid_argument("VertexPack: pair members must be distinct");
        if (i > j) std::swap(i, j);
        return VertexPack(s, i, j, 2);
    }

    Side side() const { return side_; }
    std::size_t size() const { return n_; }
    std::uint32_t operator[](std::size_t k) const { return v_[k]; }

    bool contains(std::uint32_t idx) const {
        return v_[0] == idx || (n_ == 2 && v_[1] == idx);
    }
    bool disjoint_from(const VertexPack& o) const {
        if (side_ != o.side_) return true;
        for (std::size_t a = 0; a < n_; ++a)
            if (o.contains(v_[a])) return false;
        return true;
    }

    bool operator==(const VertexPack& o) const {
        return side_ == o.side_ && n_ == o.n_ && v_[0] == o.v_[0] && (n_ == 1 || v_[1] == o.v_[1]);
    }

private:
    VertexPack(Side s, std::uint32_t i, std::uint32_t j, std::uint8_t n)
        : side_(s), v_{i, j}, n_(n) {}

    Side side_;
    std::array<std::uint32_t, 2> v_;
    std::uint8_t n_;
};

/// Exact reduced fraction; numerators here never exceed the 2^31 cell cap.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t n, std::int64_t d) {
        std::int64_t g = std::gcd(n, d);
        if (g == 0) g = 1;
        return Rational{n / g, d / g};
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

class BipartiteGraph;

/// Vertex-subset selector for induced subgraphs: one mask per side.
struct Selection {
    BitVec x_mask;
    BitVec y_mask;

    static Selection none_of(const BipartiteGraph& g);
    static Selection all_of(const BipartiteGraph& g);

    bool operator==(const Selection&) const = default;
};

/// Two-sided vertex sets with bit-matrix adjacency, immutable after
/// construction. Rows are stored from both sides so either side's
/// neighborhoods are one word-array away.
class BipartiteGraph {
public:
    static constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 31;

    static BipartiteGraph build(std::uint32_t x_size, std::uint32_t y_size,
                                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

    std::uint32_t x_size() const { return x_size_; }
    std::uint32_t y_size() const { return y_size_; }
    std::uint32_t side_size(Side s) const { return s == Side::X ? x_size_ : y_size_; }
    std::uint64_t edge_count() const { return edge_count_; }
    std::uint64_t cell_count() const { return std::uint64_t{x_size_} * y_size_; }
    /// min(|X|,|Y|); the paper-facing f(m).
    std::uint32_t min_side() const { return x_size_ < y_size_ ? x_size_ : y_size_; }

    bool has_edge(std::uint32_t xi, std::uint32_t yi) const { return rows_x_[xi].test(yi); }

    const BitVec& row_x(std::uint32_t xi) const { return rows_x_[xi]; }
    const BitVec& row_y(std::uint32_t yi) const { return rows_y_[yi]; }
    const BitVec& row(Side s, std::uint32_t i) const {
        return s == Side::X ? rows_x_[i] : rows_y_[i];
    }

    std::uint64_t degree_x(std::uint32_t xi) const { return rows_x_[xi].count(); }
    std::uint64_t degree_y(std::uint32_t yi) const { return rows_y_[yi].count(); }
    std::uint64_t degree(Side s, std::uint32_t i) const { return row(s, i).count(); }

    /// Side-swapped copy. The flag records that the copy's X used to be Y;
    /// callers that normalize orientation keep results traceable through it.
    BipartiteGraph transposed() const;
    bool is_transposed() const { return transposed_; }

    bool operator==(const BipartiteGraph& o) const {
        return x_size_ == o.x_size_ && y_size_ == o.y_size_ && rows_x_ == o.rows_x_;
    }

private:
    BipartiteGraph(std::uint32_t x, std::uint32_t y, std::vector<BitVec> rows_x,
                   std::vector<BitVec> rows_y, std::uint64_t edges, bool transposed)
        : x_size_(x), y_size_(y), rows_x_(std::move(rows_x)), rows_y_(std::move(rows_y)),
          edge_count_(edges), transposed_(transposed) {}

    std::uint32_t x_size_ = 0;
    std::uint32_t y_size_ = 0;
    std::vector<BitVec> rows_x_;
    std::vector<BitVec> rows_y_;
    std::uint64_t edge_count_ = 0;
    bool transposed_ = false;
};

/// e(G) / (|X|·|Y|) as an exact fraction.
Rational density(const BipartiteGraph& g);

/// Edges with both endpoints selected.
std::uint64_t induced_edge_count(const BipartiteGraph& g, const Selection& sel);

/// Multiset degree of a pack into the selected opposite side:
/// sum over members of |N(member) ∩ selection|; shared neighbors count twice.
std::uint64_t pack_degree_into(const BipartiteGraph& g, const VertexPack& v, const Selection& sel);

/// Size of the multiset symmetric difference of two packs' neighborhoods
/// restricted to the selection. Multiplicities are at most 2, so the
/// multiset splits into level sets (union, intersection) and the answer is
/// the sum of the two plain symmetric-difference popcounts.
std::uint64_t pack_symdiff_size(const BipartiteGraph& g, const VertexPack& a, const VertexPack& b,
                                const Selection& sel);

/// G(x,y,p): each cell present independently with probability p.
/// Deterministic per seed.
BipartiteGraph random_bipartite(std::uint32_t x_size, std::uint32_t y_size, double p,
                                std::uint64_t seed);

/// Uniformly random edge set of exactly e edges (partial shuffle of cells).
BipartiteGraph random_bipartite_exact_edges(std::uint32_t x_size, std::uint32_t y_size,
                                            std::uint64_t e, std::uint64_t seed);

BipartiteGraph parse_graph(const std::string& text);
std::string serialize_graph(const BipartiteGraph& g);

BipartiteGraph load_graph_file(const std::string& path);
void save_graph_file(const BipartiteGraph& g, const std::string& path);

}  // namespace biplab
