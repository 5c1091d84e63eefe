#include "biplab/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "biplab/rng.hpp"

namespace biplab {

Selection Selection::none_of(const BipartiteGraph& g) {
    return Selection{BitVec(g.x_size()), BitVec(g.y_size())};
}

Selection Selection::all_of(const BipartiteGraph& g) {
    return Selection{BitVec::full(g.x_size()), BitVec::full(g.y_size())};
}

BipartiteGraph BipartiteGraph::build(
    std::uint32_t x_size, std::uint32_t y_size,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    if (x_size == 0 || y_size == 0)
        throw std::invalid_argument("BipartiteGraph: empty side");
    if (std::uint64_t{x_size} * y_size > kMaxCells)
        throw std::invalid_argument("BipartiteGraph: more than 2^31 cells");

    std::vector<BitVec> rx(x_size, BitVec(y_size));
    std::vector<BitVec> ry(y_size, BitVec(x_size));
    for (const auto& [xi, yi] : edges) {
        if (xi >= x_size || yi >= y_size)
            throw std::invalid_argument("BipartiteGraph: edge index out of range");
        if (rx[xi].test(yi))
            throw std::invalid_argument("BipartiteGraph: duplicate edge");
        rx[xi].set(yi);
        ry[yi].set(xi);
    }
    return BipartiteGraph(x_size, y_size, std::move(rx), std::move(ry), edges.size(), false);
}

BipartiteGraph BipartiteGraph::transposed() const {
    BipartiteGraph g(y_size_, x_size_, rows_y_, rows_x_, edge_count_, !transposed_);
    return g;
}

Rational density(const BipartiteGraph& g) {
    return Rational::make(static_cast<std::int64_t>(g.edge_count()),
                          static_cast<std::int64_t>(g.cell_count()));
}

std::uint64_t induced_edge_count(const BipartiteGraph& g, const Selection& sel) {
    if (sel.x_mask.size() != g.x_size() || sel.y_mask.size() != g.y_size())
        throw std::invalid_argument("induced_edge_count: mask width mismatch");
    std::uint64_t total = 0;
    sel.x_mask.for_each_set(
        [&](std::size_t xi) { total += g.row_x(static_cast<std::uint32_t>(xi)).and_count(sel.y_mask); });
    return total;
}

namespace {

void check_pack(const BipartiteGraph& g, const VertexPack& v) {
    const std::uint32_t n = g.side_size(v.side());
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] >= n) throw std::invalid_argument("VertexPack index out of range");
}

const BitVec& opposite_mask(const VertexPack& v, const Selection& sel) {
    return v.side() == Side::X ? sel.y_mask : sel.x_mask;
}

}  // namespace

std::uint64_t pack_degree_into(const BipartiteGraph& g, const VertexPack& v, const Selection& sel) {
    check_pack(g, v);
    const BitVec& mask = opposite_mask(v, sel);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < v.size(); ++k) total += g.row(v.side(), v[k]).and_count(mask);
    return total;
}

std::uint64_t pack_symdiff_size(const BipartiteGraph& g, const VertexPack& a, const VertexPack& b,
                                const Selection& sel) {
    if (a.side() != b.side())
        throw std::invalid_argument("pack_symdiff_size: packs on different sides");
    if (!a.disjoint_from(b))
        throw std::invalid_argument("pack_symdiff_size: overlapping packs");
    check_pack(g, a);
    check_pack(g, b);

    const BitVec& mask = opposite_mask(a, sel);
    const Side s = a.side();

    auto level_sets = [&](const VertexPack& v) -> std::pair<BitVec, BitVec> {
        const BitVec& r0 = g.row(s, v[0]);
        if (v.size() == 1) return {r0, BitVec(r0.size())};
        const BitVec& r1 = g.row(s, v[1]);
        return {r0 | r1, r0 & r1};
    };

    auto [ua, ia] = level_sets(a);
    auto [ub, ib] = level_sets(b);
    return (ua ^ ub).and_count(mask) + (ia ^ ib).and_count(mask);
}

BipartiteGraph random_bipartite(std::uint32_t x_size, std::uint32_t y_size, double p,
                                std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_bipartite: p outside [0,1]");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    if (p > 0.0) {
        auto rng = make_rng(seed);
        for (std::uint32_t xi = 0; xi < x_size; ++xi)
            for (std::uint32_t yi = 0; yi < y_size; ++yi)
                if (rand_unit(rng) < p) edges.emplace_back(xi, yi);
    }
    return BipartiteGraph::build(x_size, y_size, edges);
}

BipartiteGraph random_bipartite_exact_edges(std::uint32_t x_size, std::uint32_t y_size,
                                            std::uint64_t e, std::uint64_t seed) {
    const std::uint64_t cells = std::uint64_t{x_size} * y_size;
    if (e > cells) throw std::invalid_argument("random_bipartite_exact_edges: e exceeds cell count");

    std::vector<std::uint64_t> cell(cells);
    for (std::uint64_t i = 0; i < cells; ++i) cell[i] = i;

    auto rng = make_rng(seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(e);
    for (std::uint64_t i = 0; i < e; ++i) {
        std::uint64_t j = i + rand_below(rng, cells - i);
        std::swap(cell[i], cell[j]);
        edges.emplace_back(static_cast<std::uint32_t>(cell[i] / y_size),
                           static_cast<std::uint32_t>(cell[i] % y_size));
    }
    return BipartiteGraph::build(x_size, y_size, edges);
}

namespace {

std::uint64_t parse_u64_field(const std::string& line, const char* key) {
    std::istringstream in(line);
    std::string tag;
    std::uint64_t value = 0;
    if (!(in >> tag >> value) || tag != key)
        throw std::runtime_error(std::string("graph format: expected '") + key + " <n>', got '" +
                                 line + "'");
    std::string rest;
    if (in >> rest) throw std::runtime_error("graph format: trailing tokens in '" + line + "'");
    return value;
}

std::string next_line(std::istringstream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(std::string("graph format: missing ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

BipartiteGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    if (next_line(in, "header") != "bipartite v1")
        throw std::runtime_error("graph format: bad header (want 'bipartite v1')");

    const std::uint64_t x = parse_u64_field(next_line(in, "x line"), "x");
    const std::uint64_t y = parse_u64_field(next_line(in, "y line"), "y");
    const std::uint64_t e = parse_u64_field(next_line(in, "e line"), "e");
    if (x == 0 || y == 0) throw std::runtime_error("graph format: empty side");
    if (x > 0xffffffffULL || y > 0xffffffffULL)
        throw std::runtime_error("graph format: side too large");

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(e);
    for (std::uint64_t i = 0; i < e; ++i) {
        std::string line = next_line(in, "edge line");
        std::istringstream ls(line);
        std::uint64_t xi = 0, yi = 0;
        if (!(ls >> xi >> yi)) throw std::runtime_error("graph format: bad edge line '" + line + "'");
        std::string rest;
        if (ls >> rest) throw std::runtime_error("graph format: trailing tokens in '" + line + "'");
        if (xi >= x || yi >= y) throw std::runtime_error("graph format: edge index out of range");
        edges.emplace_back(static_cast<std::uint32_t>(xi), static_cast<std::uint32_t>(yi));
    }
    std::string extra;
    while (std::getline(in, extra)) {
        if (!extra.empty() && extra.back() == '\r') extra.pop_back();
        if (!extra.empty()) throw std::runtime_error("graph format: trailing content '" + extra + "'");
    }

    try {
        return BipartiteGraph::build(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y),
                                     edges);
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("graph format: ") + ex.what());
    }
}

std::string serialize_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "bipartite v1\n";
    out << "x " << g.x_size() << "\n";
    out << "y " << g.y_size() << "\n";
    out << "e " << g.edge_count() << "\n";
    for (std::uint32_t xi = 0; xi < g.x_size(); ++xi)
        g.row_x(xi).for_each_set([&](std::size_t yi) { out << xi << " " << yi << "\n"; });
    return out.str();
}

BipartiteGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph_file(const BipartiteGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << serialize_graph(g);
}

}  // namespace biplab
