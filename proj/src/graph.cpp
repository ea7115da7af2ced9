#include "rigclique/graph.hpp"

#include <algorithm>
#include <string>

#include "rigclique/error.hpp"

namespace rigclique {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

} // namespace

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    auto dup = std::adjacent_find(ids_.begin(), ids_.end());
    if (dup != ids_.end())
        throw InputError("duplicate vertex " + std::to_string(*dup) + " in vertex set");
}

bool VertexSet::contains(Vertex v) const noexcept {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : neighbors_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.neighbors_.resize(n);
    g.rows_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge " + pair_text(u, v) + " has endpoint >= n = " + std::to_string(n));
        if (u == v) throw InputError("self-loop " + pair_text(u, v));
        if (g.rows_[u].test(v)) throw InputError("duplicate edge " + pair_text(u, v));
        g.rows_[u].set(v);
        g.rows_[v].set(u);
        g.neighbors_[u].push_back(v);
        g.neighbors_[v].push_back(u);
    }
    for (auto& list : g.neighbors_) std::sort(list.begin(), list.end());
    g.edge_count_ = edges.size();
    return g;
}

Graph graph_from_rows(std::vector<Bitset> rows) {
    Graph g;
    const std::size_t n = rows.size();
    g.neighbors_.resize(n);
    std::size_t degree_sum = 0;
    for (std::size_t u = 0; u < n; ++u) {
        auto& list = g.neighbors_[u];
        list.reserve(rows[u].count());
        rows[u].for_each([&](std::size_t v) { list.push_back(static_cast<Vertex>(v)); });
        degree_sum += list.size();
    }
    g.rows_ = std::move(rows);
    g.edge_count_ = degree_sum / 2;
    return g;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (v >= g.n())
            throw InputError("vertex " + std::to_string(v) + " out of range for n = " +
                             std::to_string(g.n()));
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (!g.adjacent(s[a], s[b])) return false;
    return true;
}

std::vector<Vertex> lex_bfs_order(const Graph& g) {
    // Partition refinement over a single array: each cell is a contiguous
    // range of `seq`, and cells earlier in the array carry larger labels.
    const std::size_t n = g.n();
    struct Cell {
        std::size_t start;
        std::size_t end;
        std::size_t split = SIZE_MAX; // cell created from this one in the current round
    };
    std::vector<Vertex> seq(n);
    std::vector<std::size_t> pos(n);
    std::vector<std::size_t> cell_of(n, 0);
    std::vector<Cell> cells;
    cells.reserve(2 * n + 1);
    cells.push_back({0, n});
    for (std::size_t i = 0; i < n; ++i) {
        seq[i] = static_cast<Vertex>(i);
        pos[i] = i;
    }

    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = seq[i];
        cells[cell_of[v]].start = i + 1;

        for (Vertex w : g.neighbors(v)) {
            if (pos[w] <= i) continue;
            const std::size_t c = cell_of[w];
            if (cells[c].split == SIZE_MAX) {
                cells.push_back({cells[c].start, cells[c].start});
                cells[c].split = cells.size() - 1;
                touched.push_back(c);
            }
            const std::size_t nc = cells[c].split;
            const std::size_t target = cells[c].start;
            const Vertex other = seq[target];
            std::swap(seq[target], seq[pos[w]]);
            pos[other] = pos[w];
            pos[w] = target;
            ++cells[c].start;
            ++cells[nc].end;
            cell_of[w] = nc;
        }
        for (std::size_t c : touched) cells[c].split = SIZE_MAX;
        touched.clear();
    }
    return seq;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
    const std::size_t n = g.n();
    if (order.size() != n) return false;
    std::vector<std::size_t> pos(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || pos[order[i]] != SIZE_MAX) return false;
        pos[order[i]] = i;
    }
    // For each v, the later neighbors minus the earliest one (the parent) must
    // all be adjacent to the parent.
    for (Vertex v : order) {
        Vertex parent = 0;
        std::size_t parent_pos = SIZE_MAX;
        for (Vertex w : g.neighbors(v))
            if (pos[w] > pos[v] && pos[w] < parent_pos) {
                parent_pos = pos[w];
                parent = w;
            }
        if (parent_pos == SIZE_MAX) continue;
        for (Vertex w : g.neighbors(v))
            if (pos[w] > parent_pos && !g.adjacent(parent, w)) return false;
    }
    return true;
}

ChordalityResult is_chordal(const Graph& g) {
    auto order = lex_bfs_order(g);
    std::reverse(order.begin(), order.end());
    if (!is_perfect_elimination_order(g, order)) return {false, std::nullopt};
    return {true, std::move(order)};
}

} // namespace rigclique
