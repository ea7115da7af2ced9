#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rigclique/bitset.hpp"

namespace rigclique {

using Vertex = std::uint32_t;
using Label = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts the ids; throws InputError on a duplicate.
    explicit VertexSet(std::vector<Vertex> ids);
    VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(Vertex v) const noexcept;

    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    Vertex operator[](std::size_t i) const noexcept { return ids_[i]; }
    const std::vector<Vertex>& ids() const noexcept { return ids_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> ids_;
};

/// Simple undirected graph, immutable after construction.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and one
/// bitset row per vertex for the intersection-heavy clique kernels.
class Graph {
public:
    Graph() = default;

    std::size_t n() const noexcept { return neighbors_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept { return neighbors_[v]; }
    const Bitset& row(Vertex v) const noexcept { return rows_[v]; }
    std::size_t degree(Vertex v) const noexcept { return neighbors_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }

    /// Canonical edge list: (u, v) with u < v, lexicographically ascending.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.neighbors_ == b.neighbors_; }

private:
    friend Graph build_graph(std::size_t, std::span<const Edge>);
    friend Graph graph_from_rows(std::vector<Bitset>);

    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<Bitset> rows_;
    std::size_t edge_count_ = 0;
};

/// Builds a graph from an edge list. Endpoint order within a pair is free.
/// Throws InputError naming the pair on a self-loop, an endpoint >= n, or a
/// duplicate edge.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Builds a graph from symmetric, loop-free adjacency rows (internal kernels).
Graph graph_from_rows(std::vector<Bitset> rows);

/// True when every pair of s is adjacent in g. Throws InputError on an id >= n.
bool is_clique(const Graph& g, const VertexSet& s);

/// Result of a chordality test. When chordal, `elimination_order` is a perfect
/// elimination ordering (first element eliminated first).
struct ChordalityResult {
    bool chordal = false;
    std::optional<std::vector<Vertex>> elimination_order;
};

/// Lexicographic BFS followed by verification of the reversed visit order.
ChordalityResult is_chordal(const Graph& g);

/// Lexicographic breadth-first visit order (deterministic, starts at vertex 0).
std::vector<Vertex> lex_bfs_order(const Graph& g);

/// Checks that `order` is a permutation of V and a perfect elimination ordering.
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);

} // namespace rigclique
