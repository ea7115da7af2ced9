#include <algorithm>
#include <numeric>

#include "rigclique/oracle.hpp"

namespace rigclique {

namespace {

// Incidence graph B: node v < n is vertex v, node n + i is label i.
using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency incidence_adjacency(const LabelRepresentation& rep) {
    const std::size_t n = rep.n();
    Adjacency adj(n + rep.m());
    for (Vertex v = 0; v < n; ++v)
        for (Label i : rep.labels_of(v)) {
            adj[v].push_back(n + i);
            adj[n + i].push_back(v);
        }
    return adj;
}

using BlockEdges = std::vector<std::pair<std::size_t, std::size_t>>;

/// Biconnected blocks (as edge lists) of an undirected simple graph, iterative
/// Hopcroft-Tarjan.
std::vector<BlockEdges> biconnected_blocks(const Adjacency& adj) {
    const std::size_t nodes = adj.size();
    constexpr std::size_t unseen = SIZE_MAX;
    std::vector<std::size_t> disc(nodes, unseen), low(nodes, 0), parent(nodes, unseen);
    std::vector<std::size_t> cursor(nodes, 0);
    std::vector<std::pair<std::size_t, std::size_t>> edge_stack;
    std::vector<BlockEdges> blocks;
    std::size_t clock = 0;

    for (std::size_t root = 0; root < nodes; ++root) {
        if (disc[root] != unseen) continue;
        disc[root] = low[root] = clock++;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            if (cursor[u] < adj[u].size()) {
                const std::size_t w = adj[u][cursor[u]++];
                if (disc[w] == unseen) {
                    parent[w] = u;
                    disc[w] = low[w] = clock++;
                    edge_stack.emplace_back(u, w);
                    stack.push_back(w);
                } else if (w != parent[u] && disc[w] < disc[u]) {
                    edge_stack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
                continue;
            }
            stack.pop_back();
            if (stack.empty()) break;
            const std::size_t p = stack.back();
            low[p] = std::min(low[p], low[u]);
            if (low[u] >= disc[p]) {
                BlockEdges block;
                while (true) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e.first == p && e.second == u) break;
                }
                blocks.push_back(std::move(block));
            }
        }
    }
    return blocks;
}

/// Local view of one block: nodes sorted by global id.
struct Block {
    std::vector<std::size_t> nodes;
    std::vector<std::vector<std::size_t>> adj; // local indices, ascending

    explicit Block(const BlockEdges& edges) {
        for (auto [a, b] : edges) {
            nodes.push_back(a);
            nodes.push_back(b);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        adj.resize(nodes.size());
        auto local = [&](std::size_t g) {
            return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), g) -
                                            nodes.begin());
        };
        for (auto [a, b] : edges) {
            adj[local(a)].push_back(local(b));
            adj[local(b)].push_back(local(a));
        }
        for (auto& list : adj) std::sort(list.begin(), list.end());
    }

    /// K_{2,t}: two non-adjacent hubs joined to every other node, each of
    /// which has degree 2. Its only cycles have length 4.
    bool is_complete_bipartite_two_by_t() const {
        const std::size_t size = nodes.size();
        if (size < 4) return false;
        std::vector<std::size_t> hubs;
        for (std::size_t x = 0; x < size; ++x)
            if (adj[x].size() == size - 2) hubs.push_back(x);
        for (std::size_t h1 = 0; h1 < hubs.size(); ++h1)
            for (std::size_t h2 = h1 + 1; h2 < hubs.size(); ++h2) {
                const std::size_t a = hubs[h1], b = hubs[h2];
                if (std::binary_search(adj[a].begin(), adj[a].end(), b)) continue;
                bool ok = true;
                for (std::size_t x = 0; x < size && ok; ++x) {
                    if (x == a || x == b) continue;
                    ok = adj[x].size() == 2 && adj[x][0] == std::min(a, b) &&
                         adj[x][1] == std::max(a, b);
                }
                if (ok) return true;
            }
        return false;
    }
};

enum class DfsOutcome { found, exhausted, out_of_budget };

/// Bounded DFS for a simple cycle with at least `min_length` edges whose
/// smallest local node is the start. On success `path` holds the cycle.
DfsOutcome long_cycle_dfs(const Block& block, std::size_t min_length, std::uint64_t& steps,
                          std::uint64_t budget, std::vector<std::size_t>& path) {
    const std::size_t size = block.nodes.size();
    std::vector<bool> on_path(size, false);
    for (std::size_t s = 0; s < size; ++s) {
        path.assign(1, s);
        on_path[s] = true;
        std::vector<std::size_t> cursor{0};
        while (!path.empty()) {
            const std::size_t x = path.back();
            std::size_t& c = cursor.back();
            if (c == block.adj[x].size()) {
                on_path[x] = false;
                path.pop_back();
                cursor.pop_back();
                continue;
            }
            const std::size_t w = block.adj[x][c++];
            if (++steps > budget) return DfsOutcome::out_of_budget;
            if (w == s && path.size() >= min_length) return DfsOutcome::found;
            if (w <= s || on_path[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            cursor.push_back(0);
        }
    }
    return DfsOutcome::exhausted;
}

} // namespace

const char* to_string(CycleStatus status) noexcept {
    switch (status) {
    case CycleStatus::none: return "none";
    case CycleStatus::found: return "found";
    case CycleStatus::unknown: return "unknown";
    }
    return "?";
}

bool is_valid_labeled_cycle(const LabelRepresentation& rep, const LabeledCycle& cycle) {
    const std::size_t k = cycle.vertices.size();
    if (k < 3 || cycle.labels.size() != k) return false;
    auto distinct = [](auto values) {
        std::sort(values.begin(), values.end());
        return std::adjacent_find(values.begin(), values.end()) == values.end();
    };
    if (!distinct(cycle.vertices) || !distinct(cycle.labels)) return false;
    auto has = [&](Vertex v, Label i) {
        if (v >= rep.n()) return false;
        auto s = rep.labels_of(v);
        return std::binary_search(s.begin(), s.end(), i);
    };
    for (std::size_t j = 0; j < k; ++j)
        if (!has(cycle.vertices[j], cycle.labels[j]) ||
            !has(cycle.vertices[(j + 1) % k], cycle.labels[j]))
            return false;
    return true;
}

bool incidence_graph_is_forest(const LabelRepresentation& rep) {
    const std::size_t nodes = rep.n() + rep.m();
    std::vector<std::size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = nodes;
    for (Vertex v = 0; v < rep.n(); ++v)
        for (Label i : rep.labels_of(v)) {
            auto a = find(v), b = find(rep.n() + i);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    return rep.incidence_count() <= nodes - components;
}

CycleSearchResult find_distinct_label_cycle(const LabelRepresentation& rep,
                                            std::uint64_t step_budget) {
    if (incidence_graph_is_forest(rep)) return {CycleStatus::none, std::nullopt};

    const std::size_t n = rep.n();
    std::uint64_t steps = 0;
    bool budget_hit = false;
    for (const auto& edges : biconnected_blocks(incidence_adjacency(rep))) {
        // Bipartite cycles need at least 4 edges; K_{2,t} blocks hold only 4-cycles.
        if (edges.size() < 6) continue;
        Block block(edges);
        if (block.is_complete_bipartite_two_by_t()) continue;

        std::vector<std::size_t> path;
        switch (long_cycle_dfs(block, 6, steps, step_budget, path)) {
        case DfsOutcome::found: {
            // The start is the smallest global id on the cycle, hence a vertex
            // node, so the path alternates vertex, label, vertex, ...
            LabeledCycle cycle;
            for (std::size_t j = 0; j < path.size(); ++j) {
                const std::size_t node = block.nodes[path[j]];
                if (j % 2 == 0) cycle.vertices.push_back(static_cast<Vertex>(node));
                else cycle.labels.push_back(static_cast<Label>(node - n));
            }
            return {CycleStatus::found, std::move(cycle)};
        }
        case DfsOutcome::out_of_budget: budget_hit = true; break;
        case DfsOutcome::exhausted: break;
        }
        if (budget_hit) break;
    }
    return {budget_hit ? CycleStatus::unknown : CycleStatus::none, std::nullopt};
}

} // namespace rigclique
