#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rigclique/error.hpp"
#include "rigclique/oracle.hpp"

namespace rigclique {

namespace {

/// Vertex order by repeated removal of a minimum-degree vertex, reversed so
/// that the densest core comes first. Ties go to the smaller id.
std::vector<Vertex> degeneracy_order(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        max_degree = std::max(max_degree, degree[v]);
    }
    std::vector<std::vector<Vertex>> buckets(max_degree + 1);
    for (Vertex v = n; v-- > 0;) buckets[degree[v]].push_back(v);
    std::vector<bool> removed(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    std::size_t d = 0;
    while (order.size() < n) {
        d = d > 0 ? d - 1 : 0;
        while (buckets[d].empty()) ++d;
        const Vertex v = buckets[d].back();
        buckets[d].pop_back();
        if (removed[v] || degree[v] != d) continue;
        removed[v] = true;
        order.push_back(v);
        for (Vertex w : g.neighbors(v))
            if (!removed[w]) buckets[--degree[w]].push_back(w);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

/// Branch and bound over a renumbered copy of the graph (index 0 = first
/// vertex of the reversed degeneracy order).
class BranchAndBound {
public:
    BranchAndBound(const Graph& g, std::uint64_t budget) : budget_(budget) {
        const std::size_t n = g.n();
        to_original_ = degeneracy_order(g);
        to_local_.resize(n);
        for (std::size_t r = 0; r < n; ++r) to_local_[to_original_[r]] = static_cast<Vertex>(r);
        rows_.assign(n, Bitset(n));
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v)) rows_[to_local_[v]].set(to_local_[w]);
    }

    std::size_t n() const noexcept { return rows_.size(); }
    Vertex local(Vertex original) const noexcept { return to_local_[original]; }
    const Bitset& row_local(Vertex r) const noexcept { return rows_[r]; }

    /// Size of the largest clique inside `candidates` (local ids).
    std::size_t maximum(const Bitset& candidates) {
        best_ = 0;
        goal_ = std::numeric_limits<std::size_t>::max();
        expand(candidates, 0);
        return best_;
    }

    /// True when `candidates` contains a clique of at least `need` vertices.
    bool has_clique(const Bitset& candidates, std::size_t need) {
        if (need == 0) return true;
        if (candidates.count() < need) return false;
        best_ = need - 1;
        goal_ = need;
        return expand(candidates, 0);
    }

private:
    /// Returns true once a clique of size goal_ has been found.
    bool expand(Bitset candidates, std::size_t size) {
        if (++nodes_ > budget_)
            throw LimitExceeded("maximum-clique search exceeded its budget of " +
                                std::to_string(budget_) + " nodes");
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        color(candidates, order, bound);
        for (std::size_t j = order.size(); j-- > 0;) {
            if (size + bound[j] <= best_) return false;
            const Vertex v = order[j];
            Bitset next = candidates & rows_[v];
            if (next.none()) {
                if (size + 1 > best_) {
                    best_ = size + 1;
                    if (best_ >= goal_) return true;
                }
            } else if (expand(std::move(next), size + 1)) {
                return true;
            }
            candidates.reset(v);
        }
        return false;
    }

    /// Greedy sequential coloring; bound[j] is the color of order[j] and is
    /// non-decreasing in j.
    void color(const Bitset& candidates, std::vector<Vertex>& order,
               std::vector<std::size_t>& bound) const {
        Bitset uncolored = candidates;
        std::size_t k = 0;
        while (uncolored.any()) {
            ++k;
            Bitset available = uncolored;
            for (std::size_t v = available.first(); v < available.size(); v = available.next(v + 1)) {
                available.subtract(rows_[v]);
                uncolored.reset(v);
                order.push_back(static_cast<Vertex>(v));
                bound.push_back(k);
            }
        }
    }

    std::vector<Vertex> to_original_;
    std::vector<Vertex> to_local_;
    std::vector<Bitset> rows_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t best_ = 0;
    std::size_t goal_ = 0;
};

} // namespace

std::size_t clique_number(const Graph& g, std::uint64_t node_budget) {
    if (g.n() == 0) return 0;
    BranchAndBound search(g, node_budget);
    Bitset all(g.n());
    all.set_all();
    return search.maximum(all);
}

VertexSet exact_max_clique(const Graph& g, std::uint64_t node_budget) {
    if (g.n() == 0) throw InputError("exact_max_clique needs at least one vertex");
    BranchAndBound search(g, node_budget);
    Bitset candidates(g.n());
    candidates.set_all();
    const std::size_t omega = search.maximum(candidates);

    // Lexicographically smallest maximum clique: take the smallest vertex that
    // still extends to a clique of size omega, restrict to its neighborhood,
    // repeat.
    std::vector<Vertex> chosen;
    for (Vertex v = 0; v < g.n() && chosen.size() < omega; ++v) {
        const Vertex r = search.local(v);
        if (!candidates.test(r)) continue;
        Bitset rest = candidates & search.row_local(r);
        if (search.has_clique(rest, omega - chosen.size() - 1)) {
            chosen.push_back(v);
            candidates = std::move(rest);
        }
    }
    if (chosen.size() != omega) throw InternalError("lexicographic clique extraction fell short");
    return VertexSet(std::move(chosen));
}

} // namespace rigclique
