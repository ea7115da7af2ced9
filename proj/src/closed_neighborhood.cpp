#include "rigclique/closed_neighborhood.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rigclique/error.hpp"

namespace rigclique {

namespace {

/// Closed-neighborhood row N[v] as a bitset.
Bitset closed_row(const Graph& g, Vertex v) {
    Bitset row = g.row(v);
    row.set(v);
    return row;
}

std::uint64_t hash_closed_neighborhood(const Graph& g, Vertex v) {
    // FNV-1a over the sorted closed neighborhood.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 0x100000001b3ULL;
    };
    bool placed = false;
    for (Vertex w : g.neighbors(v)) {
        if (!placed && v < w) {
            mix(v);
            placed = true;
        }
        mix(w);
    }
    if (!placed) mix(v);
    return h;
}

Partition finish_partition(std::vector<std::vector<Vertex>> groups, std::size_t n) {
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    Partition p;
    p.class_of.assign(n, 0);
    p.classes.reserve(groups.size());
    for (std::size_t c = 0; c < groups.size(); ++c) {
        for (Vertex v : groups[c]) p.class_of[v] = c;
        p.classes.emplace_back(std::move(groups[c]));
    }
    return p;
}

class WeightedCliqueSearch {
public:
    explicit WeightedCliqueSearch(const QuotientGraph& q) : q_(q) {}

    std::vector<std::size_t> run() {
        const std::size_t k = q_.size();
        Bitset candidates(k);
        candidates.set_all();
        std::vector<std::size_t> current;
        expand(current, 0, candidates, Bitset(k));
        return best_;
    }

private:
    std::uint64_t weight_of(const Bitset& s) const {
        std::uint64_t w = 0;
        s.for_each([&](std::size_t i) { w += q_.weights[i]; });
        return w;
    }

    void record(const std::vector<std::size_t>& current, std::uint64_t weight) {
        auto sorted = current;
        std::sort(sorted.begin(), sorted.end());
        if (weight > best_weight_ || (weight == best_weight_ && sorted < best_)) {
            best_weight_ = weight;
            best_ = std::move(sorted);
        }
    }

    void expand(std::vector<std::size_t>& current, std::uint64_t weight, Bitset candidates,
                Bitset excluded) {
        if (candidates.none()) {
            if (excluded.none()) record(current, weight);
            return;
        }
        // Positive weights: a strictly lighter bound cannot reach even a tie.
        if (weight + weight_of(candidates) < best_weight_) return;

        std::size_t pivot = 0;
        std::size_t pivot_hits = 0;
        bool have_pivot = false;
        auto consider = [&](std::size_t u) {
            auto hits = candidates.count_and(q_.graph.row(static_cast<Vertex>(u)));
            if (!have_pivot || hits > pivot_hits) {
                pivot = u;
                pivot_hits = hits;
                have_pivot = true;
            }
        };
        candidates.for_each(consider);
        excluded.for_each(consider);

        Bitset branch = candidates;
        branch.subtract(q_.graph.row(static_cast<Vertex>(pivot)));
        branch.for_each([&](std::size_t v) {
            const Bitset& nv = q_.graph.row(static_cast<Vertex>(v));
            current.push_back(v);
            expand(current, weight + q_.weights[v], candidates & nv, excluded & nv);
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
        });
    }

    const QuotientGraph& q_;
    std::uint64_t best_weight_ = 0;
    std::vector<std::size_t> best_;
};

} // namespace

Partition closed_neighborhood_partition(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<std::uint64_t> keys(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t v = 0; v < count; ++v)
        keys[static_cast<std::size_t>(v)] = hash_closed_neighborhood(g, static_cast<Vertex>(v));

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return keys[a] != keys[b] ? keys[a] < keys[b] : a < b;
    });

    std::vector<std::vector<Vertex>> groups;
    for (std::size_t lo = 0; lo < n;) {
        std::size_t hi = lo + 1;
        while (hi < n && keys[order[hi]] == keys[order[lo]]) ++hi;
        // Split the bucket on exact equality to survive hash collisions.
        std::vector<std::pair<Bitset, std::size_t>> seen;
        for (std::size_t k = lo; k < hi; ++k) {
            const Vertex v = order[k];
            Bitset row = closed_row(g, v);
            auto it = std::find_if(seen.begin(), seen.end(),
                                   [&](const auto& s) { return s.first == row; });
            if (it == seen.end()) {
                seen.emplace_back(std::move(row), groups.size());
                groups.push_back({v});
            } else {
                groups[it->second].push_back(v);
            }
        }
        lo = hi;
    }
    return finish_partition(std::move(groups), n);
}

Partition closed_neighborhood_partition_pairwise(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<Vertex>> groups;
    for (Vertex v = 0; v < n; ++v) {
        if (assigned[v]) continue;
        const Bitset nv = closed_row(g, v);
        std::vector<Vertex> members;
        for (Vertex u = v; u < n; ++u)
            if (!assigned[u] && closed_row(g, u) == nv) {
                assigned[u] = true;
                members.push_back(u);
            }
        groups.push_back(std::move(members));
    }
    return finish_partition(std::move(groups), n);
}

QuotientGraph quotient_graph(const Graph& g, const Partition& p, bool verify) {
    const std::size_t k = p.size();
    QuotientGraph q;
    q.weights.reserve(k);
    for (const auto& c : p.classes) q.weights.push_back(c.size());

    std::vector<Edge> edges;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (g.adjacent(p.classes[a][0], p.classes[b][0]))
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    q.graph = build_graph(k, edges);

    if (verify) {
        std::size_t total = 0;
        for (std::size_t a = 0; a < k; ++a) {
            total += p.classes[a].size();
            if (!is_clique(g, p.classes[a]))
                throw InternalError("partition class " + std::to_string(a) + " is not a clique");
            for (std::size_t b = a + 1; b < k; ++b) {
                const bool joined = q.graph.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b));
                for (Vertex x : p.classes[a])
                    for (Vertex y : p.classes[b])
                        if (g.adjacent(x, y) != joined)
                            throw InternalError("classes " + std::to_string(a) + " and " +
                                                std::to_string(b) + " are partially joined");
            }
        }
        if (total != g.n()) throw InternalError("partition classes do not cover V");
    }
    return q;
}

std::vector<std::size_t> max_weight_quotient_clique(const QuotientGraph& q, std::size_t cap) {
    if (q.size() > cap)
        throw LimitExceeded("quotient has " + std::to_string(q.size()) +
                            " closed-neighborhood classes, above the cap of " + std::to_string(cap));
    if (q.size() == 0) return {};
    return WeightedCliqueSearch(q).run();
}

VertexSet find_max_clique(const Graph& g, const MaxCliqueOptions& options) {
    if (g.n() == 0) throw InputError("find_max_clique needs at least one vertex");
    Partition p = closed_neighborhood_partition(g);
    if (options.verify) {
        Partition reference = closed_neighborhood_partition_pairwise(g);
        if (reference.classes != p.classes)
            throw InternalError("hashed and pairwise closed-neighborhood partitions differ");
    }
    QuotientGraph q = quotient_graph(g, p, options.verify);
    std::vector<Vertex> members;
    for (std::size_t c : max_weight_quotient_clique(q, options.quotient_cap))
        members.insert(members.end(), p.classes[c].begin(), p.classes[c].end());
    return VertexSet(std::move(members));
}

} // namespace rigclique
