#include <algorithm>
#include <string>

#include "rigclique/error.hpp"
#include "rigclique/oracle.hpp"

namespace rigclique {

namespace {

class BronKerbosch {
public:
    BronKerbosch(const Graph& g, const std::function<void(const VertexSet&)>& emit,
                 std::uint64_t budget)
        : g_(g), emit_(emit), budget_(budget) {}

    void run() {
        Bitset candidates(g_.n());
        candidates.set_all();
        expand(candidates, Bitset(g_.n()));
    }

private:
    void expand(Bitset candidates, Bitset excluded) {
        if (candidates.none()) {
            if (excluded.none() && !current_.empty()) report();
            return;
        }
        // Tomita pivot: the vertex of P u X with the most neighbors in P.
        std::size_t pivot = candidates.first();
        std::size_t pivot_hits = 0;
        auto consider = [&](std::size_t u) {
            auto hits = candidates.count_and(g_.row(static_cast<Vertex>(u)));
            if (hits > pivot_hits) {
                pivot = u;
                pivot_hits = hits;
            }
        };
        candidates.for_each(consider);
        excluded.for_each(consider);

        Bitset branch = candidates;
        branch.subtract(g_.row(static_cast<Vertex>(pivot)));
        branch.for_each([&](std::size_t v) {
            const Bitset& nv = g_.row(static_cast<Vertex>(v));
            current_.push_back(static_cast<Vertex>(v));
            expand(candidates & nv, excluded & nv);
            current_.pop_back();
            candidates.reset(v);
            excluded.set(v);
        });
    }

    void report() {
        if (++emitted_ > budget_)
            throw LimitExceeded("maximal-clique enumeration exceeded its budget of " +
                                std::to_string(budget_) + " cliques");
        emit_(VertexSet(current_));
    }

    const Graph& g_;
    const std::function<void(const VertexSet&)>& emit_;
    std::uint64_t budget_;
    std::uint64_t emitted_ = 0;
    std::vector<Vertex> current_;
};

} // namespace

void enumerate_maximal_cliques(const Graph& g, const std::function<void(const VertexSet&)>& emit,
                               std::uint64_t emission_budget) {
    BronKerbosch(g, emit, emission_budget).run();
}

std::vector<VertexSet> maximal_cliques(const Graph& g, std::uint64_t emission_budget) {
    std::vector<VertexSet> out;
    enumerate_maximal_cliques(g, [&](const VertexSet& c) { out.push_back(c); }, emission_budget);
    return out;
}

} // namespace rigclique
