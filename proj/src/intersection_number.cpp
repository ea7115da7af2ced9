#include <algorithm>
#include <string>
#include <unordered_map>

#include "rigclique/error.hpp"
#include "rigclique/oracle.hpp"

namespace rigclique {

namespace {

/// Edge-cover search over maximal cliques; any cover can be swapped for one of
/// the same size made of maximal cliques, so nothing else needs considering.
class CoverSearch {
public:
    CoverSearch(std::vector<std::uint32_t> clique_masks, std::size_t edge_count)
        : masks_(std::move(clique_masks)), edge_count_(edge_count) {}

    bool coverable(std::uint32_t uncovered, std::size_t k) {
        if (uncovered == 0) return true;
        if (k == 0) return false;
        auto it = failed_.find(uncovered);
        if (it != failed_.end() && it->second >= k) return false;
        const std::uint32_t lowest = uncovered & (~uncovered + 1);
        for (std::uint32_t mask : masks_)
            if ((mask & lowest) && coverable(uncovered & ~mask, k - 1)) return true;
        auto& known = failed_[uncovered];
        known = std::max(known, k);
        return false;
    }

    std::size_t minimum() {
        const std::uint32_t all = edge_count_ == 32 ? ~0U : (1U << edge_count_) - 1;
        for (std::size_t k = 0;; ++k)
            if (coverable(all, k)) return k;
    }

private:
    std::vector<std::uint32_t> masks_;
    std::size_t edge_count_;
    std::unordered_map<std::uint32_t, std::size_t> failed_;
};

} // namespace

std::size_t exact_intersection_number(const Graph& g) {
    const std::size_t n = g.n();
    if (n > kIntersectionNumberMaxN)
        throw LimitExceeded("exact intersection number is limited to n <= " +
                            std::to_string(kIntersectionNumberMaxN) + ", got n = " + std::to_string(n));
    if (g.edge_count() == 0) return 0;

    std::vector<std::vector<int>> edge_bit(n, std::vector<int>(n, -1));
    int next = 0;
    for (auto [u, v] : g.edges()) edge_bit[u][v] = edge_bit[v][u] = next++;

    std::vector<std::uint32_t> masks;
    enumerate_maximal_cliques(g, [&](const VertexSet& c) {
        std::uint32_t mask = 0;
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b) mask |= 1U << edge_bit[c[a]][c[b]];
        if (mask) masks.push_back(mask);
    });
    return CoverSearch(std::move(masks), g.edge_count()).minimum();
}

} // namespace rigclique
