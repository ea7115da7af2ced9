#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rigclique/graph.hpp"

namespace rigclique {

/// Partition of V into closed-neighborhood classes: u and v share a class
/// iff N(u) + u == N(v) + v. Classes are ordered by their smallest member.
struct Partition {
    std::vector<VertexSet> classes;
    std::vector<std::size_t> class_of;

    std::size_t size() const noexcept { return classes.size(); }
};

/// One node per partition class, weighted by class size. Class pairs are
/// either completely joined or completely disjoint in the source graph.
struct QuotientGraph {
    std::vector<std::uint64_t> weights;
    Graph graph; ///< node i corresponds to partition class i

    std::size_t size() const noexcept { return weights.size(); }
};

/// Quotients with more classes than this are refused by default.
inline constexpr std::size_t kDefaultQuotientCap = 10'000;

/// Groups vertices by a hash of their closed neighborhood (computed in an
/// OpenMP-parallel pass), then splits hash buckets by exact comparison.
Partition closed_neighborhood_partition(const Graph& g);

/// Reference procedure: repeatedly take the smallest unassigned vertex and
/// collect every unassigned vertex with an identical closed neighborhood by
/// direct pairwise comparison. O(n^2 * classes).
Partition closed_neighborhood_partition_pairwise(const Graph& g);

/// Builds the quotient from class representatives. With `verify`, every cross
/// pair of every class pair is rechecked and an InternalError is thrown if the
/// all-or-nothing property fails or a class is not a clique.
QuotientGraph quotient_graph(const Graph& g, const Partition& p, bool verify = false);

/// Maximum total-weight clique of the quotient, as ascending class indices.
/// Ties go to the lexicographically smallest index set. Throws LimitExceeded
/// when the quotient has more than `cap` nodes.
std::vector<std::size_t> max_weight_quotient_clique(const QuotientGraph& q,
                                                    std::size_t cap = kDefaultQuotientCap);

struct MaxCliqueOptions {
    std::size_t quotient_cap = kDefaultQuotientCap;
    bool verify = false; ///< also run the pairwise partition and quotient rechecks
};

/// Maximum clique via the closed-neighborhood quotient: the union of the
/// classes selected by max_weight_quotient_clique. Throws InputError for n == 0.
VertexSet find_max_clique(const Graph& g, const MaxCliqueOptions& options = {});

} // namespace rigclique
