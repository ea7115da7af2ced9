#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rigclique/graph.hpp"
#include "rigclique/labels.hpp"
#include "rigclique/oracle.hpp"

namespace rigclique {

struct ReconstructionResult {
    std::optional<LabelRepresentation> rep; ///< empty on failure
    bool valid = false;                     ///< induced_graph(*rep) == input graph
    std::size_t covered_edges = 0;
    std::size_t candidate_count = 0;
};

/// Smallest maximal-clique size admitted as a label candidate:
/// np - 3 sqrt(np ln n). Returns 0 (window disabled) when that value is <= 2.
double candidate_size_floor(std::size_t n, double p);

/// Best-effort label representation of `g` with at most `m` labels.
///
/// Candidates are the maximal cliques of g no smaller than
/// candidate_size_floor(n, p), taken largest first (ties by vertex set); a
/// candidate becomes a label when it covers a not yet covered edge. A final
/// pass drops labels whose edges are all covered by other labels. Fails
/// (no exception) when the edges cannot be covered with at most m labels.
/// Every returned representation is checked against g.
ReconstructionResult reconstruct_labels(const Graph& g, std::size_t m, double p,
                                        std::uint64_t emission_budget = kDefaultEmissionBudget);

/// True when both representations have the same multiset of label classes
/// {L_i : |L_i| >= 2}. Labels held by at most one vertex induce no edge and
/// are ignored. Throws InputError when the vertex counts differ.
bool reps_equivalent(const LabelRepresentation& a, const LabelRepresentation& b);

} // namespace rigclique
