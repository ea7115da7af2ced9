#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rigclique/graph.hpp"
#include "rigclique/labels.hpp"

namespace rigclique {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;
inline constexpr std::uint64_t kDefaultEmissionBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultCycleStepBudget = 10'000'000;
inline constexpr std::size_t kIntersectionNumberMaxN = 8;

/// Exact maximum clique by branch and bound (greedy-coloring bound,
/// degeneracy-ordered branching). Returns the lexicographically smallest
/// maximum clique. Throws InputError for n == 0 and LimitExceeded once more
/// than `node_budget` search nodes have been expanded.
VertexSet exact_max_clique(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Clique number only; same search and budget as exact_max_clique.
std::size_t clique_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Bron-Kerbosch with Tomita pivoting. Each maximal clique is passed to `emit`
/// exactly once, in a deterministic order. Throws LimitExceeded before the
/// (budget + 1)-th emission.
void enumerate_maximal_cliques(const Graph& g, const std::function<void(const VertexSet&)>& emit,
                               std::uint64_t emission_budget = kDefaultEmissionBudget);

/// Collecting form of enumerate_maximal_cliques.
std::vector<VertexSet> maximal_cliques(const Graph& g,
                                       std::uint64_t emission_budget = kDefaultEmissionBudget);

/// Minimum number of cliques covering every edge (0 when edgeless). Exhaustive;
/// throws LimitExceeded when n > kIntersectionNumberMaxN.
std::size_t exact_intersection_number(const Graph& g);

/// Cycle v_1 .. v_k (k >= 3) of the intersection graph whose consecutive edges
/// are witnessed by pairwise distinct labels: labels[j] is shared by
/// vertices[j] and vertices[(j + 1) % k].
struct LabeledCycle {
    std::vector<Vertex> vertices;
    std::vector<Label> labels;
};

bool is_valid_labeled_cycle(const LabelRepresentation& rep, const LabeledCycle& cycle);

enum class CycleStatus { none, found, unknown };

const char* to_string(CycleStatus status) noexcept;

struct CycleSearchResult {
    CycleStatus status = CycleStatus::none;
    std::optional<LabeledCycle> cycle;
};

/// True when the vertex/label incidence graph has no cycle at all.
bool incidence_graph_is_forest(const LabelRepresentation& rep);

/// Looks for a distinct-label cycle, i.e. a simple cycle of length >= 6 in
/// the vertex/label incidence graph B. B is split into biconnected blocks;
/// blocks that are K_{2,t} carry only 4-cycles and are skipped, every other
/// cyclic block is searched by a bounded DFS. Exhausting `step_budget`
/// yields CycleStatus::unknown.
CycleSearchResult find_distinct_label_cycle(const LabelRepresentation& rep,
                                            std::uint64_t step_budget = kDefaultCycleStepBudget);

} // namespace rigclique
