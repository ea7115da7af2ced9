#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rigclique/graph.hpp"

namespace rigclique {

/// Per-vertex label sets S_v together with the inverse per-label vertex sets
/// L_i. Equivalent to the bipartite vertex/label incidence graph.
class LabelRepresentation {
public:
    LabelRepresentation() = default;

    /// `label_sets[v]` lists the labels of vertex v. Lists are sorted on
    /// construction; throws InputError on a label >= m or a repeated label.
    LabelRepresentation(std::size_t m, std::vector<std::vector<Label>> label_sets);

    /// Builds from per-label vertex sets instead (L_i form).
    static LabelRepresentation from_label_members(std::size_t n,
                                                  std::vector<std::vector<Vertex>> members);

    std::size_t n() const noexcept { return label_sets_.size(); }
    std::size_t m() const noexcept { return members_.size(); }

    std::span<const Label> labels_of(Vertex v) const noexcept { return label_sets_[v]; }
    std::span<const Vertex> members_of(Label i) const noexcept { return members_[i]; }

    /// Number of vertex/label incidences (edges of the bipartite graph).
    std::size_t incidence_count() const noexcept;

    friend bool operator==(const LabelRepresentation& a, const LabelRepresentation& b) {
        return a.label_sets_ == b.label_sets_ && a.members_.size() == b.members_.size();
    }

private:
    std::vector<std::vector<Label>> label_sets_;
    std::vector<std::vector<Vertex>> members_;
};

/// Intersection graph: u ~ v iff S_u and S_v share a label. OpenMP-parallel
/// over vertices; each row is the union of the L_i bitsets of its labels.
Graph induced_graph(const LabelRepresentation& rep);

/// Reference implementation: tests every pair (u, v) for a common label.
Graph induced_graph_serial(const LabelRepresentation& rep);

} // namespace rigclique
