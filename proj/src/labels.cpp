#include "rigclique/labels.hpp"

#include <algorithm>
#include <string>

#include "rigclique/error.hpp"

namespace rigclique {

LabelRepresentation::LabelRepresentation(std::size_t m, std::vector<std::vector<Label>> label_sets)
    : label_sets_(std::move(label_sets)), members_(m) {
    for (Vertex v = 0; v < label_sets_.size(); ++v) {
        auto& s = label_sets_[v];
        std::sort(s.begin(), s.end());
        if (auto dup = std::adjacent_find(s.begin(), s.end()); dup != s.end())
            throw InputError("vertex " + std::to_string(v) + " lists label " +
                             std::to_string(*dup) + " twice");
        if (!s.empty() && s.back() >= m)
            throw InputError("vertex " + std::to_string(v) + ": label " + std::to_string(s.back()) +
                             " out of range for m = " + std::to_string(m));
        for (Label i : s) members_[i].push_back(v);
    }
}

LabelRepresentation LabelRepresentation::from_label_members(std::size_t n,
                                                            std::vector<std::vector<Vertex>> members) {
    std::vector<std::vector<Label>> sets(n);
    for (Label i = 0; i < members.size(); ++i)
        for (Vertex v : members[i]) {
            if (v >= n)
                throw InputError("label " + std::to_string(i) + ": vertex " + std::to_string(v) +
                                 " out of range for n = " + std::to_string(n));
            sets[v].push_back(i);
        }
    return LabelRepresentation(members.size(), std::move(sets));
}

std::size_t LabelRepresentation::incidence_count() const noexcept {
    std::size_t total = 0;
    for (const auto& s : label_sets_) total += s.size();
    return total;
}

Graph induced_graph(const LabelRepresentation& rep) {
    const std::size_t n = rep.n();
    const std::size_t m = rep.m();
    std::vector<Bitset> label_rows(m, Bitset(n));
    for (Label i = 0; i < m; ++i)
        for (Vertex v : rep.members_of(i)) label_rows[i].set(v);

    std::vector<Bitset> rows(n, Bitset(n));
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t u = 0; u < count; ++u) {
        auto& row = rows[static_cast<std::size_t>(u)];
        for (Label i : rep.labels_of(static_cast<Vertex>(u))) row |= label_rows[i];
        row.reset(static_cast<std::size_t>(u));
    }
    return graph_from_rows(std::move(rows));
}

Graph induced_graph_serial(const LabelRepresentation& rep) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < rep.n(); ++u)
        for (Vertex v = u + 1; v < rep.n(); ++v) {
            auto a = rep.labels_of(u);
            auto b = rep.labels_of(v);
            auto ia = a.begin();
            auto ib = b.begin();
            while (ia != a.end() && ib != b.end()) {
                if (*ia == *ib) {
                    edges.emplace_back(u, v);
                    break;
                }
                if (*ia < *ib) ++ia;
                else ++ib;
            }
        }
    return build_graph(rep.n(), edges);
}

} // namespace rigclique
