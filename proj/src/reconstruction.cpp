#include "rigclique/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "rigclique/error.hpp"

namespace rigclique {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

template <typename F>
void for_each_pair(const VertexSet& c, F&& f) {
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) f(edge_key(c[a], c[b]));
}

std::vector<std::vector<Vertex>> effective_classes(const LabelRepresentation& rep) {
    std::vector<std::vector<Vertex>> out;
    for (Label i = 0; i < rep.m(); ++i) {
        auto members = rep.members_of(i);
        if (members.size() >= 2) out.emplace_back(members.begin(), members.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

double candidate_size_floor(std::size_t n, double p) {
    if (n <= 1) return 0.0;
    const double np = static_cast<double>(n) * p;
    const double floor = np - 3.0 * std::sqrt(np * std::log(static_cast<double>(n)));
    return floor <= 2.0 ? 0.0 : floor;
}

ReconstructionResult reconstruct_labels(const Graph& g, std::size_t m, double p,
                                        std::uint64_t emission_budget) {
    if (m == 0) throw InputError("reconstruction needs m >= 1");
    if (!(p > 0.0 && p < 1.0)) throw InputError("reconstruction needs 0 < p < 1");

    const double floor = candidate_size_floor(g.n(), p);
    std::vector<VertexSet> candidates;
    enumerate_maximal_cliques(
        g,
        [&](const VertexSet& c) {
            if (c.size() >= 2 && static_cast<double>(c.size()) >= floor) candidates.push_back(c);
        },
        emission_budget);
    std::sort(candidates.begin(), candidates.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });

    ReconstructionResult result;
    result.candidate_count = candidates.size();

    std::unordered_map<std::uint64_t, std::uint32_t> cover;
    cover.reserve(g.edge_count() * 2);
    std::vector<const VertexSet*> chosen;
    for (const auto& c : candidates) {
        if (cover.size() == g.edge_count()) break;
        bool fresh = false;
        for_each_pair(c, [&](std::uint64_t e) { fresh = fresh || !cover.contains(e); });
        if (!fresh) continue;
        chosen.push_back(&c);
        for_each_pair(c, [&](std::uint64_t e) { ++cover[e]; });
    }
    result.covered_edges = cover.size();

    // Drop labels made redundant by later choices, smallest first.
    for (std::size_t k = chosen.size(); k-- > 0;) {
        bool redundant = true;
        for_each_pair(*chosen[k], [&](std::uint64_t e) { redundant = redundant && cover[e] >= 2; });
        if (!redundant) continue;
        for_each_pair(*chosen[k], [&](std::uint64_t e) { --cover[e]; });
        chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k));
    }

    if (result.covered_edges != g.edge_count() || chosen.size() > m) return result;

    std::vector<std::vector<Vertex>> members(m);
    for (std::size_t i = 0; i < chosen.size(); ++i) members[i] = chosen[i]->ids();
    auto rep = LabelRepresentation::from_label_members(g.n(), std::move(members));
    result.valid = induced_graph(rep) == g;
    if (!result.valid) throw InternalError("reconstructed labels do not induce the input graph");
    result.rep = std::move(rep);
    return result;
}

bool reps_equivalent(const LabelRepresentation& a, const LabelRepresentation& b) {
    if (a.n() != b.n())
        throw InputError("representations have different vertex counts (" + std::to_string(a.n()) +
                         " vs " + std::to_string(b.n()) + ")");
    return effective_classes(a) == effective_classes(b);
}

} // namespace rigclique
