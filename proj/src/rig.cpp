#include "rigclique/rig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rigclique/error.hpp"

namespace rigclique {

RigParams resolve_params(const RigParamSpec& spec) {
    if (spec.m.has_value() == spec.alpha.has_value())
        throw InputError("give exactly one of m and alpha");
    if (spec.p.has_value() == spec.mp2.has_value())
        throw InputError("give exactly one of p and mp2");

    RigParams out;
    out.n = spec.n;
    if (spec.m) {
        out.m = *spec.m;
    } else {
        const double alpha = *spec.alpha;
        if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InputError("alpha must be positive");
        // pow can land a hair above an exact integer (10000^0.5); snap before ceil.
        const double raw = std::pow(static_cast<double>(spec.n), alpha);
        const double nearest = std::round(raw);
        const double value = std::abs(raw - nearest) <= 1e-9 * std::max(1.0, raw) ? nearest
                                                                                   : std::ceil(raw);
        out.m = static_cast<std::size_t>(value);
        out.alpha = alpha;
    }

    if (spec.p) {
        out.p = *spec.p;
    } else {
        const double mp2 = *spec.mp2;
        if (!(mp2 >= 0.0) || !std::isfinite(mp2)) throw InputError("mp2 must be non-negative");
        if (out.m == 0) throw InputError("mp2 cannot be resolved with m = 0");
        out.p = std::sqrt(mp2 / static_cast<double>(out.m));
        out.mp2 = mp2;
    }
    if (!(out.p >= 0.0 && out.p <= 1.0))
        throw InputError("resolved p = " + std::to_string(out.p) + " is outside [0, 1]");
    return out;
}

LabelRepresentation sample_label_representation(const RigParams& params, Seed seed,
                                                std::uint64_t trial) {
    TrialStream stream(seed, trial);
    std::vector<std::vector<Label>> sets(params.n);
    for (auto& s : sets)
        for (Label i = 0; i < params.m; ++i)
            if (stream.bernoulli(params.p)) s.push_back(i);
    return LabelRepresentation(params.m, std::move(sets));
}

LabelRepresentation sample_label_representation_skip(const RigParams& params, Seed seed,
                                                     std::uint64_t trial) {
    std::vector<std::vector<Label>> sets(params.n);
    const std::uint64_t total = static_cast<std::uint64_t>(params.n) * params.m;
    if (params.p >= 1.0) {
        for (auto& s : sets)
            for (Label i = 0; i < params.m; ++i) s.push_back(i);
    } else if (params.p > 0.0 && total > 0) {
        TrialStream stream(seed, trial);
        const double log_q = std::log1p(-params.p);
        std::uint64_t k = 0;
        while (true) {
            // Number of failures before the next success: floor(log(U) / log(1 - p)).
            const double u = 1.0 - stream.uniform(); // (0, 1]
            const double gap = std::floor(std::log(u) / log_q);
            if (gap >= static_cast<double>(total - k)) break;
            k += static_cast<std::uint64_t>(gap);
            sets[k / params.m].push_back(static_cast<Label>(k % params.m));
            if (++k >= total) break;
        }
    }
    return LabelRepresentation(params.m, std::move(sets));
}

VertexSet max_clique_from_labels(const LabelRepresentation& rep) {
    std::size_t best = 0;
    std::optional<Label> best_label;
    for (Label i = 0; i < rep.m(); ++i)
        if (rep.members_of(i).size() > best) {
            best = rep.members_of(i).size();
            best_label = i;
        }
    if (!best_label) return {};
    auto members = rep.members_of(*best_label);
    return VertexSet(std::vector<Vertex>(members.begin(), members.end()));
}

} // namespace rigclique
