#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "rigclique/labels.hpp"

namespace rigclique {

/// Fully resolved parameters of the random intersection graph model: n
/// vertices, m labels, each (vertex, label) incidence present with
/// probability p. `alpha` / `mp2` record how m / p were derived, if they were.
struct RigParams {
    std::size_t n = 0;
    std::size_t m = 0;
    double p = 0.0;
    std::optional<double> alpha;
    std::optional<double> mp2;
};

/// Partially specified parameters. Exactly one of {m, alpha} and exactly one
/// of {p, mp2} must be set.
struct RigParamSpec {
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::optional<double> alpha;
    std::optional<double> p;
    std::optional<double> mp2;
};

/// Resolves m = ceil(n^alpha) and p = sqrt(mp2 / m). Throws InputError on a
/// conflicting or incomplete spec, or when p falls outside [0, 1].
RigParams resolve_params(const RigParamSpec& spec);

/// Master seed of a Monte Carlo run.
struct Seed {
    std::uint64_t value = 0;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of the independent stream used by trial `trial`:
/// splitmix64(splitmix64(master) ^ splitmix64(~trial)). Depends only on
/// (master, trial), so trials can run in any order or in parallel.
constexpr std::uint64_t trial_stream_seed(Seed seed, std::uint64_t trial) noexcept {
    return splitmix64(splitmix64(seed.value) ^ splitmix64(~trial));
}

/// Per-trial random stream: std::mt19937_64 seeded with trial_stream_seed.
/// Uniforms use the top 53 bits of one engine output, so draws are
/// bit-identical across standard libraries.
class TrialStream {
public:
    TrialStream(Seed seed, std::uint64_t trial) : engine_(trial_stream_seed(seed, trial)) {}

    /// Uniform double in [0, 1).
    double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// One Bernoulli(p) draw consuming exactly one engine output.
    bool bernoulli(double p) noexcept { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

/// Reference sampler: one uniform per (vertex, label) pair, vertex-major and
/// label-ascending. Bit-exact for a given (params, seed, trial).
LabelRepresentation sample_label_representation(const RigParams& params, Seed seed,
                                                std::uint64_t trial);

/// Geometric skip-sampling over the same vertex-major incidence sequence.
/// Same distribution as the reference sampler, different draws; O(n m p)
/// expected instead of O(n m).
LabelRepresentation sample_label_representation_skip(const RigParams& params, Seed seed,
                                                     std::uint64_t trial);

/// Returns L_l for the smallest l maximizing |L_l|; empty when every L_i is
/// empty or m == 0. On an edgeless instance this is the empty set even though
/// the clique number is 1 for n >= 1.
VertexSet max_clique_from_labels(const LabelRepresentation& rep);

} // namespace rigclique
