// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. `acceptance --calibrate` reruns the SL-100 calibration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "cli.hpp"
#include "graph_enumeration.hpp"
#include "rigclique/closed_neighborhood.hpp"
#include "rigclique/codec.hpp"
#include "rigclique/experiments.hpp"
#include "rigclique/oracle.hpp"

using namespace rigclique;
using namespace rigclique::testing;

namespace {

// Seeds are fixed here so every run of the suite sees the same trials.
constexpr std::uint64_t kCalibrationSeed = 20240501;
constexpr std::uint64_t kAcceptanceSeed = 20240502;

// Criterion tolerances.
constexpr std::size_t kOracleGraphs = 500;
constexpr std::size_t kOracleBruteMaxN = 12;
constexpr double kOracleSeconds = 60.0;
constexpr std::size_t kPartitionGraphs = 200;
constexpr std::size_t kConnectedGraphsOnEight = 11'117;
constexpr std::size_t kConcentrationTrials = 50;
constexpr std::size_t kConcentrationRequired = 49;
constexpr std::size_t kSingleLabelTrials = 200;
constexpr double kSingleLabelFraction = 0.85;
constexpr std::size_t kSparseTrials = 50;
constexpr std::size_t kReconstructionTrials = 100;
constexpr double kEquivalentFraction = 0.70;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

TrialStats run(ExperimentKind kind, const Preset& preset, std::size_t trials, std::uint64_t seed, int jobs = 1) {
    ExperimentConfig cfg;
    cfg.kind = kind;
    cfg.params = preset.params;
    cfg.trials = trials;
    cfg.seed = Seed{seed};
    cfg.jobs = jobs;
    return run_experiment(cfg);
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(kAcceptanceSeed);
    const double probs[] = {0.1, 0.3, 0.5, 0.8};
    std::size_t agree = 0, brute_checked = 0, brute_agree = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < kOracleGraphs; ++t) {
        const std::size_t n = 1 + rng() % 30;
        const Graph g = random_graph(n, probs[t % 4], rng);
        const VertexSet exact = exact_max_clique(g);
        agree += find_max_clique(g).size() == exact.size();
        if (n <= kOracleBruteMaxN) {
            ++brute_checked;
            brute_agree += brute_max_clique(g).size() == exact.size();
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {agree == kOracleGraphs && brute_agree == brute_checked && secs < kOracleSeconds,
            fmt("%zu/%zu agree with the oracle, %zu/%zu oracle runs agree with subset enumeration, %.2fs",
                agree, kOracleGraphs, brute_agree, brute_checked, secs)};
}

bool same_closed_neighborhood(const Graph& g, Vertex u, Vertex v) {
    if (u == v) return true;
    if (!g.adjacent(u, v)) return false;
    for (Vertex w = 0; w < g.n(); ++w)
        if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) return false;
    return true;
}

Outcome partition_properties() {
    std::mt19937_64 rng(kAcceptanceSeed + 1);
    std::size_t ok = 0;
    for (std::size_t t = 0; t < kPartitionGraphs; ++t) {
        const std::size_t n = 1 + rng() % 50;
        // Half the graphs come from label representations, which carry many twins.
        const Graph g = t % 2 ? random_graph(n, 0.05 + 0.1 * static_cast<double>(rng() % 9), rng)
                              : induced_graph(random_rep(n, 1 + rng() % 12, 0.2, rng));
        const Partition p = closed_neighborhood_partition(g);
        bool good = p.class_of.size() == n;
        for (Vertex u = 0; good && u < n; ++u)
            for (Vertex v = 0; good && v < n; ++v)
                good = (p.class_of[u] == p.class_of[v]) == same_closed_neighborhood(g, u, v);
        for (std::size_t c = 0; good && c < p.size(); ++c) {
            good = is_clique(g, p.classes[c]);
            for (Vertex v : p.classes[c]) good = good && p.class_of[v] == c;
        }
        for (std::size_t a = 0; good && a < p.size(); ++a)
            for (std::size_t b = a + 1; good && b < p.size(); ++b) {
                std::size_t joined = 0;
                for (Vertex u : p.classes[a])
                    for (Vertex v : p.classes[b]) joined += g.adjacent(u, v);
                good = joined == 0 || joined == p.classes[a].size() * p.classes[b].size();
            }
        ok += good;
    }
    return {ok == kPartitionGraphs, fmt("%zu/%zu graphs valid", ok, kPartitionGraphs)};
}

Outcome structural_bound() {
    const auto all = nonisomorphic_graphs(8);
    std::size_t connected8 = 0, connected_ok = 0, total = 0, nonisolated_ok = 0, literal_misses = 0;
    std::size_t isolated_free = 0, isolated_free_ok = 0;
    for (int n = 1; n <= 8; ++n)
        for (const SmallGraph& s : all[static_cast<std::size_t>(n)]) {
            const Graph g = s.to_graph();
            const Partition p = closed_neighborhood_partition(g);
            const std::size_t iota = exact_intersection_number(g);
            const double cap = std::min(std::ldexp(1.0, static_cast<int>(iota)), static_cast<double>(n));
            const bool literal = static_cast<double>(p.size()) <= cap;
            std::size_t classes_with_edges = 0;
            bool has_isolated = false;
            for (const auto& c : p.classes) {
                if (g.degree(c[0]) > 0) ++classes_with_edges;
                else has_isolated = true;
            }
            ++total;
            nonisolated_ok += static_cast<double>(classes_with_edges) <= cap;
            literal_misses += !literal;
            if (!has_isolated) {
                ++isolated_free;
                isolated_free_ok += literal;
            }
            if (n == 8 && s.connected()) {
                ++connected8;
                connected_ok += literal;
            }
        }
    const bool pass = connected8 == kConnectedGraphsOnEight && connected_ok == connected8 &&
                      isolated_free_ok == isolated_free && nonisolated_ok == total;
    return {pass, fmt("classes <= min(2^iota, n) on %zu/%zu connected 8-vertex graphs and %zu/%zu "
                      "isolated-vertex-free graphs; non-isolated classes within bound on %zu/%zu graphs "
                      "with n <= 8; %zu graphs with isolated vertices exceed the literal form",
                      connected_ok, connected8, isolated_free_ok, isolated_free, nonisolated_ok, total,
                      literal_misses)};
}

Outcome concentration(const char* flag) {
    const auto stats = run(ExperimentKind::concentration, preset_conc10k(), kConcentrationTrials, kAcceptanceSeed, 4);
    const auto held = stats.count(flag);
    return {held >= kConcentrationRequired && stats.count("errors") == 0,
            fmt("held in %llu/%zu trials, bound %.1f, %llu errors",
                static_cast<unsigned long long>(held), kConcentrationTrials,
                std::string(flag) == "labels_within_bound" ? label_size_bound(preset_conc10k().params)
                                                           : vertex_labels_bound(preset_conc10k().params),
                static_cast<unsigned long long>(stats.count("errors")))};
}

Outcome single_label(std::uint64_t seed, std::size_t trials) {
    const auto stats = run(ExperimentKind::single_label, preset_sl100(), trials, seed, 4);
    const auto need = static_cast<std::uint64_t>(std::ceil(kSingleLabelFraction * static_cast<double>(trials)));
    const auto exceeds = stats.count("label_exceeds_omega");
    const auto equal = stats.count("equal");
    const auto contained = stats.count("contained");
    const auto errors = stats.count("errors");
    return {exceeds == 0 && errors == 0 && equal >= need && contained >= need,
            fmt("(a) label larger than omega in %llu trials, (b) omega = max |L_i| in %llu/%zu, "
                "(c) oracle clique inside one label in %llu/%zu, need %llu; %llu errors; seed %llu",
                static_cast<unsigned long long>(exceeds), static_cast<unsigned long long>(equal), trials,
                static_cast<unsigned long long>(contained), trials, static_cast<unsigned long long>(need),
                static_cast<unsigned long long>(errors), static_cast<unsigned long long>(seed))};
}

Outcome sparse_regime() {
    const auto stats = run(ExperimentKind::sparse, preset_sparse500(), kSparseTrials, kAcceptanceSeed, 4);
    const auto none = stats.count("cycle_none");
    const auto chordal = stats.count("chordal");
    const auto invalid = stats.count("invalid_witnesses");
    return {none == kSparseTrials && chordal == kSparseTrials && invalid == 0 && stats.count("errors") == 0,
            fmt("no distinct-label cycle in %llu/%zu, chordal in %llu/%zu, %llu invalid witnesses",
                static_cast<unsigned long long>(none), kSparseTrials, static_cast<unsigned long long>(chordal),
                kSparseTrials, static_cast<unsigned long long>(invalid))};
}

Outcome reconstruction() {
    const auto stats = run(ExperimentKind::reconstruction, preset_sl100(), kReconstructionTrials, kAcceptanceSeed, 4);
    const auto need = static_cast<std::uint64_t>(std::ceil(kEquivalentFraction * kReconstructionTrials));
    const auto invalid = stats.count("invalid");
    const auto equivalent = stats.count("equivalent");
    return {invalid == 0 && equivalent >= need && stats.count("errors") == 0,
            fmt("%llu successes, %llu invalid, equivalent to the truth in %llu/%zu (need %llu)",
                static_cast<unsigned long long>(stats.count("success")), static_cast<unsigned long long>(invalid),
                static_cast<unsigned long long>(equivalent), kReconstructionTrials,
                static_cast<unsigned long long>(need))};
}

Outcome reproducibility() {
    std::size_t identical = 0, compared = 0;
    for (auto kind : {ExperimentKind::single_label, ExperimentKind::concentration, ExperimentKind::sparse,
                      ExperimentKind::reconstruction}) {
        const Preset preset = kind == ExperimentKind::sparse          ? preset_sparse500()
                              : kind == ExperimentKind::concentration ? preset_conc10k()
                                                                      : preset_sl100();
        const std::size_t trials = kind == ExperimentKind::concentration ? 8 : 40;
        const std::string serial = to_csv(run(kind, preset, trials, kAcceptanceSeed, 1));
        for (int jobs : {1, 3, 4}) {
            ++compared;
            identical += to_csv(run(kind, preset, trials, kAcceptanceSeed, jobs)) == serial;
        }
    }

    // The same through the command line, one file per run.
    const auto dir = std::filesystem::temp_directory_path() / "rigclique_acceptance";
    std::filesystem::create_directories(dir);
    std::vector<std::string> files;
    for (const char* jobs : {"1", "4", "4"}) {
        const auto path = (dir / ("run" + std::to_string(files.size()) + ".csv")).string();
        std::ostringstream out, err;
        cli::dispatch({"rigclique", "experiment", "single_label", "--n", "100", "--m", "10", "--p", "0.15",
                       "--trials", "30", "--seed", std::to_string(kAcceptanceSeed), "--jobs", jobs, "--csv", path},
                      out, err);
        files.push_back(read_text_file(path));
    }
    std::filesystem::remove_all(dir);
    compared += 2;
    identical += (files[1] == files[0]) + (files[2] == files[0]);
    return {identical == compared && !files[0].empty(),
            fmt("%zu/%zu reruns byte-identical across jobs = 1, 3, 4 and the command line", identical, compared)};
}

int calibrate() {
    // Pre-registration run for the SL-100 proxy thresholds.
    constexpr std::size_t trials = 1000;
    const auto stats = run(ExperimentKind::single_label, preset_sl100(), trials, kCalibrationSeed, 4);
    std::printf("calibration seed %llu, %zu trials: equal %.3f, contained %.3f, label above omega %llu\n",
                static_cast<unsigned long long>(kCalibrationSeed), trials, stats.value("equal_fraction"),
                stats.value("contained_fraction"), static_cast<unsigned long long>(stats.count("label_exceeds_omega")));
    const auto rec = run(ExperimentKind::reconstruction, preset_sl100(), trials, kCalibrationSeed, 4);
    std::printf("calibration reconstruction: success %.3f, equivalent %.3f, invalid %llu\n",
                rec.value("success_fraction"), rec.value("equivalent_fraction"),
                static_cast<unsigned long long>(rec.count("invalid")));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1 && std::string(argv[1]) == "--calibrate") return calibrate();

    report(1, "fast solver agrees with the exact oracle", oracle_equivalence);
    report(2, "closed-neighborhood partition properties", partition_properties);
    report(3, "class count bounded by min(2^iota, n)", structural_bound);
    report(4, "label sizes concentrate at CONC-10K", [] { return concentration("labels_within_bound"); });
    report(5, "labels per vertex concentrate at CONC-10K", [] { return concentration("vertices_within_bound"); });
    report(6, "maximum clique is a single label at SL-100",
           [] { return single_label(kAcceptanceSeed, kSingleLabelTrials); });
    report(7, "sparse regime is cycle-free and chordal at SPARSE-500", sparse_regime);
    report(8, "reconstruction is valid and usually recovers the labels at SL-100", reconstruction);
    report(9, "experiments are reproducible byte for byte", reproducibility);

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
