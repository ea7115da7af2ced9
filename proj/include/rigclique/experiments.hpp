#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigclique/closed_neighborhood.hpp"
#include "rigclique/oracle.hpp"
#include "rigclique/rig.hpp"

namespace rigclique {

enum class ExperimentKind { single_label, concentration, sparse, reconstruction };

const char* to_string(ExperimentKind kind) noexcept;
/// Accepts "single_label", "concentration", "sparse", "reconstruction" (or
/// with '-' for '_'). Throws InputError otherwise.
ExperimentKind parse_experiment_kind(std::string_view name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::single_label;
    RigParams params;
    std::size_t trials = 1;
    Seed seed;
    int jobs = 1;
    std::uint64_t budget = kDefaultNodeBudget; ///< oracle node / cycle step budget per trial
};

/// Named parameter presets shared by docs, tests and the acceptance suite.
struct Preset {
    const char* name;
    RigParams params;
};
Preset preset_sl100();     ///< n=100, m=10, p=0.15 (mp^2 = 0.225)
Preset preset_conc10k();   ///< n=10^4, m=100, p=0.05 (mp^2 = 0.25)
Preset preset_sparse500(); ///< n=500, m=22, p=0.001

/// Concentration thresholds for one parameter set.
double label_size_bound(const RigParams& params);   ///< 3 sqrt(np ln n)
double vertex_labels_bound(const RigParams& params); ///< mp + 3 sqrt(mp ln m) + ln n

/// Measurements of one trial. Only the fields of the configured kind are set.
struct TrialRecord {
    std::size_t trial = 0;
    std::optional<std::string> error;

    // single_label
    std::size_t omega = 0;
    std::size_t max_label_size = 0;
    bool equal = false;
    bool contained = false;
    double ratio = 0.0; ///< omega / np

    // concentration (max_label_size shared with single_label)
    std::size_t min_label_size = 0;
    double max_label_deviation = 0.0;
    std::size_t max_vertex_labels = 0;
    bool labels_within_bound = false;
    bool vertices_within_bound = false;

    // sparse
    std::size_t graph_edges = 0;
    std::size_t incidence_edges = 0;
    CycleStatus cycle_status = CycleStatus::none;
    bool witness_valid = false;
    bool chordal = false;

    // reconstruction
    bool success = false;
    bool valid = false;
    bool equivalent = false;
    std::size_t labels_used = 0;
    std::size_t candidates = 0;
};

struct TrialStats {
    ExperimentKind kind = ExperimentKind::single_label;
    RigParams params;
    Seed seed;
    std::vector<TrialRecord> records; ///< ordered by trial index
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    std::vector<std::pair<std::string, double>> values; ///< fractions and means

    std::uint64_t count(std::string_view name) const;
    double value(std::string_view name) const;
};

/// Runs one trial: samples the representation of (seed, trial) and measures it.
TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial);

/// Runs all trials on an OpenMP pool of cfg.jobs threads. Output does not
/// depend on the thread count.
TrialStats run_experiment(const ExperimentConfig& cfg);

/// Reference path: trials in index order on the calling thread.
TrialStats run_experiment_serial(const ExperimentConfig& cfg);

/// Recomputes counts and values from the records.
void summarize(TrialStats& stats);

/// CSV: fixed header per kind, one row per trial, then "# summary,<name>,<value>" lines.
std::string to_csv(const TrialStats& stats);

/// Column names for a kind, in output order.
std::vector<std::string> csv_columns(ExperimentKind kind);

} // namespace rigclique
