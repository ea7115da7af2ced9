#include "rigclique/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "rigclique/error.hpp"
#include "rigclique/reconstruction.hpp"

namespace rigclique {

namespace {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string csv_safe(std::string text) {
    std::replace(text.begin(), text.end(), ',', ';');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

void measure_single_label(const ExperimentConfig& cfg, const LabelRepresentation& rep,
                          TrialRecord& r) {
    const Graph g = induced_graph(rep);
    const VertexSet best = exact_max_clique(g, cfg.budget);
    r.omega = best.size();
    r.max_label_size = max_clique_from_labels(rep).size();
    r.equal = r.omega == r.max_label_size;
    for (Label i = 0; i < rep.m() && !r.contained; ++i) {
        auto members = rep.members_of(i);
        r.contained = std::includes(members.begin(), members.end(), best.begin(), best.end());
    }
    const double np = static_cast<double>(cfg.params.n) * cfg.params.p;
    r.ratio = np > 0.0 ? static_cast<double>(r.omega) / np : 0.0;
}

void measure_concentration(const ExperimentConfig& cfg, const LabelRepresentation& rep,
                           TrialRecord& r) {
    const double np = static_cast<double>(cfg.params.n) * cfg.params.p;
    const double label_bound = label_size_bound(cfg.params);
    r.labels_within_bound = true;
    r.min_label_size = rep.m() > 0 ? rep.n() : 0;
    for (Label i = 0; i < rep.m(); ++i) {
        const auto size = rep.members_of(i).size();
        const double deviation = std::abs(static_cast<double>(size) - np);
        r.max_label_size = std::max(r.max_label_size, size);
        r.min_label_size = std::min(r.min_label_size, size);
        r.max_label_deviation = std::max(r.max_label_deviation, deviation);
        // The bad event is deviation >= bound; an exact hit of np never counts.
        if (deviation > 0.0 && deviation >= label_bound) r.labels_within_bound = false;
    }
    const double vertex_bound = vertex_labels_bound(cfg.params);
    for (Vertex v = 0; v < rep.n(); ++v)
        r.max_vertex_labels = std::max(r.max_vertex_labels, rep.labels_of(v).size());
    r.vertices_within_bound = static_cast<double>(r.max_vertex_labels) <= vertex_bound;
}

void measure_sparse(const ExperimentConfig& cfg, const LabelRepresentation& rep, TrialRecord& r) {
    const Graph g = induced_graph(rep);
    r.graph_edges = g.edge_count();
    r.incidence_edges = rep.incidence_count();
    const auto search = find_distinct_label_cycle(rep, cfg.budget);
    r.cycle_status = search.status;
    r.witness_valid = search.cycle && is_valid_labeled_cycle(rep, *search.cycle);
    r.chordal = is_chordal(g).chordal;
}

void measure_reconstruction(const ExperimentConfig& cfg, const LabelRepresentation& rep,
                            TrialRecord& r) {
    const Graph g = induced_graph(rep);
    const auto result = reconstruct_labels(g, cfg.params.m, cfg.params.p);
    r.candidates = result.candidate_count;
    r.success = result.rep.has_value();
    if (!r.success) return;
    r.valid = result.valid && induced_graph(*result.rep) == g;
    r.equivalent = reps_equivalent(*result.rep, rep);
    for (Label i = 0; i < result.rep->m(); ++i)
        if (!result.rep->members_of(i).empty()) ++r.labels_used;
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.trials == 0) throw InputError("an experiment needs at least one trial");
    if (cfg.jobs < 1) throw InputError("jobs must be at least 1");
    if (!(cfg.params.p >= 0.0 && cfg.params.p <= 1.0)) throw InputError("p must lie in [0, 1]");
    if (cfg.kind == ExperimentKind::reconstruction && !(cfg.params.p > 0.0 && cfg.params.p < 1.0))
        throw InputError("reconstruction experiments need 0 < p < 1");
    if (cfg.kind == ExperimentKind::reconstruction && cfg.params.m == 0)
        throw InputError("reconstruction experiments need m >= 1");
}

TrialStats make_stats(const ExperimentConfig& cfg, std::vector<TrialRecord> records) {
    TrialStats stats;
    stats.kind = cfg.kind;
    stats.params = cfg.params;
    stats.seed = cfg.seed;
    stats.records = std::move(records);
    summarize(stats);
    return stats;
}

} // namespace

const char* to_string(ExperimentKind kind) noexcept {
    switch (kind) {
    case ExperimentKind::single_label: return "single_label";
    case ExperimentKind::concentration: return "concentration";
    case ExperimentKind::sparse: return "sparse";
    case ExperimentKind::reconstruction: return "reconstruction";
    }
    return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    std::string key(name);
    std::replace(key.begin(), key.end(), '-', '_');
    for (auto kind : {ExperimentKind::single_label, ExperimentKind::concentration,
                      ExperimentKind::sparse, ExperimentKind::reconstruction})
        if (key == to_string(kind)) return kind;
    throw InputError("unknown experiment kind '" + std::string(name) + "'");
}

Preset preset_sl100() { return {"SL-100", {100, 10, 0.15, std::nullopt, std::nullopt}}; }
Preset preset_conc10k() { return {"CONC-10K", {10'000, 100, 0.05, std::nullopt, std::nullopt}}; }
Preset preset_sparse500() { return {"SPARSE-500", {500, 22, 0.001, std::nullopt, std::nullopt}}; }

double label_size_bound(const RigParams& params) {
    const double np = static_cast<double>(params.n) * params.p;
    if (params.n <= 1 || np <= 0.0) return 0.0;
    return 3.0 * std::sqrt(np * std::log(static_cast<double>(params.n)));
}

double vertex_labels_bound(const RigParams& params) {
    const double mp = static_cast<double>(params.m) * params.p;
    const double spread = params.m > 1 && mp > 0.0
                              ? 3.0 * std::sqrt(mp * std::log(static_cast<double>(params.m)))
                              : 0.0;
    const double log_n = params.n > 1 ? std::log(static_cast<double>(params.n)) : 0.0;
    return mp + spread + log_n;
}

std::uint64_t TrialStats::count(std::string_view name) const {
    for (const auto& [key, value] : counts)
        if (key == name) return value;
    throw InputError("no count named '" + std::string(name) + "'");
}

double TrialStats::value(std::string_view name) const {
    for (const auto& [key, v] : values)
        if (key == name) return v;
    throw InputError("no value named '" + std::string(name) + "'");
}

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial) {
    TrialRecord r;
    r.trial = trial;
    try {
        const auto rep = sample_label_representation(cfg.params, cfg.seed, trial);
        switch (cfg.kind) {
        case ExperimentKind::single_label: measure_single_label(cfg, rep, r); break;
        case ExperimentKind::concentration: measure_concentration(cfg, rep, r); break;
        case ExperimentKind::sparse: measure_sparse(cfg, rep, r); break;
        case ExperimentKind::reconstruction: measure_reconstruction(cfg, rep, r); break;
        }
    } catch (const std::exception& e) {
        // A refusal (budget, cap) is data about the trial, not a reason to abort the run.
        TrialRecord failed;
        failed.trial = trial;
        failed.error = e.what();
        return failed;
    }
    return r;
}

TrialStats run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<TrialRecord> records(cfg.trials);
    const auto count = static_cast<std::ptrdiff_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.jobs)
    for (std::ptrdiff_t t = 0; t < count; ++t)
        records[static_cast<std::size_t>(t)] = run_trial(cfg, static_cast<std::size_t>(t));
    return make_stats(cfg, std::move(records));
}

TrialStats run_experiment_serial(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<TrialRecord> records;
    records.reserve(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) records.push_back(run_trial(cfg, t));
    return make_stats(cfg, std::move(records));
}

void summarize(TrialStats& stats) {
    stats.counts.clear();
    stats.values.clear();
    std::uint64_t errors = 0;
    for (const auto& r : stats.records) errors += r.error.has_value();
    const auto trials = static_cast<std::uint64_t>(stats.records.size());
    stats.counts.emplace_back("trials", trials);
    stats.counts.emplace_back("errors", errors);

    auto tally = [&](const char* name, auto predicate) {
        std::uint64_t c = 0;
        for (const auto& r : stats.records)
            if (!r.error && predicate(r)) ++c;
        stats.counts.emplace_back(name, c);
        return c;
    };
    auto fraction = [&](const std::string& name, std::uint64_t c) {
        stats.values.emplace_back(name + "_fraction",
                                  trials ? static_cast<double>(c) / static_cast<double>(trials) : 0.0);
    };

    switch (stats.kind) {
    case ExperimentKind::single_label: {
        fraction("equal", tally("equal", [](const auto& r) { return r.equal; }));
        fraction("contained", tally("contained", [](const auto& r) { return r.contained; }));
        tally("label_exceeds_omega", [](const auto& r) { return r.max_label_size > r.omega; });
        double sum = 0.0;
        for (const auto& r : stats.records)
            if (!r.error) sum += r.ratio;
        const auto ok = trials - errors;
        stats.values.emplace_back("mean_ratio", ok ? sum / static_cast<double>(ok) : 0.0);
        break;
    }
    case ExperimentKind::concentration:
        fraction("labels_within_bound",
                 tally("labels_within_bound", [](const auto& r) { return r.labels_within_bound; }));
        fraction("vertices_within_bound",
                 tally("vertices_within_bound", [](const auto& r) { return r.vertices_within_bound; }));
        stats.values.emplace_back("label_bound", label_size_bound(stats.params));
        stats.values.emplace_back("vertex_bound", vertex_labels_bound(stats.params));
        break;
    case ExperimentKind::sparse:
        fraction("cycle_none",
                 tally("cycle_none", [](const auto& r) { return r.cycle_status == CycleStatus::none; }));
        tally("cycle_found", [](const auto& r) { return r.cycle_status == CycleStatus::found; });
        tally("cycle_unknown", [](const auto& r) { return r.cycle_status == CycleStatus::unknown; });
        tally("invalid_witnesses", [](const auto& r) {
            return r.cycle_status == CycleStatus::found && !r.witness_valid;
        });
        fraction("chordal", tally("chordal", [](const auto& r) { return r.chordal; }));
        break;
    case ExperimentKind::reconstruction:
        fraction("success", tally("success", [](const auto& r) { return r.success; }));
        tally("invalid", [](const auto& r) { return r.success && !r.valid; });
        fraction("equivalent", tally("equivalent", [](const auto& r) { return r.equivalent; }));
        break;
    }
}

std::vector<std::string> csv_columns(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::single_label:
        return {"trial", "omega", "max_label_size", "equal", "contained", "ratio", "error"};
    case ExperimentKind::concentration:
        return {"trial", "max_label_size", "min_label_size", "max_label_deviation",
                "max_vertex_labels", "labels_within_bound", "vertices_within_bound", "error"};
    case ExperimentKind::sparse:
        return {"trial", "graph_edges", "incidence_edges", "cycle_status", "witness_valid",
                "chordal", "error"};
    case ExperimentKind::reconstruction:
        return {"trial", "success", "valid", "equivalent", "labels_used", "candidates", "error"};
    }
    return {};
}

std::string to_csv(const TrialStats& stats) {
    std::ostringstream out;
    const auto columns = csv_columns(stats.kind);
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';

    for (const auto& r : stats.records) {
        out << r.trial << ',';
        if (r.error) {
            for (std::size_t c = 2; c < columns.size(); ++c) out << ',';
            out << csv_safe(*r.error) << '\n';
            continue;
        }
        switch (stats.kind) {
        case ExperimentKind::single_label:
            out << r.omega << ',' << r.max_label_size << ',' << r.equal << ',' << r.contained << ','
                << format_double(r.ratio);
            break;
        case ExperimentKind::concentration:
            out << r.max_label_size << ',' << r.min_label_size << ','
                << format_double(r.max_label_deviation) << ',' << r.max_vertex_labels << ','
                << r.labels_within_bound << ',' << r.vertices_within_bound;
            break;
        case ExperimentKind::sparse:
            out << r.graph_edges << ',' << r.incidence_edges << ',' << to_string(r.cycle_status)
                << ',' << r.witness_valid << ',' << r.chordal;
            break;
        case ExperimentKind::reconstruction:
            out << r.success << ',' << r.valid << ',' << r.equivalent << ',' << r.labels_used << ','
                << r.candidates;
            break;
        }
        out << ",\n";
    }

    out << "# summary,kind," << to_string(stats.kind) << '\n';
    out << "# summary,n," << stats.params.n << '\n';
    out << "# summary,m," << stats.params.m << '\n';
    out << "# summary,p," << format_double(stats.params.p) << '\n';
    out << "# summary,seed," << stats.seed.value << '\n';
    for (const auto& [name, value] : stats.counts) out << "# summary," << name << ',' << value << '\n';
    for (const auto& [name, value] : stats.values)
        out << "# summary," << name << ',' << format_double(value) << '\n';
    return out.str();
}

} // namespace rigclique
