#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>

#include "rigclique/closed_neighborhood.hpp"
#include "rigclique/codec.hpp"
#include "rigclique/error.hpp"
#include "rigclique/experiments.hpp"
#include "rigclique/oracle.hpp"
#include "rigclique/reconstruction.hpp"
#include "rigclique/rig.hpp"

namespace rigclique::cli {

namespace {

/// Model parameters as given on the command line.
struct ModelFlags {
    std::size_t n = 0;
    std::size_t m = 0;
    double alpha = 0.0;
    double p = 0.0;
    double mp2 = 0.0;
    CLI::Option* m_opt = nullptr;
    CLI::Option* alpha_opt = nullptr;
    CLI::Option* p_opt = nullptr;
    CLI::Option* mp2_opt = nullptr;

    /// `with_n` is false where n comes from an input file.
    void attach(CLI::App& app, bool with_n) {
        if (with_n) app.add_option("--n", n, "vertex count")->required();
        m_opt = app.add_option("--m", m, "label count");
        alpha_opt = app.add_option("--alpha", alpha, "label exponent, m = ceil(n^alpha)");
        p_opt = app.add_option("--p", p, "label probability");
        mp2_opt = app.add_option("--mp2", mp2, "target m p^2, p = sqrt(mp2 / m)");
        m_opt->excludes(alpha_opt);
        p_opt->excludes(mp2_opt);
    }

    RigParams resolve() const {
        RigParamSpec spec;
        spec.n = n;
        if (m_opt->count()) spec.m = m;
        if (alpha_opt->count()) spec.alpha = alpha;
        if (p_opt->count()) spec.p = p;
        if (mp2_opt->count()) spec.mp2 = mp2;
        return resolve_params(spec);
    }
};

void print_vertex_set(std::ostream& out, const VertexSet& s) {
    out << "size " << s.size() << '\n';
    for (std::size_t k = 0; k < s.size(); ++k) out << (k ? " " : "") << s[k];
    out << '\n';
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum cliques via closed-neighborhood quotients and random intersection graphs",
                 args.empty() ? "rigclique" : args.front()};
    app.require_subcommand(1);

    std::string graph_path, labels_path, out_graph, out_labels, csv_path, kind_name;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultNodeBudget;
    std::size_t quotient_cap = kDefaultQuotientCap;
    std::size_t trials = 1;
    int jobs = 1;

    auto* gen = app.add_subcommand("gen", "sample a random intersection graph");
    ModelFlags gen_model;
    gen_model.attach(*gen, true);
    gen->add_option("--seed", seed, "master seed");
    gen->add_option("--out-graph", out_graph, "graph file to write");
    gen->add_option("--out-labels", out_labels, "label file to write (stdout if no output is given)");

    auto* solve = app.add_subcommand("solve", "maximum clique via the closed-neighborhood quotient");
    solve->add_option("--graph", graph_path, "graph file")->required();
    solve->add_option("--quotient-cap", quotient_cap, "largest quotient accepted");

    auto* oracle = app.add_subcommand("oracle", "maximum clique by branch and bound");
    oracle->add_option("--graph", graph_path, "graph file")->required();
    oracle->add_option("--budget", budget, "search node budget");

    auto* from_labels = app.add_subcommand("from-labels", "largest label class of a label file");
    from_labels->add_option("--labels", labels_path, "label file")->required();

    auto* chordal = app.add_subcommand("chordal", "chordality test with elimination order");
    chordal->add_option("--graph", graph_path, "graph file")->required();

    auto* reconstruct = app.add_subcommand("reconstruct", "heuristic label representation of a graph");
    ModelFlags rec_model;
    reconstruct->add_option("--graph", graph_path, "graph file")->required();
    rec_model.attach(*reconstruct, false);
    reconstruct->add_option("--out-labels", out_labels, "label file to write (stdout otherwise)");

    auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiment, CSV output");
    ModelFlags exp_model;
    experiment->add_option("kind", kind_name, "single_label | concentration | sparse | reconstruction")
        ->required();
    exp_model.attach(*experiment, true);
    experiment->add_option("--trials", trials, "number of trials");
    experiment->add_option("--seed", seed, "master seed");
    experiment->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    experiment->add_option("--csv", csv_path, "CSV output file (stdout if absent)");
    experiment->add_option("--budget", budget, "per-trial oracle budget");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const RigParams params = gen_model.resolve();
            const auto rep = sample_label_representation(params, Seed{seed}, 0);
            if (!out_graph.empty()) write_text_file(out_graph, encode_graph(induced_graph(rep)));
            if (!out_labels.empty()) write_text_file(out_labels, encode_labels(rep));
            if (out_graph.empty() && out_labels.empty()) out << encode_labels(rep);
        } else if (solve->parsed()) {
            const Graph g = decode_graph(read_text_file(graph_path));
            MaxCliqueOptions options;
            options.quotient_cap = quotient_cap;
            print_vertex_set(out, find_max_clique(g, options));
        } else if (oracle->parsed()) {
            const Graph g = decode_graph(read_text_file(graph_path));
            print_vertex_set(out, exact_max_clique(g, budget));
        } else if (from_labels->parsed()) {
            const auto rep = decode_labels(read_text_file(labels_path));
            print_vertex_set(out, max_clique_from_labels(rep));
        } else if (chordal->parsed()) {
            const Graph g = decode_graph(read_text_file(graph_path));
            const auto result = is_chordal(g);
            out << "chordal " << (result.chordal ? "true" : "false") << '\n';
            if (result.elimination_order) {
                const auto& order = *result.elimination_order;
                for (std::size_t k = 0; k < order.size(); ++k) out << (k ? " " : "") << order[k];
                out << '\n';
            }
        } else if (reconstruct->parsed()) {
            const Graph g = decode_graph(read_text_file(graph_path));
            rec_model.n = g.n();
            const RigParams params = rec_model.resolve();
            const auto result = reconstruct_labels(g, params.m, params.p);
            out << "status " << (result.rep ? "success" : "failure") << '\n';
            out << "covered_edges " << result.covered_edges << '\n';
            out << "candidates " << result.candidate_count << '\n';
            if (!result.rep) {
                err << "error: no cover of the edges with at most " << params.m << " labels\n";
                return kExitFailure;
            }
            if (!out_labels.empty()) write_text_file(out_labels, encode_labels(*result.rep));
            else out << encode_labels(*result.rep);
        } else if (experiment->parsed()) {
            ExperimentConfig cfg;
            cfg.kind = parse_experiment_kind(kind_name);
            cfg.params = exp_model.resolve();
            cfg.trials = trials;
            cfg.seed = Seed{seed};
            cfg.jobs = jobs;
            cfg.budget = budget;
            const std::string csv = to_csv(run_experiment(cfg));
            if (!csv_path.empty()) write_text_file(csv_path, csv);
            else out << csv;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace rigclique::cli
