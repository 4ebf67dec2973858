#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "swarmclust/bench.hpp"
#include "swarmclust/density_hier.hpp"
#include "swarmclust/kmeans.hpp"
#include "swarmclust/swarm.hpp"

namespace {

using namespace swarmclust;

struct ClusterOptions {
    std::string dataset_path;
    std::string algo = "kmeans";
    int k = 2;
    std::uint64_t seed = 0;
    std::string metric = "euclidean";
    bool normalize = false;
    bool header = false;
    std::optional<Index> label_column;
    int max_iter = 0;
    double tol = -1.0;
    int particles = 20;
    std::optional<double> c1, c2, chi;
    bool refine = false;
    double eps = 1.0;
    int minpts = 5;
    std::string linkage = "average";
    std::string history_path;
    std::string labels_out;
};

int cmd_cluster(const ClusterOptions& opt) {
    DatasetSpec dspec;
    dspec.name = opt.dataset_path;
    dspec.path = opt.dataset_path;
    dspec.has_header = opt.header;
    dspec.label_column = opt.label_column;
    dspec.normalize = opt.normalize;
    const Dataset data = load_dataset(dspec);

    AlgorithmSpec algo;
    algo.name = opt.algo;
    algo.kind = algorithm_kind_from_string(opt.algo);
    algo.metric = metric_from_string(opt.metric);
    algo.max_iter = opt.max_iter > 0 ? opt.max_iter
                                     : (algo.kind == AlgorithmKind::kmeans ? 300 : 100);
    algo.tol = opt.tol >= 0 ? opt.tol : (algo.kind == AlgorithmKind::kmeans ? 1e-6 : 0.0);
    algo.particles = opt.particles;
    algo.c1 = opt.c1;
    algo.c2 = opt.c2;
    algo.chi = opt.chi;
    algo.refine = opt.refine;
    algo.eps = opt.eps;
    algo.minpts = opt.minpts;
    algo.linkage = linkage_from_string(opt.linkage);

    Partition partition;
    std::optional<Scalar> fitness;
    int iterations = 0;
    switch (algo.kind) {
        case AlgorithmKind::kmeans: {
            KMeansConfig cfg{opt.k, algo.max_iter, algo.tol, algo.metric, opt.seed, std::nullopt};
            KMeansResult res = kmeans_run(data, cfg);
            partition = std::move(res.partition);
            fitness = res.fitness;
            iterations = res.iterations;
            break;
        }
        case AlgorithmKind::simple_pso:
        case AlgorithmKind::canonical_pso: {
            PsoConfig cfg;
            cfg.variant = algo.kind == AlgorithmKind::simple_pso ? PsoVariant::simple
                                                                 : PsoVariant::canonical;
            const Scalar default_c = cfg.variant == PsoVariant::simple ? 2.0 : 2.05;
            cfg.c1 = algo.c1.value_or(default_c);
            cfg.c2 = algo.c2.value_or(default_c);
            cfg.chi = algo.chi;
            cfg.n_particles = algo.particles;
            cfg.max_iter = algo.max_iter;
            cfg.tol = algo.tol;
            cfg.k = opt.k;
            cfg.metric = algo.metric;
            cfg.seed = opt.seed;
            cfg.kmeans_refine = algo.refine;
            PsoResult res = pso_kmeans_run(data, cfg);
            partition = std::move(res.partition);
            fitness = res.fitness;
            iterations = res.iterations;
            if (!opt.history_path.empty()) {
                std::ofstream hist(opt.history_path);
                if (!hist) throw std::runtime_error(opt.history_path + ": cannot open for writing");
                hist << "iteration,global_best_fitness\n";
                char buf[64];
                for (std::size_t i = 0; i < res.history.size(); ++i) {
                    std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i, res.history[i]);
                    hist << buf;
                }
            }
            break;
        }
        case AlgorithmKind::dbscan: {
            partition = dbscan_run(data, DbscanConfig{algo.eps, algo.minpts, algo.metric});
            iterations = 1;
            break;
        }
        case AlgorithmKind::hierarchical: {
            partition = hierarchical_run(data, HierConfig{opt.k, algo.linkage, algo.metric});
            iterations = 1;
            break;
        }
    }

    if (!opt.labels_out.empty()) save_labels_csv(partition, opt.labels_out);

    const IndexReport report = compute_index_report(data, partition, algo.metric);
    std::cout << index_report_to_json(report);
    if (fitness) std::cout << "fitness: " << *fitness << "\n";
    std::cout << "iterations: " << iterations << "\n";
    std::cout << "clusters: " << partition.n_clusters << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustering benchmark toolkit: swarm-optimized k-means, density and "
                 "hierarchical baselines, validity indices, one-way ANOVA"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run a full experiment from a config file");
    std::string config_path;
    std::string output_override;
    run->add_option("config", config_path, "experiment config file")->required();
    run->add_option("--output-dir", output_override, "override the configured output directory");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "run one algorithm on one dataset");
    ClusterOptions copt;
    cluster->add_option("dataset", copt.dataset_path, "CSV dataset")->required();
    cluster->add_option("--algo", copt.algo,
                        "kmeans | simple-pso | canonical-pso | dbscan | hierarchical")
        ->required();
    cluster->add_option("-k,--clusters", copt.k, "number of clusters");
    cluster->add_option("--seed", copt.seed, "random seed");
    cluster->add_option("--metric", copt.metric, "euclidean | squared_euclidean | manhattan");
    cluster->add_flag("--normalize", copt.normalize, "min-max normalize features");
    cluster->add_flag("--header", copt.header, "first row is a header");
    int label_col = -1;
    cluster->add_option("--label-column", label_col, "ground-truth label column index");
    cluster->add_option("--max-iter", copt.max_iter, "iteration cap");
    cluster->add_option("--tol", copt.tol, "convergence tolerance");
    cluster->add_option("--particles", copt.particles, "swarm size");
    double c1 = -1, c2 = -1, chi = -1;
    cluster->add_option("--c1", c1, "cognitive weight");
    cluster->add_option("--c2", c2, "social weight");
    cluster->add_option("--chi", chi, "constriction coefficient");
    cluster->add_flag("--refine", copt.refine, "apply one Lloyd step per particle per iteration");
    cluster->add_option("--eps", copt.eps, "dbscan neighborhood radius");
    cluster->add_option("--minpts", copt.minpts, "dbscan core threshold");
    cluster->add_option("--linkage", copt.linkage, "single | complete | average");
    cluster->add_option("--history", copt.history_path, "write fitness history CSV here");
    cluster->add_option("--labels-out", copt.labels_out, "write the assignment CSV here");

    // indices
    auto* indices = app.add_subcommand("indices", "score an external labeling of a dataset");
    std::string ind_dataset, ind_labels, ind_metric = "euclidean";
    bool ind_header = false;
    int ind_label_col = -1;
    indices->add_option("dataset", ind_dataset, "CSV dataset")->required();
    indices->add_option("labels", ind_labels, "single-column label CSV (-1 = noise)")->required();
    indices->add_option("--metric", ind_metric, "distance metric");
    indices->add_flag("--header", ind_header, "first row is a header");
    indices->add_option("--label-column", ind_label_col, "ground-truth label column index");

    // toy
    auto* toy = app.add_subcommand("toy", "print the 15-point worked example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints usage/error text
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            ExperimentConfig cfg = parse_experiment_config(config_path);
            if (!output_override.empty()) cfg.output_dir = output_override;
            const ExperimentReport report = run_experiment(cfg);
            const auto files = emit_report(report, cfg.output_dir, cfg.emit_csv, cfg.emit_json);
            for (const std::string& f : files) std::cout << "wrote " << f << "\n";
            if (!report.errors.empty()) {
                std::cout << report.errors.size() << " cell error(s); see the report\n";
                for (const std::string& e : report.errors) std::cerr << "error: " << e << "\n";
            }
        } else if (cluster->parsed()) {
            if (label_col >= 0) copt.label_column = label_col;
            if (c1 >= 0) copt.c1 = c1;
            if (c2 >= 0) copt.c2 = c2;
            if (chi >= 0) copt.chi = chi;
            return cmd_cluster(copt);
        } else if (indices->parsed()) {
            DatasetSpec dspec;
            dspec.name = ind_dataset;
            dspec.path = ind_dataset;
            dspec.has_header = ind_header;
            if (ind_label_col >= 0) dspec.label_column = ind_label_col;
            const Dataset data = load_dataset(dspec);
            const Partition p = load_labels_csv(ind_labels);
            if (p.size() != data.n_objects())
                throw std::runtime_error("label file covers " + std::to_string(p.size()) +
                                         " objects, dataset has " +
                                         std::to_string(data.n_objects()));
            std::cout << index_report_to_json(
                compute_index_report(data, p, metric_from_string(ind_metric)));
        } else if (toy->parsed()) {
            print_toy_example(run_toy_example(), std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
