#include "swarmclust/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "swarmclust/density_hier.hpp"
#include "swarmclust/kmeans.hpp"
#include "swarmclust/rng.hpp"
#include "swarmclust/swarm.hpp"

namespace swarmclust {

namespace {

constexpr Scalar kNaN = std::numeric_limits<Scalar>::quiet_NaN();

using OrderedJson = nlohmann::ordered_json;

std::string format_value(Scalar v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CellResult {
    Partition partition;
    std::optional<Scalar> fitness;
    int iterations = 0;
};

CellResult run_algorithm(const Dataset& d, const AlgorithmSpec& algo, int k, std::uint64_t seed) {
    CellResult cell;
    switch (algo.kind) {
        case AlgorithmKind::kmeans: {
            KMeansConfig cfg;
            cfg.k = k;
            cfg.max_iter = algo.max_iter;
            cfg.tol = algo.tol;
            cfg.metric = algo.metric;
            cfg.seed = seed;
            KMeansResult res = kmeans_run(d, cfg);
            cell.partition = std::move(res.partition);
            cell.fitness = res.fitness;
            cell.iterations = res.iterations;
            break;
        }
        case AlgorithmKind::simple_pso:
        case AlgorithmKind::canonical_pso: {
            PsoConfig cfg;
            cfg.variant = algo.kind == AlgorithmKind::simple_pso ? PsoVariant::simple
                                                                 : PsoVariant::canonical;
            // standard weights per variant unless the config overrides them
            const Scalar default_c = cfg.variant == PsoVariant::simple ? 2.0 : 2.05;
            cfg.c1 = algo.c1.value_or(default_c);
            cfg.c2 = algo.c2.value_or(default_c);
            cfg.chi = algo.chi;
            cfg.n_particles = algo.particles;
            cfg.max_iter = algo.max_iter;
            cfg.tol = algo.tol;
            cfg.k = k;
            cfg.metric = algo.metric;
            cfg.seed = seed;
            cfg.kmeans_refine = algo.refine;
            cfg.per_coordinate_random = algo.per_coordinate_random;
            PsoResult res = pso_kmeans_run(d, cfg);
            cell.partition = std::move(res.partition);
            cell.fitness = res.fitness;
            cell.iterations = res.iterations;
            break;
        }
        case AlgorithmKind::dbscan: {
            DbscanConfig cfg;
            cfg.eps = algo.eps;
            cfg.minpts = algo.minpts;
            cfg.metric = algo.metric;
            cell.partition = dbscan_run(d, cfg);
            cell.iterations = 1;
            break;
        }
        case AlgorithmKind::hierarchical: {
            HierConfig cfg;
            cfg.k = k;
            cfg.linkage = algo.linkage;
            cfg.metric = algo.metric;
            cell.partition = hierarchical_run(d, cfg);
            cell.iterations = 1;
            break;
        }
    }

    // Deterministic baselines carry no native objective; report the
    // clustering objective of their result (means over non-noise members)
    // so the fitness column is comparable across algorithms.
    if (!cell.fitness && cell.partition.n_clusters > 0) {
        std::vector<int> keep;
        Matrix pts(d.n_objects(), d.n_features());
        Index rows = 0;
        for (Index i = 0; i < d.n_objects(); ++i) {
            const int id = cell.partition.assignment[static_cast<std::size_t>(i)];
            if (id == kNoiseLabel) continue;
            pts.row(rows++) = d.points.row(i);
            keep.push_back(id);
        }
        if (rows > 0) {
            Dataset sub;
            sub.points = pts.topRows(rows);
            Partition p{keep, cell.partition.n_clusters};
            const auto sizes = cluster_sizes(p);
            if (std::find(sizes.begin(), sizes.end(), 0) == sizes.end()) {
                const Matrix means = compute_centroids(sub, p);
                cell.fitness = sse_fitness(sub, means, p, algo.metric);
            }
        }
    }
    return cell;
}

Scalar mean_of(const std::vector<Scalar>& values) {
    Scalar sum = 0.0;
    for (Scalar v : values) sum += v;
    return sum / static_cast<Scalar>(values.size());
}

} // namespace

std::uint64_t derive_trial_seed(std::uint64_t base_seed, const std::string& dataset,
                                const std::string& algorithm, int trial) {
    std::uint64_t s = mix_seed(base_seed, fnv1a(dataset));
    s = mix_seed(s, fnv1a(algorithm));
    return mix_seed(s, static_cast<std::uint64_t>(trial));
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    ExperimentReport report;
    report.trials = cfg.trials;
    report.base_seed = cfg.base_seed;
    for (const auto& d : cfg.datasets) report.dataset_names.push_back(d.name);
    for (const auto& a : cfg.algorithms) report.algorithm_names.push_back(a.name);

    const Index n_datasets = static_cast<Index>(cfg.datasets.size());
    const Index n_algorithms = static_cast<Index>(cfg.algorithms.size());
    const auto blank = [&] { return AggregateTable{Matrix::Constant(n_datasets, n_algorithms, kNaN)}; };
    report.silhouette_mean = blank();
    report.silhouette_best = blank();
    report.accuracy_mean = blank();
    report.dunn_mean = blank();
    report.db_mean = blank();
    report.rand_mean = blank();
    report.mirkin_mean = blank();

    for (Index di = 0; di < n_datasets; ++di) {
        const DatasetSpec& dspec = cfg.datasets[static_cast<std::size_t>(di)];
        Dataset data;
        try {
            data = load_dataset(dspec);
        } catch (const std::exception& e) {
            report.errors.push_back(dspec.name + ": " + e.what());
            continue;
        }
        const int k = dspec.k.value_or(std::max(data.n_classes(), 2));

        // silhouette samples per algorithm, for ANOVA and the box plots
        std::vector<std::vector<Scalar>> silhouette_samples(static_cast<std::size_t>(n_algorithms));

        for (Index ai = 0; ai < n_algorithms; ++ai) {
            const AlgorithmSpec& algo = cfg.algorithms[static_cast<std::size_t>(ai)];
            const bool deterministic = is_deterministic(algo.kind);

            std::vector<Scalar> sil, acc, dun, dbv, rnd, mir;
            std::optional<TrialRecord> first_record;

            for (int trial = 0; trial < cfg.trials; ++trial) {
                TrialRecord rec;
                rec.dataset = dspec.name;
                rec.algorithm = algo.name;
                rec.trial = trial;
                rec.seed = derive_trial_seed(cfg.base_seed, dspec.name, algo.name, trial);

                if (deterministic && trial > 0) {
                    rec = *first_record;
                    rec.trial = trial;
                    rec.seed = derive_trial_seed(cfg.base_seed, dspec.name, algo.name, trial);
                    rec.replicated = true;
                } else {
                    const auto start = std::chrono::steady_clock::now();
                    try {
                        CellResult cell = run_algorithm(data, algo, k, rec.seed);
                        rec.fitness = cell.fitness;
                        rec.iterations = cell.iterations;
                        rec.indices = compute_index_report(data, cell.partition, algo.metric);
                    } catch (const std::exception& e) {
                        rec.error = e.what();
                        report.errors.push_back(dspec.name + "/" + algo.name + "/trial " +
                                                std::to_string(trial) + ": " + e.what());
                    }
                    const auto stop = std::chrono::steady_clock::now();
                    rec.runtime_ms =
                        std::chrono::duration<double, std::milli>(stop - start).count();
                    if (deterministic) first_record = rec;
                }

                if (!rec.error) {
                    const IndexReport& ir = rec.indices;
                    if (ir.silhouette_overall) sil.push_back(*ir.silhouette_overall);
                    if (ir.accuracy) acc.push_back(*ir.accuracy);
                    if (ir.dunn) dun.push_back(*ir.dunn);
                    if (ir.db) dbv.push_back(*ir.db);
                    if (ir.rand) rnd.push_back(*ir.rand);
                    if (ir.mirkin_normalized) mir.push_back(*ir.mirkin_normalized);
                    for (const std::string& e : ir.errors)
                        report.errors.push_back(dspec.name + "/" + algo.name + "/trial " +
                                                std::to_string(rec.trial) + ": " + e);
                }
                report.per_trial.push_back(std::move(rec));
            }

            // aggregate cells are means over exactly `trials` values; missing
            // values leave the cell NaN
            const auto cell = [&](AggregateTable& table, const std::vector<Scalar>& v) {
                if (static_cast<int>(v.size()) == cfg.trials) table.values(di, ai) = mean_of(v);
            };
            cell(report.silhouette_mean, sil);
            cell(report.accuracy_mean, acc);
            cell(report.dunn_mean, dun);
            cell(report.db_mean, dbv);
            cell(report.rand_mean, rnd);
            cell(report.mirkin_mean, mir);
            if (static_cast<int>(sil.size()) == cfg.trials)
                report.silhouette_best.values(di, ai) = *std::max_element(sil.begin(), sil.end());
            silhouette_samples[static_cast<std::size_t>(ai)] = std::move(sil);
        }

        // one-way ANOVA across algorithms on the silhouette samples
        AnovaEntry entry;
        entry.dataset = dspec.name;
        std::vector<std::vector<Scalar>> groups;
        for (Index ai = 0; ai < n_algorithms; ++ai) {
            const AlgorithmSpec& algo = cfg.algorithms[static_cast<std::size_t>(ai)];
            const auto& samples = silhouette_samples[static_cast<std::size_t>(ai)];
            if (samples.empty()) continue;
            if (is_deterministic(algo.kind) && !cfg.force_anova_all) continue;
            groups.push_back(samples);
            entry.algorithms.push_back(algo.name);
        }
        if (static_cast<Index>(groups.size()) < n_algorithms && cfg.force_anova_all)
            entry.notice = "some algorithms produced no silhouette samples";
        else if (static_cast<Index>(entry.algorithms.size()) < n_algorithms)
            entry.notice = "deterministic algorithms excluded (zero within-group variance); "
                           "set force_anova_all to include them";
        try {
            if (groups.size() < 2)
                throw std::invalid_argument("fewer than 2 algorithm groups with samples");
            entry.table = anova_oneway(groups);
        } catch (const std::exception& e) {
            entry.table.reset();
            entry.notice = std::string("anova skipped: ") + e.what();
        }
        report.anova.push_back(std::move(entry));

        for (Index ai = 0; ai < n_algorithms; ++ai) {
            BoxplotEntry box;
            box.dataset = dspec.name;
            box.algorithm = cfg.algorithms[static_cast<std::size_t>(ai)].name;
            const auto& samples = silhouette_samples[static_cast<std::size_t>(ai)];
            if (!samples.empty()) box.stats = boxplot_stats(samples);
            report.boxplots.push_back(std::move(box));
        }
    }
    return report;
}

namespace {

OrderedJson json_or_null(const std::optional<Scalar>& v) {
    if (!v || std::isnan(*v)) return nullptr;
    return *v;
}

OrderedJson matrix_cell(Scalar v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

OrderedJson index_report_json_impl(const IndexReport& r) {
    OrderedJson j;
    j["silhouette"] = json_or_null(r.silhouette_overall);
    j["silhouette_per_cluster"] = r.silhouette_per_cluster;
    j["db"] = json_or_null(r.db);
    j["dunn"] = json_or_null(r.dunn);
    j["rand"] = json_or_null(r.rand);
    j["mirkin_raw"] = r.mirkin_raw ? OrderedJson(*r.mirkin_raw) : OrderedJson(nullptr);
    j["mirkin_norm"] = json_or_null(r.mirkin_normalized);
    j["accuracy"] = json_or_null(r.accuracy);
    j["excluded_noise"] = r.excluded_noise;
    j["errors"] = r.errors;
    return j;
}

OrderedJson table_json(const ExperimentReport& r, const AggregateTable& table) {
    OrderedJson rows = OrderedJson::array();
    for (Index di = 0; di < table.values.rows(); ++di) {
        OrderedJson row;
        row["dataset"] = r.dataset_names[static_cast<std::size_t>(di)];
        for (Index ai = 0; ai < table.values.cols(); ++ai)
            row[r.algorithm_names[static_cast<std::size_t>(ai)]] = matrix_cell(table.values(di, ai));
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedJson anova_json(const AnovaEntry& e) {
    OrderedJson j;
    j["dataset"] = e.dataset;
    j["algorithms"] = e.algorithms;
    j["notice"] = e.notice;
    if (e.table) {
        const AnovaTable& t = *e.table;
        j["table"] = OrderedJson{{"ss_columns", t.ss_columns}, {"ss_error", t.ss_error},
                                 {"ss_total", t.ss_total},     {"df_columns", t.df_columns},
                                 {"df_error", t.df_error},     {"df_total", t.df_total},
                                 {"ms_columns", t.ms_columns}, {"ms_error", t.ms_error},
                                 {"f", std::isinf(t.f) ? OrderedJson(nullptr) : OrderedJson(t.f)},
                                 {"prob_gt_f", t.prob_gt_f},
                                 {"zero_within_variance", t.zero_within_variance}};
    } else {
        j["table"] = nullptr;
    }
    return j;
}

} // namespace

std::string index_report_to_json(const IndexReport& report) {
    return index_report_json_impl(report).dump(2) + "\n";
}

std::string report_to_json(const ExperimentReport& r) {
    OrderedJson j;
    j["trials"] = r.trials;
    j["base_seed"] = r.base_seed;
    j["datasets"] = r.dataset_names;
    j["algorithms"] = r.algorithm_names;

    OrderedJson per_trial = OrderedJson::array();
    for (const TrialRecord& rec : r.per_trial) {
        OrderedJson row;
        row["dataset"] = rec.dataset;
        row["algorithm"] = rec.algorithm;
        row["trial"] = rec.trial;
        row["seed"] = rec.seed;
        row["indices"] = index_report_json_impl(rec.indices);
        row["fitness"] = json_or_null(rec.fitness);
        row["iterations"] = rec.iterations;
        row["replicated"] = rec.replicated;
        row["error"] = rec.error ? OrderedJson(*rec.error) : OrderedJson(nullptr);
        per_trial.push_back(std::move(row));
    }
    j["per_trial"] = std::move(per_trial);

    j["silhouette_mean"] = table_json(r, r.silhouette_mean);
    j["silhouette_best"] = table_json(r, r.silhouette_best);
    j["accuracy_mean"] = table_json(r, r.accuracy_mean);
    j["index_means"] = OrderedJson{{"dunn", table_json(r, r.dunn_mean)},
                                   {"db", table_json(r, r.db_mean)},
                                   {"rand", table_json(r, r.rand_mean)},
                                   {"mirkin", table_json(r, r.mirkin_mean)}};

    OrderedJson anova = OrderedJson::array();
    for (const AnovaEntry& e : r.anova) anova.push_back(anova_json(e));
    j["anova"] = std::move(anova);

    OrderedJson boxplots = OrderedJson::array();
    for (const BoxplotEntry& b : r.boxplots) {
        OrderedJson e;
        e["dataset"] = b.dataset;
        e["algorithm"] = b.algorithm;
        if (b.stats) {
            e["stats"] = OrderedJson{{"min", b.stats->min},       {"q1", b.stats->q1},
                                     {"median", b.stats->median}, {"q3", b.stats->q3},
                                     {"max", b.stats->max},       {"outliers", b.stats->outliers}};
        } else {
            e["stats"] = nullptr;
        }
        boxplots.push_back(std::move(e));
    }
    j["boxplots"] = std::move(boxplots);
    j["errors"] = r.errors;
    return j.dump(2) + "\n";
}

namespace {

void write_file(const std::string& path, const std::string& contents,
                std::vector<std::string>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << contents;
    if (!out) throw std::runtime_error(path + ": write failed");
    written.push_back(path);
}

std::string table_csv(const ExperimentReport& r, const AggregateTable& table) {
    std::string out = "dataset";
    for (const std::string& a : r.algorithm_names) out += "," + a;
    out += "\n";
    for (Index di = 0; di < table.values.rows(); ++di) {
        out += r.dataset_names[static_cast<std::size_t>(di)];
        for (Index ai = 0; ai < table.values.cols(); ++ai) {
            const Scalar v = table.values(di, ai);
            out += ",";
            if (!std::isnan(v)) out += format_value(v);
        }
        out += "\n";
    }
    return out;
}

std::string optional_csv(const std::optional<Scalar>& v) {
    return v && !std::isnan(*v) ? format_value(*v) : std::string();
}

} // namespace

std::vector<std::string> emit_report(const ExperimentReport& r, const std::string& dir,
                                     bool csv, bool json) {
    if (r.per_trial.empty()) throw std::runtime_error("emit_report: report holds no trials");
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    const auto path = [&dir](const std::string& file) {
        return (std::filesystem::path(dir) / file).string();
    };

    if (csv) {
        // pinned column set, one row per (dataset, algorithm, trial)
        std::string per_trial =
            "dataset,algorithm,trial,seed,silhouette,db,dunn,rand,mirkin_norm,accuracy,fitness,"
            "iterations,runtime_ms,excluded_noise\n";
        for (const TrialRecord& rec : r.per_trial) {
            per_trial += rec.dataset + "," + rec.algorithm + "," + std::to_string(rec.trial) + "," +
                         std::to_string(rec.seed) + "," + optional_csv(rec.indices.silhouette_overall) +
                         "," + optional_csv(rec.indices.db) + "," + optional_csv(rec.indices.dunn) +
                         "," + optional_csv(rec.indices.rand) + "," +
                         optional_csv(rec.indices.mirkin_normalized) + "," +
                         optional_csv(rec.indices.accuracy) + "," + optional_csv(rec.fitness) + "," +
                         std::to_string(rec.iterations) + "," + format_value(rec.runtime_ms) + "," +
                         std::to_string(rec.indices.excluded_noise) + "\n";
        }
        write_file(path("per_trial.csv"), per_trial, written);

        write_file(path("silhouette_table.csv"), table_csv(r, r.silhouette_mean), written);
        write_file(path("silhouette_best.csv"), table_csv(r, r.silhouette_best), written);
        write_file(path("accuracy_table.csv"), table_csv(r, r.accuracy_mean), written);

        for (std::size_t di = 0; di < r.dataset_names.size(); ++di) {
            const std::string& dname = r.dataset_names[di];
            // four-index grid, algorithms as columns
            std::string grid = "index";
            for (const std::string& a : r.algorithm_names) grid += "," + a;
            grid += "\n";
            const std::pair<const char*, const AggregateTable*> rows[] = {
                {"dunn", &r.dunn_mean}, {"db", &r.db_mean},
                {"rand", &r.rand_mean}, {"mirkin", &r.mirkin_mean}};
            for (const auto& [label, table] : rows) {
                grid += label;
                for (Index ai = 0; ai < table->values.cols(); ++ai) {
                    const Scalar v = table->values(static_cast<Index>(di), ai);
                    grid += ",";
                    if (!std::isnan(v)) grid += format_value(v);
                }
                grid += "\n";
            }
            write_file(path("index_table_" + dname + ".csv"), grid, written);

            for (const AnovaEntry& e : r.anova) {
                if (e.dataset != dname || !e.table) continue;
                std::ostringstream anova_csv;
                write_anova_csv(*e.table, anova_csv);
                write_file(path("anova_" + dname + ".csv"), anova_csv.str(), written);
            }

            std::string box = "algorithm,min,q1,median,q3,max,outliers\n";
            for (const BoxplotEntry& b : r.boxplots) {
                if (b.dataset != dname) continue;
                box += b.algorithm + ",";
                if (b.stats) {
                    box += format_value(b.stats->min) + "," + format_value(b.stats->q1) + "," +
                           format_value(b.stats->median) + "," + format_value(b.stats->q3) + "," +
                           format_value(b.stats->max) + ",";
                    for (std::size_t i = 0; i < b.stats->outliers.size(); ++i) {
                        if (i) box += ";";
                        box += format_value(b.stats->outliers[i]);
                    }
                } else {
                    box += ",,,,,";
                }
                box += "\n";
            }
            write_file(path("boxplot_" + dname + ".csv"), box, written);
        }
    }

    if (json) write_file(path("report.json"), report_to_json(r), written);
    return written;
}

ToyResult run_toy_example() {
    ToyResult toy;
    const Scalar values[] = {10, 12, 15, 7, 22, 29, 31, 3, 7, 5, 1, 4, 12, 11, 10};
    toy.data.points.resize(15, 1);
    for (Index i = 0; i < 15; ++i) toy.data.points(i, 0) = values[i];
    toy.data.feature_names = {"x"};
    toy.data.name = "toy";

    toy.initial_centroids.resize(3, 1);
    toy.initial_centroids << 10, 22, 1;
    const Metric metric = Metric::manhattan;

    Matrix centroids = toy.initial_centroids;
    std::vector<int> previous;
    for (int iter = 1; iter <= 25; ++iter) {
        Matrix table(toy.data.n_objects(), centroids.rows());
        for (Index i = 0; i < toy.data.n_objects(); ++i)
            for (Index c = 0; c < centroids.rows(); ++c)
                table(i, c) = distance(toy.data.points.row(i), centroids.row(c), metric);
        const AssignResult assigned = assign_nearest(toy.data, centroids, metric);
        toy.distance_tables.push_back(std::move(table));
        toy.assignments.push_back(assigned.partition.assignment);
        toy.iterations = iter;
        if (iter == 1) toy.first_iteration_sizes = cluster_sizes(assigned.partition);

        if (assigned.partition.assignment == previous) {
            toy.fitness = sse_fitness(toy.data, centroids, assigned.partition, metric);
            break;
        }
        previous = assigned.partition.assignment;
        centroids = compute_centroids(toy.data, assigned.partition);
    }
    toy.final_centroids = centroids;

    Partition final_partition{previous, 3};
    toy.db = davies_bouldin_components(toy.data, final_partition, toy.initial_centroids, metric);
    toy.dunn_pairs = dunn_pair_table(toy.data, final_partition, metric);
    toy.dunn_value = dunn(toy.data, final_partition, metric);
    return toy;
}

void print_toy_example(const ToyResult& toy, std::ostream& out) {
    const auto num = [](Scalar v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", v);
        return std::string(buf);
    };

    out << "data:";
    for (Index i = 0; i < toy.data.n_objects(); ++i) out << ' ' << num(toy.data.points(i, 0));
    out << "\ninitial centroids:";
    for (Index c = 0; c < toy.initial_centroids.rows(); ++c)
        out << ' ' << num(toy.initial_centroids(c, 0));
    out << " (manhattan distance)\n";

    for (std::size_t iter = 0; iter < toy.distance_tables.size(); ++iter) {
        const Matrix& table = toy.distance_tables[iter];
        out << "\niteration " << iter + 1 << " (object, distance to each centroid, assigned)\n";
        for (Index i = 0; i < table.rows(); ++i) {
            out << "  " << num(toy.data.points(i, 0));
            for (Index c = 0; c < table.cols(); ++c) out << '\t' << num(table(i, c));
            out << "\tcluster " << toy.assignments[iter][static_cast<std::size_t>(i)] + 1 << '\n';
        }
        if (iter == 0) {
            out << "cluster sizes:";
            for (Index s : toy.first_iteration_sizes) out << ' ' << s;
            out << '\n';
            out << "new centroids:";
            for (Index c = 0; c < toy.final_centroids.rows(); ++c)
                out << ' ' << num(toy.final_centroids(c, 0));
            out << '\n';
        }
    }
    out << "no assignment change; converged at iteration " << toy.iterations << '\n';
    out << "fitness (sum of squared distances): " << num(toy.fitness) << "\n";

    out << "\nDavies-Bouldin components at the starting centroids\n";
    out << "scatter:";
    for (Scalar s : toy.db.scatter) out << ' ' << num(s);
    out << "\npairwise ratios:";
    const Index k = toy.db.ratios.rows();
    for (Index i = 0; i < k; ++i)
        for (Index j = i + 1; j < k; ++j)
            out << " r" << i + 1 << j + 1 << "=" << num(toy.db.ratios(i, j));
    out << "\nper-cluster maxima:";
    for (Scalar s : toy.db.cluster_max) out << ' ' << num(s);
    out << "\nDB (mean of per-cluster maxima): " << num(toy.db.value) << '\n';

    out << "\nDunn pair ratios (min inter(i,j) / diameter(i))\n";
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            if (i != j)
                out << "  D(" << i + 1 << "," << j + 1 << ") = " << num(toy.dunn_pairs(i, j)) << '\n';
    out << "Dunn (min inter / max diameter): " << num(toy.dunn_value) << '\n';
}

} // namespace swarmclust
