#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swarmclust/config.hpp"
#include "swarmclust/stats.hpp"
#include "swarmclust/validity.hpp"

namespace swarmclust {

struct TrialRecord {
    std::string dataset;
    std::string algorithm;
    int trial = 0;
    std::uint64_t seed = 0;
    IndexReport indices;
    std::optional<Scalar> fitness;
    int iterations = 0;
    double runtime_ms = 0.0; // wall clock; kept out of the JSON report
    bool replicated = false; // deterministic algorithm, row copied across trials
    std::optional<std::string> error; // whole-cell failure
};

// rows = datasets, cols = algorithms, NaN where no value exists
struct AggregateTable {
    Matrix values;
};

struct AnovaEntry {
    std::string dataset;
    std::vector<std::string> algorithms; // groups that entered the test
    std::optional<AnovaTable> table;
    std::string notice; // set when the test was skipped or narrowed
};

struct BoxplotEntry {
    std::string dataset;
    std::string algorithm;
    std::optional<BoxplotStats> stats;
};

struct ExperimentReport {
    std::vector<std::string> dataset_names;   // declared order
    std::vector<std::string> algorithm_names; // declared order
    int trials = 0;
    std::uint64_t base_seed = 0;
    std::vector<TrialRecord> per_trial;
    AggregateTable silhouette_mean;
    AggregateTable silhouette_best;
    AggregateTable accuracy_mean;
    AggregateTable dunn_mean;
    AggregateTable db_mean;
    AggregateTable rand_mean;
    AggregateTable mirkin_mean;
    std::vector<AnovaEntry> anova;     // one per dataset
    std::vector<BoxplotEntry> boxplots;
    std::vector<std::string> errors;   // cell-level error list
};

std::uint64_t derive_trial_seed(std::uint64_t base_seed, const std::string& dataset,
                                const std::string& algorithm, int trial);

// Runs every (dataset, algorithm, trial) cell, computes index reports and the
// aggregate tables, and performs the per-dataset ANOVA over silhouette
// samples. Deterministic algorithms run once and are replicated across
// trials. Cell failures are recorded and the run continues.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Writes the report files (CSV tables, per-trial rows, JSON) into dir and
// returns the paths written. Throws if the report holds no trials or a file
// cannot be written.
std::vector<std::string> emit_report(const ExperimentReport& r, const std::string& dir,
                                     bool csv, bool json);

// JSON form of the full report; identical bytes for identical runs.
std::string report_to_json(const ExperimentReport& r);

std::string index_report_to_json(const IndexReport& report);

// The 15-point worked example: two k-means iterations under the manhattan
// metric from fixed starting centroids, followed by the Davies-Bouldin
// components at those starting centroids and the Dunn diagnostics of the
// final clusters.
struct ToyResult {
    Dataset data;
    Matrix initial_centroids;
    std::vector<Matrix> distance_tables;      // per iteration: n x k distances
    std::vector<std::vector<int>> assignments; // per iteration
    std::vector<Index> first_iteration_sizes;
    Matrix final_centroids;
    int iterations = 0;
    Scalar fitness = 0.0;
    DaviesBouldinComponents db;  // at the starting centroids
    Matrix dunn_pairs;
    Scalar dunn_value = 0.0;
};

ToyResult run_toy_example();
void print_toy_example(const ToyResult& toy, std::ostream& out);

} // namespace swarmclust
