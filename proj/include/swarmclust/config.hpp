#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swarmclust/dataset.hpp"
#include "swarmclust/density_hier.hpp"
#include "swarmclust/swarm.hpp"

namespace swarmclust {

// INI-style configuration: [section] headers with key = value lines,
// full-line comments starting with '#'. Section and key order is preserved
// because it fixes the column order of every emitted table.
struct ConfigSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    const std::string* find(const std::string& key) const;
};

struct ConfigFile {
    std::vector<ConfigSection> sections;
};

ConfigFile parse_config_file(const std::string& path);

struct SyntheticSpec {
    Index objects = 100;
    Index features = 2;
    int classes = 3;
    std::uint64_t seed = 0;
    Scalar spread = 1.0;
};

struct DatasetSpec {
    std::string name;
    std::string path;                    // empty when synthetic
    std::optional<SyntheticSpec> synthetic;
    bool has_header = false;
    std::optional<Index> label_column;
    bool normalize = false;
    std::optional<int> k;                // defaults to the dataset's class count
};

enum class AlgorithmKind { kmeans, simple_pso, canonical_pso, dbscan, hierarchical };

AlgorithmKind algorithm_kind_from_string(const std::string& name);
std::string to_string(AlgorithmKind kind);
bool is_deterministic(AlgorithmKind kind);

struct AlgorithmSpec {
    std::string name;
    AlgorithmKind kind = AlgorithmKind::kmeans;
    Metric metric = Metric::euclidean;
    // k-means
    int max_iter = 0;  // 0 = kind-specific default
    Scalar tol = -1.0; // < 0 = kind-specific default
    // PSO
    int particles = 20;
    std::optional<Scalar> c1, c2, chi;
    bool refine = false;
    bool per_coordinate_random = false;
    // DBSCAN
    Scalar eps = 1.0;
    int minpts = 5;
    // hierarchical
    Linkage linkage = Linkage::average;
};

struct ExperimentConfig {
    std::vector<DatasetSpec> datasets;
    std::vector<AlgorithmSpec> algorithms;
    int trials = 1;
    std::uint64_t base_seed = 0;
    std::string output_dir = "out";
    bool emit_csv = true;
    bool emit_json = true;
    bool force_anova_all = false;
};

// Parses and validates [experiment], [dataset.*], and [algorithm.*]
// sections. Unknown keys and malformed values throw with the config path
// and section named.
ExperimentConfig parse_experiment_config(const std::string& path);

// Materializes a dataset spec: loads the CSV or generates the synthetic
// blobs, then applies normalization when requested.
Dataset load_dataset(const DatasetSpec& spec);

} // namespace swarmclust
