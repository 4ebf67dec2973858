#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "swarmclust/dataset.hpp"
#include "swarmclust/partition.hpp"
#include "swarmclust/rng.hpp"

namespace test_util {

using swarmclust::Dataset;
using swarmclust::Index;
using swarmclust::Partition;
using swarmclust::Rng;
using swarmclust::Scalar;

inline Dataset random_dataset(Rng& rng, Index n, Index features, Scalar lo = 0.0, Scalar hi = 10.0) {
    Dataset d;
    d.name = "random";
    d.points.resize(n, features);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < features; ++j) d.points(i, j) = rng.uniform(lo, hi);
    for (Index j = 0; j < features; ++j) d.feature_names.push_back("f" + std::to_string(j));
    return d;
}

// Random complete partition with every cluster non-empty.
inline Partition random_partition(Rng& rng, Index n, int k) {
    Partition p;
    p.n_clusters = k;
    p.assignment.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        p.assignment[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(k)));
    for (int c = 0; c < k; ++c) // pin one member per cluster
        p.assignment[static_cast<std::size_t>(c % n)] = c;
    return p;
}

inline std::vector<int> random_labels(Rng& rng, Index n, int k) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (auto& l : labels) l = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(k)));
    return labels;
}

class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        path_ = std::filesystem::temp_directory_path() /
                ("swarmclust_test_" + tag + "_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string dir() const { return path_.string(); }

  private:
    std::filesystem::path path_;
};

inline std::string write_file(const TempDir& dir, const std::string& name,
                              const std::string& contents) {
    const std::string path = dir.file(name);
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace test_util
