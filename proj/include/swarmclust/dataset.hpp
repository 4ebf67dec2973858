#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swarmclust/types.hpp"

namespace swarmclust {

enum class Metric { euclidean, squared_euclidean, manhattan };

Metric metric_from_string(const std::string& name);
std::string to_string(Metric m);

// Immutable after construction; safe to share across threads.
struct Dataset {
    Matrix points;                          // n_objects x n_features
    std::vector<int> labels;                // class ids, empty when no ground truth
    std::vector<std::string> label_names;   // id -> original label text
    std::vector<std::string> feature_names; // length n_features
    std::string name;

    Index n_objects() const { return points.rows(); }
    Index n_features() const { return points.cols(); }
    bool has_labels() const { return !labels.empty(); }
    int n_classes() const { return static_cast<int>(label_names.size()); }
};

// Reads a comma-separated file of real numbers, one object per row.
// The optional label column may hold text or integers; distinct values are
// mapped to class ids in order of first appearance. Throws on unreadable
// files, ragged rows, empty input, and any cell that does not parse as a
// finite number (the message names the offending row and column, 1-based).
Dataset load_csv(const std::string& path, bool has_header,
                 std::optional<Index> label_column, const std::string& name = "");

// Writes a header row followed by the data at full double precision, the
// label column (original text) first when labels are present. load_csv on
// the result reproduces the matrix bit for bit.
void save_csv(const Dataset& d, const std::string& path);

// Rescales every feature column to [0, 1]; constant columns map to 0.
Dataset normalize_minmax(const Dataset& d);

Scalar distance(ConstRowRef a, ConstRowRef b, Metric m);

// The squared base distance used by the clustering objective: squared
// euclidean norm for both euclidean metrics, squared L1 for manhattan.
Scalar squared_distance(ConstRowRef a, ConstRowRef b, Metric m);

// Seeded Gaussian-blob generator: n_blobs centers drawn uniformly in
// [0, 10)^n_features, points scattered around them with the given spread,
// labels set to the blob index. Used as the stand-in for datasets that
// cannot be redistributed; the dataset name marks it as synthetic.
Dataset make_blobs(Index n_objects, Index n_features, int n_blobs,
                   std::uint64_t seed, Scalar spread = 1.0,
                   const std::string& name = "synthetic");

} // namespace swarmclust
