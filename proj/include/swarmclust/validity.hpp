#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swarmclust/dataset.hpp"
#include "swarmclust/partition.hpp"

namespace swarmclust {

// Clusters that lose every member to noise are dropped before any index is
// computed; the number of excluded noise points is reported alongside.

struct SilhouetteResult {
    Scalar overall = 0.0;
    std::vector<Scalar> per_sample;  // aligned to dataset rows, NaN for noise
    std::vector<Scalar> per_cluster; // mean width per cluster
};

// s(i) = (b(i) - a(i)) / max(a(i), b(i)) with a(i) the mean distance to
// co-members (self excluded) and b(i) the smallest mean distance to another
// cluster. Samples in singleton clusters score 0. Needs >= 2 clusters.
SilhouetteResult silhouette(const Dataset& d, const Partition& p, Metric m);

struct DaviesBouldinComponents {
    std::vector<Scalar> scatter;      // mean member-to-centroid distance per cluster
    Matrix ratios;                    // (scatter_i + scatter_j) / d(centroid_i, centroid_j)
    std::vector<Scalar> cluster_max;  // max_{j != i} ratios(i, j)
    Scalar value = 0.0;               // mean of cluster_max
};

// Davies-Bouldin with explicit centroids (diagnostic form).
DaviesBouldinComponents davies_bouldin_components(const Dataset& d, const Partition& p,
                                                  const Matrix& centroids, Metric m);

// Davies-Bouldin index with centroids = cluster means. Lower is better.
// Throws if two centroids coincide (the message names the pair).
Scalar davies_bouldin(const Dataset& d, const Partition& p, Metric m);

// Minimum pointwise inter-cluster distance over all cluster pairs, divided
// by the maximum cluster diameter. Higher is better. Throws when every
// cluster is a singleton (zero diameter).
Scalar dunn(const Dataset& d, const Partition& p, Metric m);

// Per-pair diagnostic: entry (i, j) = min pointwise distance between
// clusters i and j divided by the diameter of cluster i; NaN on the
// diagonal and for singleton row clusters.
Matrix dunn_pair_table(const Dataset& d, const Partition& p, Metric m);

// Fraction of object pairs on which two labelings agree (together in both
// or separated in both). Labels must be nonnegative; n >= 2.
Scalar rand_index(const std::vector<int>& a, const std::vector<int>& b);

struct MirkinResult {
    std::int64_t raw = 0;      // pair-disagreement count, = n(n-1)(1 - rand)
    Scalar normalized = 0.0;   // raw / n^2
};

MirkinResult mirkin(const std::vector<int>& a, const std::vector<int>& b);

// Best injective cluster-to-class mapping accuracy. Noise points stay in
// the denominator and always count as incorrect.
Scalar accuracy(const Partition& pred, const std::vector<int>& truth);

struct IndexReport {
    std::optional<Scalar> silhouette_overall;
    std::vector<Scalar> silhouette_per_cluster;
    std::optional<Scalar> db;
    std::optional<Scalar> dunn;
    std::optional<Scalar> rand;               // ground truth only
    std::optional<std::int64_t> mirkin_raw;   // ground truth only
    std::optional<Scalar> mirkin_normalized;  // ground truth only
    std::optional<Scalar> accuracy;           // ground truth only
    Index excluded_noise = 0;
    std::vector<std::string> errors; // per-index failures, "index: reason"
};

// Computes every applicable index, capturing per-index failures in
// report.errors instead of throwing. External indices are computed only
// when the dataset carries ground-truth labels.
IndexReport compute_index_report(const Dataset& d, const Partition& p, Metric m);

} // namespace swarmclust
