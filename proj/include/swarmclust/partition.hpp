#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swarmclust/dataset.hpp"
#include "swarmclust/types.hpp"

namespace swarmclust {

// Reserved assignment value for points that belong to no cluster.
// Only density-based clustering produces it.
inline constexpr int kNoiseLabel = -1;

struct Partition {
    std::vector<int> assignment; // values in [0, n_clusters) or kNoiseLabel
    int n_clusters = 0;

    Index size() const { return static_cast<Index>(assignment.size()); }
    bool has_noise() const;
    Index n_noise() const;
};

std::vector<Index> cluster_sizes(const Partition& p);

// Member indices per cluster, ascending; noise points are not listed.
std::vector<std::vector<Index>> cluster_members(const Partition& p);

// Throws unless every id is in range, no noise is present, and every
// cluster in [0, n_clusters) has at least one member.
void validate_complete(const Partition& p);

struct AssignResult {
    Partition partition;
    std::vector<int> empty_clusters; // centroid ids that captured zero points
};

// Assigns every object to the nearest centroid; ties go to the lowest
// centroid index. Centroids that capture no points are reported, not
// treated as an error.
AssignResult assign_nearest(const Dataset& d, const Matrix& centroids, Metric m);

// Arithmetic mean of each cluster's members. Requires a complete partition.
Matrix compute_centroids(const Dataset& d, const Partition& p);

// assign_nearest plus the empty-cluster repair rule: an emptied centroid is
// re-seeded to the point farthest from its nearest centroid, then assignment
// is recomputed. Keeps the cluster count fixed. Mutates `centroids`.
AssignResult assign_with_repair(const Dataset& d, Matrix& centroids, Metric m);

struct ContingencyTable {
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts; // k x l
    std::vector<std::int64_t> row_sizes;
    std::vector<std::int64_t> col_sizes;
    std::int64_t n = 0;
};

// counts(i, j) = number of objects labeled i in `a` and j in `b`.
// Noise must be filtered by the caller; negative ids throw.
ContingencyTable contingency(const Partition& a, const Partition& b);
ContingencyTable contingency(const std::vector<int>& a, const std::vector<int>& b);

// Single-column CSV of integer labels, noise written as -1.
void save_labels_csv(const Partition& p, const std::string& path);

// Reads a single-column label file. Non-noise ids are compacted to
// 0..k-1 in order of first appearance; -1 is kept as noise.
Partition load_labels_csv(const std::string& path);

} // namespace swarmclust
