#pragma once

#include <string>
#include <vector>

#include "swarmclust/dataset.hpp"
#include "swarmclust/partition.hpp"

namespace swarmclust {

struct DbscanConfig {
    Scalar eps = 1.0;  // neighborhood radius (closed ball)
    int minpts = 5;    // core-point threshold, neighborhood includes the point itself
    Metric metric = Metric::euclidean;
};

enum class Linkage { single, complete, average };

Linkage linkage_from_string(const std::string& name);
std::string to_string(Linkage l);

struct HierConfig {
    int k = 2;
    Linkage linkage = Linkage::average;
    Metric metric = Metric::euclidean;
};

// All indices j (including idx) with distance(points[idx], points[j]) <= eps.
std::vector<Index> region_query(const Dataset& d, Index idx, Scalar eps, Metric m);

// Density-reachability expansion in ascending object-index order. Border
// points join the first cluster that reaches them; unreachable points are
// labeled noise. Deterministic.
Partition dbscan_run(const Dataset& d, const DbscanConfig& cfg);

// Agglomerative merging from singletons until k clusters remain. Merge ties
// are broken by the smallest pair of cluster ids. Cluster ids in the result
// are ordered by each cluster's smallest member index. Deterministic.
Partition hierarchical_run(const Dataset& d, const HierConfig& cfg);

} // namespace swarmclust
