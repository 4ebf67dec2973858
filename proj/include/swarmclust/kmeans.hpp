#pragma once

#include <cstdint>
#include <optional>

#include "swarmclust/dataset.hpp"
#include "swarmclust/partition.hpp"

namespace swarmclust {

struct KMeansConfig {
    int k = 2;
    int max_iter = 300;
    Scalar tol = 1e-6; // mean centroid displacement below which we stop
    Metric metric = Metric::euclidean;
    std::uint64_t seed = 0;
    std::optional<Matrix> init_centroids; // explicit start; k distinct data rows otherwise
};

struct KMeansResult {
    Partition partition;
    Matrix centroids;
    Scalar fitness = 0.0;
    int iterations = 0;
};

// Clustering objective: sum over all points of the squared distance to their
// assigned centroid. Under the manhattan metric the summand is the squared
// L1 distance; squared_euclidean shares the euclidean objective.
Scalar sse_fitness(const Dataset& d, const Matrix& centroids, const Partition& p, Metric m);

// Lloyd iterations: assign to nearest centroid, recompute means, stop when
// the assignment is unchanged, the mean centroid displacement drops below
// tol, or max_iter is reached. Emptied clusters are re-seeded via the
// repair rule so k stays fixed. Deterministic for a fixed seed.
KMeansResult kmeans_run(const Dataset& d, const KMeansConfig& cfg);

// Shared by k-means and PSO initialization: k distinct data rows drawn
// uniformly without replacement.
Matrix sample_initial_centroids(const Dataset& d, int k, class Rng& rng);

} // namespace swarmclust
