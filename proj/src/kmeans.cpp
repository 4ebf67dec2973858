#include "swarmclust/kmeans.hpp"

#include <stdexcept>

#include "swarmclust/rng.hpp"

namespace swarmclust {

Scalar sse_fitness(const Dataset& d, const Matrix& centroids, const Partition& p, Metric m) {
    if (centroids.cols() != d.n_features())
        throw std::invalid_argument("sse_fitness: centroid/dataset feature mismatch");
    if (p.size() != d.n_objects())
        throw std::invalid_argument("sse_fitness: partition/dataset size mismatch");

    Scalar total = 0.0;
    for (Index i = 0; i < d.n_objects(); ++i) {
        const int id = p.assignment[static_cast<std::size_t>(i)];
        if (id == kNoiseLabel)
            throw std::invalid_argument("sse_fitness: noise labels present");
        if (id < 0 || id >= centroids.rows())
            throw std::invalid_argument("sse_fitness: assignment id out of range");
        total += squared_distance(d.points.row(i), centroids.row(id), m);
    }
    return total;
}

Matrix sample_initial_centroids(const Dataset& d, int k, Rng& rng) {
    const auto idx = rng.sample_without_replacement(static_cast<std::size_t>(d.n_objects()),
                                                    static_cast<std::size_t>(k));
    Matrix centroids(k, d.n_features());
    for (int c = 0; c < k; ++c) centroids.row(c) = d.points.row(static_cast<Index>(idx[static_cast<std::size_t>(c)]));
    return centroids;
}

KMeansResult kmeans_run(const Dataset& d, const KMeansConfig& cfg) {
    if (cfg.k < 1 || static_cast<Index>(cfg.k) > d.n_objects())
        throw std::invalid_argument("kmeans_run: k = " + std::to_string(cfg.k) +
                                    " outside [1, " + std::to_string(d.n_objects()) + "]");
    if (cfg.max_iter < 1) throw std::invalid_argument("kmeans_run: max_iter must be >= 1");
    if (cfg.tol < 0) throw std::invalid_argument("kmeans_run: tol must be >= 0");

    Matrix centroids;
    if (cfg.init_centroids) {
        centroids = *cfg.init_centroids;
        if (centroids.rows() != cfg.k || centroids.cols() != d.n_features())
            throw std::invalid_argument("kmeans_run: explicit centroids have wrong shape");
    } else {
        Rng rng(cfg.seed);
        centroids = sample_initial_centroids(d, cfg.k, rng);
    }

    KMeansResult res;
    std::vector<int> prev_assignment;
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        AssignResult assigned = assign_with_repair(d, centroids, cfg.metric);
        res.partition = std::move(assigned.partition);
        res.iterations = iter;

        if (res.partition.assignment == prev_assignment) break;
        prev_assignment = res.partition.assignment;

        const Matrix updated = compute_centroids(d, res.partition);
        Scalar total_shift = 0.0;
        for (int c = 0; c < cfg.k; ++c)
            total_shift += distance(centroids.row(c), updated.row(c), cfg.metric);
        centroids = updated;
        if (total_shift / static_cast<Scalar>(cfg.k) < cfg.tol) break;
    }

    res.centroids = centroids;
    res.fitness = sse_fitness(d, res.centroids, res.partition, cfg.metric);
    return res;
}

} // namespace swarmclust
