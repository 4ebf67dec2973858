#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swarmclust/dataset.hpp"
#include "swarmclust/kmeans.hpp"
#include "swarmclust/partition.hpp"

namespace swarmclust {

enum class PsoVariant { simple, canonical };

PsoVariant pso_variant_from_string(const std::string& name);
std::string to_string(PsoVariant v);

struct PsoConfig {
    PsoVariant variant = PsoVariant::canonical;
    int n_particles = 20;
    Scalar c1 = 2.05; // cognitive weight
    Scalar c2 = 2.05; // social weight
    std::optional<Scalar> chi; // constriction coefficient; default derives from c1 + c2
    int max_iter = 100;
    Scalar tol = 0.0; // mean global-best displacement stop; 0 disables
    int k = 2;
    Metric metric = Metric::euclidean;
    std::uint64_t seed = 0;
    bool kmeans_refine = false;          // one Lloyd step per particle per iteration
    bool per_coordinate_random = false;  // draw r1/r2 per coordinate instead of per particle
};

// A particle carries a full candidate centroid set (k x n_features).
struct Particle {
    Matrix position;
    Matrix velocity;
    Matrix best_position;
    Scalar best_fitness = 0.0;
};

struct Swarm {
    std::vector<Particle> particles;
    Matrix best_position;
    Scalar best_fitness = 0.0;
};

struct PsoResult {
    Partition partition;
    Matrix centroids;
    Scalar fitness = 0.0;
    int iterations = 0;
    std::vector<Scalar> history; // global best fitness, entry 0 = after initialization
    Swarm swarm;                 // final swarm state, for diagnostics
};

// v' = v + c1*r1*(pbest - x) + c2*r2*(gbest - x), elementwise.
Matrix velocity_update_simple(const Matrix& velocity, const Matrix& position,
                              const Matrix& pbest, const Matrix& gbest,
                              Scalar c1, Scalar c2, Scalar r1, Scalar r2);

// v' = chi * [v + c1*r1*(pbest - x) + c2*r2*(gbest - x)]. chi in (0, 1].
Matrix velocity_update_canonical(const Matrix& velocity, const Matrix& position,
                                 const Matrix& pbest, const Matrix& gbest,
                                 Scalar c1, Scalar c2, Scalar chi, Scalar r1, Scalar r2);

// x' = x + v', applied after the velocity update.
Matrix position_update(const Matrix& position, const Matrix& new_velocity);

// Clerc's constriction coefficient: chi = 2 / |2 - phi - sqrt(phi^2 - 4 phi)|
// with phi = c1 + c2, valid for phi > 4.
Scalar clerc_constriction(Scalar c1, Scalar c2);

// Swarm search over candidate centroid sets, minimizing the clustering
// objective. Each particle starts from k distinct data rows with zero
// velocity; personal and global bests are updated every iteration; the
// winning centroid set is decoded into a partition at the end. With
// kmeans_refine, one Lloyd step is applied to each particle after it moves.
PsoResult pso_kmeans_run(const Dataset& d, const PsoConfig& cfg);

} // namespace swarmclust
