#include "swarmclust/swarm.hpp"

#include <cmath>
#include <stdexcept>

#include "swarmclust/rng.hpp"

namespace swarmclust {

PsoVariant pso_variant_from_string(const std::string& name) {
    if (name == "simple") return PsoVariant::simple;
    if (name == "canonical") return PsoVariant::canonical;
    throw std::invalid_argument("unknown PSO variant '" + name + "'");
}

std::string to_string(PsoVariant v) {
    return v == PsoVariant::simple ? "simple" : "canonical";
}

namespace {

void check_shapes(const Matrix& velocity, const Matrix& position,
                  const Matrix& pbest, const Matrix& gbest) {
    const auto same = [&](const Matrix& m) {
        return m.rows() == position.rows() && m.cols() == position.cols();
    };
    if (!same(velocity) || !same(pbest) || !same(gbest))
        throw std::invalid_argument("velocity update: matrix shapes disagree");
}

} // namespace

Matrix velocity_update_simple(const Matrix& velocity, const Matrix& position,
                              const Matrix& pbest, const Matrix& gbest,
                              Scalar c1, Scalar c2, Scalar r1, Scalar r2) {
    check_shapes(velocity, position, pbest, gbest);
    return velocity + c1 * r1 * (pbest - position) + c2 * r2 * (gbest - position);
}

Matrix velocity_update_canonical(const Matrix& velocity, const Matrix& position,
                                 const Matrix& pbest, const Matrix& gbest,
                                 Scalar c1, Scalar c2, Scalar chi, Scalar r1, Scalar r2) {
    if (!(chi > 0.0 && chi <= 1.0))
        throw std::invalid_argument("velocity update: chi must lie in (0, 1]");
    check_shapes(velocity, position, pbest, gbest);
    return chi * (velocity + c1 * r1 * (pbest - position) + c2 * r2 * (gbest - position));
}

Matrix position_update(const Matrix& position, const Matrix& new_velocity) {
    if (position.rows() != new_velocity.rows() || position.cols() != new_velocity.cols())
        throw std::invalid_argument("position update: matrix shapes disagree");
    return position + new_velocity;
}

Scalar clerc_constriction(Scalar c1, Scalar c2) {
    const Scalar phi = c1 + c2;
    if (!(phi > 4.0))
        throw std::invalid_argument("clerc_constriction: c1 + c2 must exceed 4 (got " +
                                    std::to_string(phi) + ")");
    return 2.0 / std::abs(2.0 - phi - std::sqrt(phi * phi - 4.0 * phi));
}

namespace {

struct Evaluation {
    Partition partition;
    Scalar fitness;
};

// Decodes a candidate centroid set: nearest-centroid assignment with the
// empty-cluster repair rule (which may move centroids, hence by reference).
Evaluation evaluate(const Dataset& d, Matrix& position, Metric m) {
    AssignResult assigned = assign_with_repair(d, position, m);
    Scalar fitness = sse_fitness(d, position, assigned.partition, m);
    return {std::move(assigned.partition), fitness};
}

Matrix random_factor(Rng& rng, Index rows, Index cols, bool per_coordinate) {
    if (!per_coordinate) return Matrix::Constant(rows, cols, rng.uniform01());
    Matrix r(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) r(i, j) = rng.uniform01();
    return r;
}

} // namespace

PsoResult pso_kmeans_run(const Dataset& d, const PsoConfig& cfg) {
    if (cfg.k < 1 || static_cast<Index>(cfg.k) > d.n_objects())
        throw std::invalid_argument("pso_kmeans_run: k = " + std::to_string(cfg.k) +
                                    " outside [1, " + std::to_string(d.n_objects()) + "]");
    if (cfg.n_particles < 1) throw std::invalid_argument("pso_kmeans_run: need at least one particle");
    if (cfg.max_iter < 1) throw std::invalid_argument("pso_kmeans_run: max_iter must be >= 1");
    if (cfg.c1 < 0 || cfg.c2 < 0) throw std::invalid_argument("pso_kmeans_run: c1, c2 must be >= 0");
    if (cfg.tol < 0) throw std::invalid_argument("pso_kmeans_run: tol must be >= 0");

    Scalar chi = 1.0;
    if (cfg.variant == PsoVariant::canonical) {
        chi = cfg.chi ? *cfg.chi : clerc_constriction(cfg.c1, cfg.c2);
        if (!(chi > 0.0 && chi <= 1.0))
            throw std::invalid_argument("pso_kmeans_run: chi must lie in (0, 1]");
    }

    Rng rng(cfg.seed);
    Swarm swarm;
    swarm.particles.reserve(static_cast<std::size_t>(cfg.n_particles));
    for (int p = 0; p < cfg.n_particles; ++p) {
        Particle particle;
        particle.position = sample_initial_centroids(d, cfg.k, rng);
        particle.velocity = Matrix::Zero(cfg.k, d.n_features());
        const Evaluation eval = evaluate(d, particle.position, cfg.metric);
        particle.best_position = particle.position;
        particle.best_fitness = eval.fitness;
        swarm.particles.push_back(std::move(particle));
    }
    swarm.best_fitness = swarm.particles.front().best_fitness;
    swarm.best_position = swarm.particles.front().best_position;
    for (const Particle& p : swarm.particles) {
        if (p.best_fitness < swarm.best_fitness) {
            swarm.best_fitness = p.best_fitness;
            swarm.best_position = p.best_position;
        }
    }

    PsoResult res;
    res.history.push_back(swarm.best_fitness);

    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        const Matrix previous_best = swarm.best_position;

        for (Particle& particle : swarm.particles) {
            const Matrix r1 = random_factor(rng, cfg.k, d.n_features(), cfg.per_coordinate_random);
            const Matrix r2 = random_factor(rng, cfg.k, d.n_features(), cfg.per_coordinate_random);
            Matrix bracket = particle.velocity +
                             cfg.c1 * r1.cwiseProduct(particle.best_position - particle.position) +
                             cfg.c2 * r2.cwiseProduct(swarm.best_position - particle.position);
            particle.velocity = (cfg.variant == PsoVariant::canonical) ? Matrix(chi * bracket)
                                                                       : std::move(bracket);
            particle.position = position_update(particle.position, particle.velocity);

            if (cfg.kmeans_refine) {
                // One Lloyd step pulls the candidate back onto cluster means.
                AssignResult assigned = assign_with_repair(d, particle.position, cfg.metric);
                particle.position = compute_centroids(d, assigned.partition);
            }

            const Evaluation eval = evaluate(d, particle.position, cfg.metric);
            if (eval.fitness < particle.best_fitness) {
                particle.best_fitness = eval.fitness;
                particle.best_position = particle.position;
            }
        }

        // Deterministic fold in particle-index order.
        for (const Particle& p : swarm.particles) {
            if (p.best_fitness < swarm.best_fitness) {
                swarm.best_fitness = p.best_fitness;
                swarm.best_position = p.best_position;
            }
        }

        res.history.push_back(swarm.best_fitness);
        res.iterations = iter;

        if (cfg.tol > 0.0) {
            Scalar total_shift = 0.0;
            for (int c = 0; c < cfg.k; ++c)
                total_shift += distance(previous_best.row(c), swarm.best_position.row(c), cfg.metric);
            if (total_shift / static_cast<Scalar>(cfg.k) < cfg.tol) break;
        }
    }

    res.centroids = swarm.best_position;
    const Evaluation final_eval = evaluate(d, res.centroids, cfg.metric);
    res.partition = final_eval.partition;
    res.fitness = final_eval.fitness;
    res.swarm = std::move(swarm);
    return res;
}

} // namespace swarmclust
