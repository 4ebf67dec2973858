#include "swarmclust/density_hier.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace swarmclust {

Linkage linkage_from_string(const std::string& name) {
    if (name == "single") return Linkage::single;
    if (name == "complete") return Linkage::complete;
    if (name == "average") return Linkage::average;
    throw std::invalid_argument("unknown linkage '" + name +
                                "' (expected single, complete, or average)");
}

std::string to_string(Linkage l) {
    switch (l) {
        case Linkage::single: return "single";
        case Linkage::complete: return "complete";
        case Linkage::average: return "average";
    }
    return "?";
}

std::vector<Index> region_query(const Dataset& d, Index idx, Scalar eps, Metric m) {
    if (idx < 0 || idx >= d.n_objects())
        throw std::invalid_argument("region_query: index " + std::to_string(idx) + " out of range");
    std::vector<Index> neighbors;
    for (Index j = 0; j < d.n_objects(); ++j)
        if (distance(d.points.row(idx), d.points.row(j), m) <= eps) neighbors.push_back(j);
    return neighbors;
}

Partition dbscan_run(const Dataset& d, const DbscanConfig& cfg) {
    if (!(cfg.eps > 0)) throw std::invalid_argument("dbscan_run: eps must be > 0");
    if (cfg.minpts < 1) throw std::invalid_argument("dbscan_run: minpts must be >= 1");

    constexpr int kUnvisited = -2;
    const Index n = d.n_objects();
    std::vector<int> label(static_cast<std::size_t>(n), kUnvisited);
    int next_cluster = 0;

    for (Index i = 0; i < n; ++i) {
        if (label[static_cast<std::size_t>(i)] != kUnvisited) continue;
        std::vector<Index> neighbors = region_query(d, i, cfg.eps, cfg.metric);
        if (static_cast<int>(neighbors.size()) < cfg.minpts) {
            label[static_cast<std::size_t>(i)] = kNoiseLabel;
            continue;
        }

        const int cluster = next_cluster++;
        label[static_cast<std::size_t>(i)] = cluster;
        std::deque<Index> frontier(neighbors.begin(), neighbors.end());
        while (!frontier.empty()) {
            const Index q = frontier.front();
            frontier.pop_front();
            int& q_label = label[static_cast<std::size_t>(q)];
            if (q_label == kNoiseLabel) q_label = cluster; // border point
            if (q_label != kUnvisited) continue;
            q_label = cluster;
            std::vector<Index> q_neighbors = region_query(d, q, cfg.eps, cfg.metric);
            if (static_cast<int>(q_neighbors.size()) >= cfg.minpts)
                frontier.insert(frontier.end(), q_neighbors.begin(), q_neighbors.end());
        }
    }

    Partition p;
    p.assignment = std::move(label);
    p.n_clusters = next_cluster;
    return p;
}

Partition hierarchical_run(const Dataset& d, const HierConfig& cfg) {
    const Index n = d.n_objects();
    if (cfg.k < 1 || static_cast<Index>(cfg.k) > n)
        throw std::invalid_argument("hierarchical_run: k = " + std::to_string(cfg.k) +
                                    " outside [1, " + std::to_string(n) + "]");

    // Lance-Williams style updates on a dense cluster-distance matrix.
    // Cluster ids are row indices; a merge keeps the smaller id.
    Matrix dist(n, n);
    for (Index i = 0; i < n; ++i) {
        dist(i, i) = 0.0;
        for (Index j = i + 1; j < n; ++j) {
            const Scalar dij = distance(d.points.row(i), d.points.row(j), cfg.metric);
            dist(i, j) = dij;
            dist(j, i) = dij;
        }
    }

    std::vector<bool> active(static_cast<std::size_t>(n), true);
    std::vector<Index> sizes(static_cast<std::size_t>(n), 1);
    std::vector<int> membership(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) membership[static_cast<std::size_t>(i)] = static_cast<int>(i);

    for (Index merges = 0; merges < n - cfg.k; ++merges) {
        Index best_i = -1;
        Index best_j = -1;
        Scalar best = std::numeric_limits<Scalar>::infinity();
        for (Index i = 0; i < n; ++i) {
            if (!active[static_cast<std::size_t>(i)]) continue;
            for (Index j = i + 1; j < n; ++j) {
                if (!active[static_cast<std::size_t>(j)]) continue;
                if (dist(i, j) < best) { // strict: ties keep the smallest (i, j)
                    best = dist(i, j);
                    best_i = i;
                    best_j = j;
                }
            }
        }

        const Scalar si = static_cast<Scalar>(sizes[static_cast<std::size_t>(best_i)]);
        const Scalar sj = static_cast<Scalar>(sizes[static_cast<std::size_t>(best_j)]);
        for (Index h = 0; h < n; ++h) {
            if (!active[static_cast<std::size_t>(h)] || h == best_i || h == best_j) continue;
            Scalar merged = 0.0;
            switch (cfg.linkage) {
                case Linkage::single: merged = std::min(dist(best_i, h), dist(best_j, h)); break;
                case Linkage::complete: merged = std::max(dist(best_i, h), dist(best_j, h)); break;
                case Linkage::average:
                    merged = (si * dist(best_i, h) + sj * dist(best_j, h)) / (si + sj);
                    break;
            }
            dist(best_i, h) = merged;
            dist(h, best_i) = merged;
        }
        sizes[static_cast<std::size_t>(best_i)] += sizes[static_cast<std::size_t>(best_j)];
        active[static_cast<std::size_t>(best_j)] = false;
        for (Index i = 0; i < n; ++i)
            if (membership[static_cast<std::size_t>(i)] == static_cast<int>(best_j))
                membership[static_cast<std::size_t>(i)] = static_cast<int>(best_i);
    }

    // Relabel surviving clusters 0..k-1 by smallest member index, which is
    // exactly the ascending order of the surviving ids.
    std::vector<int> compact(static_cast<std::size_t>(n), -1);
    int next = 0;
    Partition p;
    p.n_clusters = cfg.k;
    p.assignment.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        const int id = membership[static_cast<std::size_t>(i)];
        if (compact[static_cast<std::size_t>(id)] < 0) compact[static_cast<std::size_t>(id)] = next++;
        p.assignment[static_cast<std::size_t>(i)] = compact[static_cast<std::size_t>(id)];
    }
    return p;
}

} // namespace swarmclust
