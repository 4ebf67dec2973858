#include "swarmclust/partition.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace swarmclust {

bool Partition::has_noise() const {
    return std::find(assignment.begin(), assignment.end(), kNoiseLabel) != assignment.end();
}

Index Partition::n_noise() const {
    return static_cast<Index>(std::count(assignment.begin(), assignment.end(), kNoiseLabel));
}

std::vector<Index> cluster_sizes(const Partition& p) {
    std::vector<Index> sizes(static_cast<std::size_t>(p.n_clusters), 0);
    for (int id : p.assignment) {
        if (id == kNoiseLabel) continue;
        if (id < 0 || id >= p.n_clusters)
            throw std::invalid_argument("partition: assignment id " + std::to_string(id) +
                                        " outside [0, " + std::to_string(p.n_clusters) + ")");
        ++sizes[static_cast<std::size_t>(id)];
    }
    return sizes;
}

std::vector<std::vector<Index>> cluster_members(const Partition& p) {
    std::vector<std::vector<Index>> members(static_cast<std::size_t>(p.n_clusters));
    for (Index i = 0; i < p.size(); ++i) {
        const int id = p.assignment[static_cast<std::size_t>(i)];
        if (id == kNoiseLabel) continue;
        if (id < 0 || id >= p.n_clusters)
            throw std::invalid_argument("partition: assignment id " + std::to_string(id) +
                                        " outside [0, " + std::to_string(p.n_clusters) + ")");
        members[static_cast<std::size_t>(id)].push_back(i);
    }
    return members;
}

void validate_complete(const Partition& p) {
    if (p.has_noise()) throw std::invalid_argument("partition: noise labels present");
    const auto sizes = cluster_sizes(p);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] == 0)
            throw std::invalid_argument("partition: cluster " + std::to_string(i) + " is empty");
}

AssignResult assign_nearest(const Dataset& d, const Matrix& centroids, Metric m) {
    if (centroids.cols() != d.n_features())
        throw std::invalid_argument("assign_nearest: centroids have " +
                                    std::to_string(centroids.cols()) + " features, dataset has " +
                                    std::to_string(d.n_features()));
    if (centroids.rows() < 1) throw std::invalid_argument("assign_nearest: no centroids");

    const Index k = centroids.rows();
    AssignResult res;
    res.partition.n_clusters = static_cast<int>(k);
    res.partition.assignment.resize(static_cast<std::size_t>(d.n_objects()));

    for (Index i = 0; i < d.n_objects(); ++i) {
        Index best = 0;
        Scalar best_dist = distance(d.points.row(i), centroids.row(0), m);
        for (Index c = 1; c < k; ++c) {
            const Scalar dist = distance(d.points.row(i), centroids.row(c), m);
            if (dist < best_dist) { // strict: ties keep the lowest index
                best_dist = dist;
                best = c;
            }
        }
        res.partition.assignment[static_cast<std::size_t>(i)] = static_cast<int>(best);
    }

    const auto sizes = cluster_sizes(res.partition);
    for (Index c = 0; c < k; ++c)
        if (sizes[static_cast<std::size_t>(c)] == 0) res.empty_clusters.push_back(static_cast<int>(c));
    return res;
}

Matrix compute_centroids(const Dataset& d, const Partition& p) {
    if (p.size() != d.n_objects())
        throw std::invalid_argument("compute_centroids: partition covers " +
                                    std::to_string(p.size()) + " objects, dataset has " +
                                    std::to_string(d.n_objects()));
    validate_complete(p);

    Matrix centers = Matrix::Zero(p.n_clusters, d.n_features());
    std::vector<Index> counts(static_cast<std::size_t>(p.n_clusters), 0);
    for (Index i = 0; i < d.n_objects(); ++i) {
        const int id = p.assignment[static_cast<std::size_t>(i)];
        centers.row(id) += d.points.row(i);
        ++counts[static_cast<std::size_t>(id)];
    }
    for (int c = 0; c < p.n_clusters; ++c)
        centers.row(c) /= static_cast<Scalar>(counts[static_cast<std::size_t>(c)]);
    return centers;
}

AssignResult assign_with_repair(const Dataset& d, Matrix& centroids, Metric m) {
    AssignResult res = assign_nearest(d, centroids, m);
    int rounds = 0;
    while (!res.empty_clusters.empty()) {
        if (++rounds > centroids.rows() + 1)
            throw std::runtime_error("assign_with_repair: cannot populate " +
                                     std::to_string(res.empty_clusters.size()) +
                                     " empty clusters (too few distinct points?)");
        // Re-seed the first empty centroid at the point farthest from its
        // nearest centroid, then reassign; repeat until no cluster is empty.
        const int empty_id = res.empty_clusters.front();
        Index farthest = 0;
        Scalar farthest_dist = -1.0;
        for (Index i = 0; i < d.n_objects(); ++i) {
            const int assigned = res.partition.assignment[static_cast<std::size_t>(i)];
            const Scalar dist = distance(d.points.row(i), centroids.row(assigned), m);
            if (dist > farthest_dist) {
                farthest_dist = dist;
                farthest = i;
            }
        }
        centroids.row(empty_id) = d.points.row(farthest);
        res = assign_nearest(d, centroids, m);
    }
    return res;
}

namespace {

ContingencyTable contingency_impl(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("contingency: label sequences have lengths " +
                                    std::to_string(a.size()) + " and " + std::to_string(b.size()));
    int ka = 0;
    int kb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || b[i] < 0)
            throw std::invalid_argument("contingency: negative (noise) label at position " +
                                        std::to_string(i));
        ka = std::max(ka, a[i] + 1);
        kb = std::max(kb, b[i] + 1);
    }

    ContingencyTable t;
    t.counts.setZero(ka, kb);
    t.row_sizes.assign(static_cast<std::size_t>(ka), 0);
    t.col_sizes.assign(static_cast<std::size_t>(kb), 0);
    t.n = static_cast<std::int64_t>(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++t.counts(a[i], b[i]);
        ++t.row_sizes[static_cast<std::size_t>(a[i])];
        ++t.col_sizes[static_cast<std::size_t>(b[i])];
    }
    return t;
}

} // namespace

ContingencyTable contingency(const Partition& a, const Partition& b) {
    return contingency_impl(a.assignment, b.assignment);
}

ContingencyTable contingency(const std::vector<int>& a, const std::vector<int>& b) {
    return contingency_impl(a, b);
}

void save_labels_csv(const Partition& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    for (int id : p.assignment) out << id << '\n';
    if (!out) throw std::runtime_error(path + ": write failed");
}

Partition load_labels_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");

    Partition p;
    std::unordered_map<int, int> remap;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        std::string cell = line;
        cell.erase(std::remove_if(cell.begin(), cell.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   cell.end());
        if (cell.empty()) continue;
        int value = 0;
        try {
            std::size_t pos = 0;
            value = std::stoi(cell, &pos);
            if (pos != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw std::runtime_error(path + ": row " + std::to_string(row) + ": '" + cell +
                                     "' is not an integer label");
        }
        if (value == kNoiseLabel) {
            p.assignment.push_back(kNoiseLabel);
            continue;
        }
        if (value < 0)
            throw std::runtime_error(path + ": row " + std::to_string(row) +
                                     ": negative label (only -1 marks noise)");
        auto [it, inserted] = remap.try_emplace(value, static_cast<int>(remap.size()));
        p.assignment.push_back(it->second);
    }
    if (p.assignment.empty()) throw std::runtime_error(path + ": no labels");
    p.n_clusters = static_cast<int>(remap.size());
    return p;
}

} // namespace swarmclust
