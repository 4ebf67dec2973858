#include "swarmclust/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swarmclust {

namespace {

constexpr Scalar kNaN = std::numeric_limits<Scalar>::quiet_NaN();

// Non-noise member lists with empty clusters dropped.
std::vector<std::vector<Index>> occupied_clusters(const Partition& p) {
    std::vector<std::vector<Index>> members = cluster_members(p);
    members.erase(std::remove_if(members.begin(), members.end(),
                                 [](const std::vector<Index>& c) { return c.empty(); }),
                  members.end());
    return members;
}

Matrix member_means(const Dataset& d, const std::vector<std::vector<Index>>& members) {
    Matrix centers = Matrix::Zero(static_cast<Index>(members.size()), d.n_features());
    for (std::size_t c = 0; c < members.size(); ++c) {
        for (Index i : members[c]) centers.row(static_cast<Index>(c)) += d.points.row(i);
        centers.row(static_cast<Index>(c)) /= static_cast<Scalar>(members[c].size());
    }
    return centers;
}

Scalar cluster_diameter(const Dataset& d, const std::vector<Index>& members, Metric m) {
    Scalar diam = 0.0;
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            diam = std::max(diam, distance(d.points.row(members[a]), d.points.row(members[b]), m));
    return diam;
}

Scalar min_intercluster(const Dataset& d, const std::vector<Index>& ca,
                        const std::vector<Index>& cb, Metric m) {
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (Index i : ca)
        for (Index j : cb) best = std::min(best, distance(d.points.row(i), d.points.row(j), m));
    return best;
}

} // namespace

SilhouetteResult silhouette(const Dataset& d, const Partition& p, Metric m) {
    if (p.size() != d.n_objects())
        throw std::invalid_argument("silhouette: partition/dataset size mismatch");
    const auto members = occupied_clusters(p);
    const std::size_t k = members.size();
    if (k < 2) throw std::invalid_argument("silhouette: needs at least 2 non-empty clusters");

    // cluster index per point among the occupied clusters
    std::vector<int> which(static_cast<std::size_t>(d.n_objects()), -1);
    for (std::size_t c = 0; c < k; ++c)
        for (Index i : members[c]) which[static_cast<std::size_t>(i)] = static_cast<int>(c);

    SilhouetteResult res;
    res.per_sample.assign(static_cast<std::size_t>(d.n_objects()), kNaN);
    res.per_cluster.assign(k, 0.0);

    Scalar total = 0.0;
    Index included = 0;
    for (Index i = 0; i < d.n_objects(); ++i) {
        const int own = which[static_cast<std::size_t>(i)];
        if (own < 0) continue; // noise

        Scalar s = 0.0;
        if (members[static_cast<std::size_t>(own)].size() > 1) {
            std::vector<Scalar> mean_dist(k, 0.0);
            for (std::size_t c = 0; c < k; ++c) {
                Scalar sum = 0.0;
                for (Index j : members[c])
                    if (j != i) sum += distance(d.points.row(i), d.points.row(j), m);
                const std::size_t denom =
                    members[c].size() - (c == static_cast<std::size_t>(own) ? 1 : 0);
                mean_dist[c] = sum / static_cast<Scalar>(denom);
            }
            const Scalar a = mean_dist[static_cast<std::size_t>(own)];
            Scalar b = std::numeric_limits<Scalar>::infinity();
            for (std::size_t c = 0; c < k; ++c)
                if (c != static_cast<std::size_t>(own)) b = std::min(b, mean_dist[c]);
            const Scalar widest = std::max(a, b);
            s = widest > 0.0 ? (b - a) / widest : 0.0;
        }
        res.per_sample[static_cast<std::size_t>(i)] = s;
        res.per_cluster[static_cast<std::size_t>(own)] += s;
        total += s;
        ++included;
    }

    for (std::size_t c = 0; c < k; ++c)
        res.per_cluster[c] /= static_cast<Scalar>(members[c].size());
    res.overall = total / static_cast<Scalar>(included);
    return res;
}

DaviesBouldinComponents davies_bouldin_components(const Dataset& d, const Partition& p,
                                                  const Matrix& centroids, Metric m) {
    if (p.size() != d.n_objects())
        throw std::invalid_argument("davies_bouldin: partition/dataset size mismatch");
    const auto members = occupied_clusters(p);
    const Index k = static_cast<Index>(members.size());
    if (k < 2) throw std::invalid_argument("davies_bouldin: needs at least 2 non-empty clusters");
    if (centroids.rows() != k || centroids.cols() != d.n_features())
        throw std::invalid_argument("davies_bouldin: centroid matrix has the wrong shape");

    DaviesBouldinComponents out;
    out.scatter.resize(static_cast<std::size_t>(k));
    for (Index c = 0; c < k; ++c) {
        Scalar sum = 0.0;
        for (Index i : members[static_cast<std::size_t>(c)])
            sum += distance(d.points.row(i), centroids.row(c), m);
        out.scatter[static_cast<std::size_t>(c)] =
            sum / static_cast<Scalar>(members[static_cast<std::size_t>(c)].size());
    }

    out.ratios = Matrix::Zero(k, k);
    for (Index i = 0; i < k; ++i) {
        for (Index j = i + 1; j < k; ++j) {
            const Scalar separation = distance(centroids.row(i), centroids.row(j), m);
            if (separation == 0.0)
                throw std::invalid_argument("davies_bouldin: centroids of clusters " +
                                            std::to_string(i) + " and " + std::to_string(j) +
                                            " coincide");
            const Scalar ratio = (out.scatter[static_cast<std::size_t>(i)] +
                                  out.scatter[static_cast<std::size_t>(j)]) /
                                 separation;
            out.ratios(i, j) = ratio;
            out.ratios(j, i) = ratio;
        }
    }

    out.cluster_max.resize(static_cast<std::size_t>(k));
    Scalar total = 0.0;
    for (Index i = 0; i < k; ++i) {
        Scalar worst = 0.0;
        for (Index j = 0; j < k; ++j)
            if (j != i) worst = std::max(worst, out.ratios(i, j));
        out.cluster_max[static_cast<std::size_t>(i)] = worst;
        total += worst;
    }
    out.value = total / static_cast<Scalar>(k);
    return out;
}

Scalar davies_bouldin(const Dataset& d, const Partition& p, Metric m) {
    const auto members = occupied_clusters(p);
    if (members.size() < 2)
        throw std::invalid_argument("davies_bouldin: needs at least 2 non-empty clusters");
    const Matrix centroids = member_means(d, members);

    // Rebuild a compact partition over the occupied clusters so the
    // component computation sees consistent ids.
    Partition compact;
    compact.n_clusters = static_cast<int>(members.size());
    compact.assignment.assign(static_cast<std::size_t>(d.n_objects()), kNoiseLabel);
    for (std::size_t c = 0; c < members.size(); ++c)
        for (Index i : members[c]) compact.assignment[static_cast<std::size_t>(i)] = static_cast<int>(c);

    return davies_bouldin_components(d, compact, centroids, m).value;
}

Scalar dunn(const Dataset& d, const Partition& p, Metric m) {
    if (p.size() != d.n_objects())
        throw std::invalid_argument("dunn: partition/dataset size mismatch");
    const auto members = occupied_clusters(p);
    const std::size_t k = members.size();
    if (k < 2) throw std::invalid_argument("dunn: needs at least 2 non-empty clusters");

    Scalar max_diam = 0.0;
    for (const auto& cluster : members) max_diam = std::max(max_diam, cluster_diameter(d, cluster, m));
    if (max_diam == 0.0)
        throw std::invalid_argument("dunn: every cluster has zero diameter");

    Scalar min_inter = std::numeric_limits<Scalar>::infinity();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            min_inter = std::min(min_inter, min_intercluster(d, members[i], members[j], m));
    return min_inter / max_diam;
}

Matrix dunn_pair_table(const Dataset& d, const Partition& p, Metric m) {
    if (p.size() != d.n_objects())
        throw std::invalid_argument("dunn_pair_table: partition/dataset size mismatch");
    const auto members = occupied_clusters(p);
    const Index k = static_cast<Index>(members.size());
    if (k < 2) throw std::invalid_argument("dunn_pair_table: needs at least 2 non-empty clusters");

    std::vector<Scalar> diam(static_cast<std::size_t>(k));
    for (Index c = 0; c < k; ++c)
        diam[static_cast<std::size_t>(c)] = cluster_diameter(d, members[static_cast<std::size_t>(c)], m);

    Matrix table = Matrix::Constant(k, k, kNaN);
    for (Index i = 0; i < k; ++i) {
        if (diam[static_cast<std::size_t>(i)] == 0.0) continue;
        for (Index j = 0; j < k; ++j) {
            if (j == i) continue;
            const Scalar inter = min_intercluster(d, members[static_cast<std::size_t>(i)],
                                                  members[static_cast<std::size_t>(j)], m);
            table(i, j) = inter / diam[static_cast<std::size_t>(i)];
        }
    }
    return table;
}

namespace {

std::int64_t pairs_of(std::int64_t c) { return c * (c - 1) / 2; }

} // namespace

Scalar rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    const ContingencyTable t = contingency(a, b);
    if (t.n < 2) throw std::invalid_argument("rand_index: needs at least 2 objects");

    std::int64_t together_both = 0;
    for (Index i = 0; i < t.counts.rows(); ++i)
        for (Index j = 0; j < t.counts.cols(); ++j) together_both += pairs_of(t.counts(i, j));
    std::int64_t together_a = 0;
    for (std::int64_t r : t.row_sizes) together_a += pairs_of(r);
    std::int64_t together_b = 0;
    for (std::int64_t c : t.col_sizes) together_b += pairs_of(c);

    const std::int64_t all_pairs = pairs_of(t.n);
    const std::int64_t agreements =
        together_both + (all_pairs - together_a - together_b + together_both);
    return static_cast<Scalar>(agreements) / static_cast<Scalar>(all_pairs);
}

MirkinResult mirkin(const std::vector<int>& a, const std::vector<int>& b) {
    const ContingencyTable t = contingency(a, b);

    std::int64_t raw = 0;
    for (std::int64_t r : t.row_sizes) raw += r * r;
    for (std::int64_t c : t.col_sizes) raw += c * c;
    for (Index i = 0; i < t.counts.rows(); ++i)
        for (Index j = 0; j < t.counts.cols(); ++j) raw -= 2 * t.counts(i, j) * t.counts(i, j);

    MirkinResult res;
    res.raw = raw;
    res.normalized = static_cast<Scalar>(raw) / (static_cast<Scalar>(t.n) * static_cast<Scalar>(t.n));
    return res;
}

Scalar accuracy(const Partition& pred, const std::vector<int>& truth) {
    if (truth.empty()) throw std::invalid_argument("accuracy: ground truth missing");
    if (pred.size() != static_cast<Index>(truth.size()))
        throw std::invalid_argument("accuracy: prediction covers " + std::to_string(pred.size()) +
                                    " objects, truth has " + std::to_string(truth.size()));

    std::vector<int> pred_ids;
    std::vector<int> truth_ids;
    pred_ids.reserve(truth.size());
    truth_ids.reserve(truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (pred.assignment[i] == kNoiseLabel) continue; // counted incorrect
        pred_ids.push_back(pred.assignment[i]);
        truth_ids.push_back(truth[i]);
    }
    if (pred_ids.empty()) return 0.0;

    const ContingencyTable t = contingency(pred_ids, truth_ids);
    const Index k = t.counts.rows();
    const Index l = t.counts.cols();
    if (l > 16)
        throw std::invalid_argument("accuracy: exact mapping supports at most 16 classes");

    // Maximum-weight injective mapping of clusters to classes: subset DP over
    // classes, one row (cluster) at a time; a cluster may stay unmapped.
    const std::size_t n_masks = std::size_t{1} << l;
    std::vector<std::int64_t> dp(n_masks, 0);
    for (Index r = 0; r < k; ++r) {
        std::vector<std::int64_t> next = dp;
        for (std::size_t mask = 0; mask < n_masks; ++mask) {
            for (Index j = 0; j < l; ++j) {
                if (mask & (std::size_t{1} << j)) {
                    const std::int64_t candidate =
                        dp[mask ^ (std::size_t{1} << j)] + t.counts(r, j);
                    next[mask] = std::max(next[mask], candidate);
                }
            }
        }
        dp = std::move(next);
    }
    const std::int64_t best = dp[n_masks - 1];
    return static_cast<Scalar>(best) / static_cast<Scalar>(truth.size());
}

IndexReport compute_index_report(const Dataset& d, const Partition& p, Metric m) {
    IndexReport report;
    report.excluded_noise = p.n_noise();

    const auto guarded = [&report](const char* name, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            const std::string what = e.what();
            report.errors.push_back(what.rfind(name, 0) == 0 ? what
                                                             : std::string(name) + ": " + what);
        }
    };

    guarded("silhouette", [&] {
        const SilhouetteResult s = silhouette(d, p, m);
        report.silhouette_overall = s.overall;
        report.silhouette_per_cluster = s.per_cluster;
    });
    guarded("db", [&] { report.db = davies_bouldin(d, p, m); });
    guarded("dunn", [&] { report.dunn = dunn(d, p, m); });

    if (d.has_labels()) {
        std::vector<int> pred_ids;
        std::vector<int> truth_ids;
        for (Index i = 0; i < p.size(); ++i) {
            const int id = p.assignment[static_cast<std::size_t>(i)];
            if (id == kNoiseLabel) continue;
            pred_ids.push_back(id);
            truth_ids.push_back(d.labels[static_cast<std::size_t>(i)]);
        }
        guarded("rand", [&] { report.rand = rand_index(pred_ids, truth_ids); });
        guarded("mirkin", [&] {
            const MirkinResult mk = mirkin(pred_ids, truth_ids);
            report.mirkin_raw = mk.raw;
            report.mirkin_normalized = mk.normalized;
        });
        guarded("accuracy", [&] { report.accuracy = accuracy(p, d.labels); });
    }
    return report;
}

} // namespace swarmclust
