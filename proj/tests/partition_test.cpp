#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swarmclust/kmeans.hpp"
#include "swarmclust/partition.hpp"
#include "swarmclust/rng.hpp"
#include "test_util.hpp"

using namespace swarmclust;

namespace {

Dataset toy_dataset() {
    Dataset d;
    const Scalar values[] = {10, 12, 15, 7, 22, 29, 31, 3, 7, 5, 1, 4, 12, 11, 10};
    d.points.resize(15, 1);
    for (Index i = 0; i < 15; ++i) d.points(i, 0) = values[i];
    d.feature_names = {"x"};
    return d;
}

} // namespace

TEST_CASE("nearest assignment on the 15-point example gives sizes 8/3/4") {
    const Dataset d = toy_dataset();
    Matrix centroids(3, 1);
    centroids << 10, 22, 1;
    const AssignResult res = assign_nearest(d, centroids, Metric::manhattan);
    CHECK(res.empty_clusters.empty());
    CHECK(cluster_sizes(res.partition) == std::vector<Index>{8, 3, 4});
}

TEST_CASE("one point, one centroid") {
    Dataset d;
    d.points.resize(1, 2);
    d.points << 3, 4;
    Matrix c(1, 2);
    c << 0, 0;
    const AssignResult res = assign_nearest(d, c, Metric::euclidean);
    CHECK(res.partition.assignment == std::vector<int>{0});
}

TEST_CASE("equidistant point goes to the lower centroid index") {
    Dataset d;
    d.points.resize(1, 1);
    d.points << 5;
    Matrix c(2, 1);
    c << 4, 6;
    const AssignResult res = assign_nearest(d, c, Metric::euclidean);
    CHECK(res.partition.assignment == std::vector<int>{0});
}

TEST_CASE("a centroid that captures nothing is signaled, and repair fixes it") {
    Dataset d;
    d.points.resize(4, 1);
    d.points << 0, 1, 2, 100;
    Matrix c(2, 1);
    c << 1, 1000; // second centroid captures nothing
    const AssignResult plain = assign_nearest(d, c, Metric::euclidean);
    CHECK(plain.empty_clusters == std::vector<int>{1});

    const AssignResult repaired = assign_with_repair(d, c, Metric::euclidean);
    CHECK(repaired.empty_clusters.empty());
    CHECK(c(1, 0) == 100.0); // re-seeded at the farthest point
    const auto sizes = cluster_sizes(repaired.partition);
    CHECK(sizes == std::vector<Index>{3, 1});
}

TEST_CASE("dimension mismatch throws") {
    Dataset d;
    d.points.resize(2, 2);
    d.points << 0, 0, 1, 1;
    Matrix c(1, 3);
    c << 0, 0, 0;
    CHECK_THROWS_AS(assign_nearest(d, c, Metric::euclidean), std::invalid_argument);
}

TEST_CASE("centroid recomputation on the example clusters") {
    const Dataset d = toy_dataset();
    Matrix centroids(3, 1);
    centroids << 10, 22, 1;
    const AssignResult res = assign_nearest(d, centroids, Metric::manhattan);
    const Matrix means = compute_centroids(d, res.partition);
    CHECK(means(0, 0) == 10.5);
    CHECK(means(1, 0) == doctest::Approx(82.0 / 3.0).epsilon(1e-15));
    CHECK(means(2, 0) == 3.25);
}

TEST_CASE("singleton clusters reproduce the points; a small mean by hand") {
    Dataset d;
    d.points.resize(3, 2);
    d.points << 1, 2, 3, 4, 5, 6;
    Partition each{{0, 1, 2}, 3};
    CHECK(compute_centroids(d, each) == d.points);

    Dataset e;
    e.points.resize(4, 1);
    e.points << 3, 1, 5, 4;
    Partition one{{0, 0, 0, 0}, 1};
    CHECK(compute_centroids(e, one)(0, 0) == 3.25);
}

TEST_CASE("centroid recomputation rejects noise and empty clusters") {
    Dataset d;
    d.points.resize(2, 1);
    d.points << 1, 2;
    CHECK_THROWS_AS(compute_centroids(d, Partition{{0, kNoiseLabel}, 1}), std::invalid_argument);
    CHECK_THROWS_AS(compute_centroids(d, Partition{{0, 0}, 2}), std::invalid_argument);
}

TEST_CASE("contingency tables") {
    SUBCASE("identical partitions give a diagonal table") {
        const ContingencyTable t = contingency(std::vector<int>{0, 0, 1}, std::vector<int>{0, 0, 1});
        CHECK(t.counts(0, 0) == 2);
        CHECK(t.counts(0, 1) == 0);
        CHECK(t.counts(1, 0) == 0);
        CHECK(t.counts(1, 1) == 1);
        CHECK(t.n == 3);
    }
    SUBCASE("offset split") {
        // a = {{1,2},{3}}, b = {{1},{2,3}} over objects 1..3
        const ContingencyTable t = contingency(std::vector<int>{0, 0, 1}, std::vector<int>{0, 1, 1});
        CHECK(t.counts(0, 0) == 1);
        CHECK(t.counts(0, 1) == 1);
        CHECK(t.counts(1, 0) == 0);
        CHECK(t.counts(1, 1) == 1);
        CHECK(t.row_sizes == std::vector<std::int64_t>{2, 1});
        CHECK(t.col_sizes == std::vector<std::int64_t>{1, 2});
    }
    SUBCASE("length mismatch and noise are rejected") {
        CHECK_THROWS_AS(contingency(std::vector<int>{0}, std::vector<int>{0, 1}),
                        std::invalid_argument);
        CHECK_THROWS_AS(contingency(std::vector<int>{0, kNoiseLabel}, std::vector<int>{0, 1}),
                        std::invalid_argument);
    }
}

TEST_CASE("contingency transposition and diagonal properties") {
    Rng rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        const Index n = 2 + static_cast<Index>(rng.uniform_index(30));
        const auto a = test_util::random_labels(rng, n, 4);
        const auto b = test_util::random_labels(rng, n, 3);
        const ContingencyTable ab = contingency(a, b);
        const ContingencyTable ba = contingency(b, a);
        CHECK(ab.counts.transpose() == ba.counts);

        const ContingencyTable aa = contingency(a, a);
        std::int64_t diag = 0;
        for (Index i = 0; i < aa.counts.rows(); ++i) diag += aa.counts(i, i);
        CHECK(diag == static_cast<std::int64_t>(n));
    }
}

TEST_CASE("one assign/recompute round never increases the objective") {
    Rng rng(23);
    for (int rep = 0; rep < 30; ++rep) {
        const Dataset d = test_util::random_dataset(rng, 40, 3);
        Matrix centroids = sample_initial_centroids(d, 4, rng);
        Scalar prev = std::numeric_limits<Scalar>::infinity();
        for (int step = 0; step < 8; ++step) {
            const AssignResult res = assign_with_repair(d, centroids, Metric::euclidean);
            const Scalar after_assign = sse_fitness(d, centroids, res.partition, Metric::euclidean);
            CHECK(after_assign <= prev + 1e-9);
            centroids = compute_centroids(d, res.partition);
            const Scalar after_update = sse_fitness(d, centroids, res.partition, Metric::euclidean);
            CHECK(after_update <= after_assign + 1e-9);
            prev = after_update;
        }
    }
}

TEST_CASE("label CSV round trip with noise") {
    test_util::TempDir tmp("labels_roundtrip");
    Partition p{{0, 1, kNoiseLabel, 1, 2, 0}, 3};
    const auto path = tmp.file("labels.csv");
    save_labels_csv(p, path);
    const Partition back = load_labels_csv(path);
    CHECK(back.assignment == p.assignment);
    CHECK(back.n_clusters == 3);
}
