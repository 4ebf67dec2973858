#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "swarmclust/validity.hpp"
#include "swarmclust/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace swarmclust;

namespace {

Dataset line_dataset(std::initializer_list<Scalar> values) {
    Dataset d;
    d.points.resize(static_cast<Index>(values.size()), 1);
    Index i = 0;
    for (Scalar v : values) d.points(i++, 0) = v;
    d.feature_names = {"x"};
    return d;
}

Dataset toy_dataset() {
    return line_dataset({10, 12, 15, 7, 22, 29, 31, 3, 7, 5, 1, 4, 12, 11, 10});
}

Partition toy_partition() {
    return Partition{{0, 0, 0, 0, 1, 1, 1, 2, 0, 2, 2, 2, 0, 0, 0}, 3};
}

} // namespace

TEST_CASE("silhouette on two tight, distant pairs") {
    const Dataset d = line_dataset({0, 1, 10, 11});
    const Partition p{{0, 0, 1, 1}, 2};
    const SilhouetteResult s = silhouette(d, p, Metric::euclidean);
    // outer points: a = 1, b = (10 + 11)/2 -> 19/21
    // inner points: a = 1, b = (9 + 10)/2  -> 17/19
    CHECK(s.per_sample[0] == doctest::Approx(19.0 / 21.0).epsilon(1e-12));
    CHECK(s.per_sample[1] == doctest::Approx(17.0 / 19.0).epsilon(1e-12));
    CHECK(s.per_sample[2] == doctest::Approx(17.0 / 19.0).epsilon(1e-12));
    CHECK(s.per_sample[3] == doctest::Approx(19.0 / 21.0).epsilon(1e-12));
    CHECK(s.overall == doctest::Approx((19.0 / 21.0 + 17.0 / 19.0) / 2.0).epsilon(1e-12));
    CHECK(s.per_cluster.size() == 2);
}

TEST_CASE("coincident clusters score zero") {
    Dataset d;
    d.points.resize(4, 1);
    d.points << 5, 5, 5, 5;
    const Partition p{{0, 1, 0, 1}, 2};
    const SilhouetteResult s = silhouette(d, p, Metric::euclidean);
    for (Scalar v : s.per_sample) CHECK(v == 0.0);
    CHECK(s.overall == 0.0);
}

TEST_CASE("a sample deep inside the other cluster scores negative") {
    const Dataset d = line_dataset({0, 1, 10.2, 10, 11});
    const Partition p{{0, 0, 0, 1, 1}, 2}; // 10.2 assigned to the far cluster
    const SilhouetteResult s = silhouette(d, p, Metric::euclidean);
    CHECK(s.per_sample[2] < 0.0);
}

TEST_CASE("singleton clusters score zero and fewer than two clusters throw") {
    const Dataset d = line_dataset({0, 1, 5});
    const SilhouetteResult s = silhouette(d, Partition{{0, 0, 1}, 2}, Metric::euclidean);
    CHECK(s.per_sample[2] == 0.0);
    CHECK_THROWS_AS(silhouette(d, Partition{{0, 0, 0}, 1}, Metric::euclidean),
                    std::invalid_argument);
}

TEST_CASE("silhouette is invariant under cluster relabeling") {
    Rng rng(71);
    const Dataset d = test_util::random_dataset(rng, 30, 2);
    const Partition p = test_util::random_partition(rng, 30, 4);
    Partition q = p;
    for (auto& id : q.assignment) id = (id + 2) % 4; // relabel
    CHECK(silhouette(d, p, Metric::euclidean).overall ==
          doctest::Approx(silhouette(d, q, Metric::euclidean).overall).epsilon(1e-14));
}

TEST_CASE("worked-example scatter and pairwise ratios at the starting centroids") {
    const Dataset d = toy_dataset();
    Matrix centroids(3, 1);
    centroids << 10, 22, 1;
    const DaviesBouldinComponents c =
        davies_bouldin_components(d, toy_partition(), centroids, Metric::manhattan);

    CHECK(c.scatter[0] == 2.0);
    CHECK(c.scatter[1] == doctest::Approx(16.0 / 3.0).epsilon(1e-15));
    CHECK(c.scatter[2] == 2.25);
    CHECK(c.ratios(0, 1) == doctest::Approx(11.0 / 18.0).epsilon(1e-15));
    CHECK(c.ratios(1, 2) == doctest::Approx(13.0 / 36.0).epsilon(1e-15));
    CHECK(c.ratios(0, 2) == doctest::Approx(17.0 / 36.0).epsilon(1e-15));
    CHECK(c.value == doctest::Approx(61.0 / 108.0).epsilon(1e-15));
}

TEST_CASE("well-separated tight clusters drive the index toward zero") {
    const Dataset d = line_dataset({0, 0.001, 10000, 10000.001});
    const Scalar v = davies_bouldin(d, Partition{{0, 0, 1, 1}, 2}, Metric::euclidean);
    CHECK(v < 1e-6);
}

TEST_CASE("coincident centroids raise an error naming the pair") {
    const Dataset d = line_dataset({0, 2, 1, 1}); // clusters {0,2} and {1,1} share mean 1
    try {
        davies_bouldin(d, Partition{{0, 0, 1, 1}, 2}, Metric::euclidean);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("0") != std::string::npos);
        CHECK(msg.find("1") != std::string::npos);
    }
}

TEST_CASE("pair ratio table of the worked example") {
    const Dataset d = toy_dataset();
    const Matrix t = dunn_pair_table(d, toy_partition(), Metric::manhattan);
    CHECK(t(0, 1) == doctest::Approx(7.0 / 8.0).epsilon(1e-15));   // 0.875
    CHECK(t(0, 2) == doctest::Approx(2.0 / 8.0).epsilon(1e-15));   // 0.25
    CHECK(t(1, 0) == doctest::Approx(7.0 / 9.0).epsilon(1e-15));   // 0.78
    CHECK(t(1, 2) == doctest::Approx(17.0 / 9.0).epsilon(1e-15));  // 1.89
    CHECK(t(2, 0) == doctest::Approx(2.0 / 4.0).epsilon(1e-15));   // 0.5
    CHECK(t(2, 1) == doctest::Approx(17.0 / 4.0).epsilon(1e-15));  // 4.25
    CHECK(std::isnan(t(0, 0)));
}

TEST_CASE("global ratio of the worked example is 2/9") {
    const Dataset d = toy_dataset();
    CHECK(dunn(d, toy_partition(), Metric::manhattan) ==
          doctest::Approx(2.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("all-singleton partitions have no diameter") {
    const Dataset d = line_dataset({0, 5, 9});
    CHECK_THROWS_AS(dunn(d, Partition{{0, 1, 2}, 3}, Metric::euclidean), std::invalid_argument);
}

TEST_CASE("pair agreement values") {
    CHECK(rand_index({0, 0, 1, 1}, {1, 1, 0, 0}) == 1.0);
    CHECK(rand_index({0, 0, 1}, {0, 1, 1}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(rand_index({0, 0, 0}, {0, 1, 2}) == 0.0);
    CHECK_THROWS_AS(rand_index({0, 0}, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(rand_index({0}, {0}), std::invalid_argument);
}

TEST_CASE("rand index is symmetric and label-permutation invariant") {
    Rng rng(73);
    for (int rep = 0; rep < 50; ++rep) {
        const Index n = 2 + static_cast<Index>(rng.uniform_index(25));
        const auto a = test_util::random_labels(rng, n, 3);
        const auto b = test_util::random_labels(rng, n, 4);
        CHECK(rand_index(a, b) == rand_index(b, a));
        auto permuted = b;
        for (auto& id : permuted) id = (id + 1) % 4;
        CHECK(rand_index(a, b) == rand_index(a, permuted));
        const Scalar r = rand_index(a, b);
        CHECK(r >= 0.0);
        CHECK(r <= 1.0);
    }
}

TEST_CASE("pair mismatch distance") {
    const MirkinResult self = mirkin({0, 1, 0, 2}, {0, 1, 0, 2});
    CHECK(self.raw == 0);
    CHECK(self.normalized == 0.0);

    const MirkinResult m = mirkin({0, 0, 1}, {0, 1, 1});
    CHECK(m.raw == 4); // 5 + 5 - 2*3
    CHECK(m.normalized == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("mismatch distance ties out against pair agreement") {
    Rng rng(79);
    for (int rep = 0; rep < 100; ++rep) {
        const Index n = 2 + static_cast<Index>(rng.uniform_index(19)); // up to 20
        const auto a = test_util::random_labels(rng, n, 4);
        const auto b = test_util::random_labels(rng, n, 3);
        const std::int64_t raw = mirkin(a, b).raw;
        const Scalar r = rand_index(a, b);
        const Scalar identity = static_cast<Scalar>(n) * static_cast<Scalar>(n - 1) * (1.0 - r);
        CHECK(static_cast<Scalar>(raw) == doctest::Approx(identity).epsilon(1e-12));
        CHECK(raw == oracles::mirkin_raw(a, b));
    }
}

TEST_CASE("best-mapping accuracy") {
    SUBCASE("exact match") {
        CHECK(accuracy(Partition{{0, 0, 1, 1}, 2}, {0, 0, 1, 1}) == 1.0);
    }
    SUBCASE("one point astray") {
        CHECK(accuracy(Partition{{0, 0, 0, 1}, 2}, {0, 0, 1, 1}) == 0.75);
    }
    SUBCASE("single cluster against two balanced classes") {
        CHECK(accuracy(Partition{{0, 0, 0, 0}, 1}, {0, 0, 1, 1}) == 0.5);
    }
    SUBCASE("noise counts against the score") {
        CHECK(accuracy(Partition{{0, 0, kNoiseLabel, 1}, 2}, {0, 0, 1, 1}) == 0.75);
    }
    SUBCASE("missing truth throws") {
        CHECK_THROWS_AS(accuracy(Partition{{0}, 1}, {}), std::invalid_argument);
    }
    SUBCASE("more clusters than classes still maps injectively") {
        // clusters {0}, {1}, {2,3}; best maps cluster 2 to class 1 and one of
        // the singletons to class 0
        CHECK(accuracy(Partition{{0, 1, 2, 2}, 3}, {0, 0, 1, 1}) == 0.75);
    }
}

TEST_CASE("translation and scale invariance of the geometric indices") {
    Rng rng(83);
    const Dataset d = test_util::random_dataset(rng, 25, 3);
    const Partition p = test_util::random_partition(rng, 25, 3);

    Dataset shifted = d;
    shifted.points.array() += 42.0;
    Dataset scaled = d;
    scaled.points *= 3.5;

    const Scalar dunn0 = dunn(d, p, Metric::euclidean);
    const Scalar db0 = davies_bouldin(d, p, Metric::euclidean);
    CHECK(dunn(shifted, p, Metric::euclidean) == doctest::Approx(dunn0).epsilon(1e-10));
    CHECK(davies_bouldin(shifted, p, Metric::euclidean) == doctest::Approx(db0).epsilon(1e-10));
    CHECK(dunn(scaled, p, Metric::euclidean) == doctest::Approx(dunn0).epsilon(1e-10));
    CHECK(davies_bouldin(scaled, p, Metric::euclidean) == doctest::Approx(db0).epsilon(1e-10));
}

TEST_CASE("every index agrees with its direct-from-definition reference") {
    Rng rng(89);
    for (int rep = 0; rep < 40; ++rep) {
        const Index n = 8 + static_cast<Index>(rng.uniform_index(53)); // 8..60
        const int k = 2 + static_cast<int>(rng.uniform_index(5));      // 2..6
        const Dataset d = test_util::random_dataset(rng, n, 1 + static_cast<Index>(rng.uniform_index(4)));
        const Partition p = test_util::random_partition(rng, n, k);
        const Metric m = rep % 2 == 0 ? Metric::euclidean : Metric::manhattan;

        const SilhouetteResult s = silhouette(d, p, m);
        CHECK(s.overall == doctest::Approx(oracles::silhouette(d, p, m)).epsilon(1e-10));
        Scalar per_sample_sum = 0.0;
        for (Scalar v : s.per_sample) {
            CHECK(v >= -1.0);
            CHECK(v <= 1.0);
            per_sample_sum += v;
        }
        CHECK(s.overall ==
              doctest::Approx(per_sample_sum / static_cast<Scalar>(n)).epsilon(1e-12));
        CHECK(davies_bouldin(d, p, m) ==
              doctest::Approx(oracles::davies_bouldin(d, p, m)).epsilon(1e-10));
        CHECK(dunn(d, p, m) == doctest::Approx(oracles::dunn(d, p, m)).epsilon(1e-10));

        const auto a = test_util::random_labels(rng, n, k);
        const auto b = test_util::random_labels(rng, n, 3);
        CHECK(rand_index(a, b) == doctest::Approx(oracles::rand_index(a, b)).epsilon(1e-12));
        CHECK(mirkin(a, b).raw == oracles::mirkin_raw(a, b));
    }
}

TEST_CASE("index report excludes noise and skips external scores without truth") {
    const Dataset d = line_dataset({0, 1, 10, 11, 100});
    const Partition p{{0, 0, 1, 1, kNoiseLabel}, 2};
    const IndexReport r = compute_index_report(d, p, Metric::euclidean);
    CHECK(r.excluded_noise == 1);
    CHECK(r.silhouette_overall.has_value());
    CHECK(r.db.has_value());
    CHECK(r.dunn.has_value());
    CHECK(!r.rand.has_value());
    CHECK(!r.accuracy.has_value());
    CHECK(r.errors.empty());

    Dataset labeled = d;
    labeled.labels = {0, 0, 1, 1, 1};
    labeled.label_names = {"a", "b"};
    const IndexReport r2 = compute_index_report(labeled, p, Metric::euclidean);
    CHECK(r2.rand.has_value());
    CHECK(r2.mirkin_raw.has_value());
    CHECK(r2.accuracy.has_value());
    CHECK(*r2.accuracy == doctest::Approx(0.8));
}

TEST_CASE("index report captures per-index failures without aborting") {
    const Dataset d = line_dataset({0, 1, 2});
    const Partition p{{0, 0, 0}, 1}; // one cluster: silhouette/db/dunn all refuse
    const IndexReport r = compute_index_report(d, p, Metric::euclidean);
    CHECK(!r.silhouette_overall.has_value());
    CHECK(!r.db.has_value());
    CHECK(!r.dunn.has_value());
    CHECK(r.errors.size() == 3);
}
