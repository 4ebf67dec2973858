#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "swarmclust/dataset.hpp"
#include "swarmclust/rng.hpp"
#include "test_util.hpp"

using namespace swarmclust;
using test_util::TempDir;
using test_util::write_file;

TEST_CASE("wine CSV loads with 178 objects, 13 features, 3 classes") {
    const Dataset d = load_csv(std::string(SWARMCLUST_SOURCE_DIR) + "/data/wine.csv", true, 0);
    CHECK(d.n_objects() == 178);
    CHECK(d.n_features() == 13);
    CHECK(d.n_classes() == 3);
    CHECK(d.labels.size() == 178);
    CHECK(d.feature_names.size() == 13);
    CHECK(d.points.allFinite());
}

TEST_CASE("single data row without header or labels") {
    TempDir tmp("load_single");
    const auto path = write_file(tmp, "one.csv", "1.0,2.0\n");
    const Dataset d = load_csv(path, false, std::nullopt);
    CHECK(d.n_objects() == 1);
    CHECK(d.n_features() == 2);
    CHECK(!d.has_labels());
    CHECK(d.points(0, 0) == 1.0);
    CHECK(d.points(0, 1) == 2.0);
}

TEST_CASE("load errors") {
    TempDir tmp("load_errors");

    SUBCASE("non-numeric cell names row and column") {
        const auto path = write_file(tmp, "bad.csv", "1,2\n3,abc\n");
        try {
            load_csv(path, false, std::nullopt);
            FAIL("expected an exception");
        } catch (const std::runtime_error& e) {
            const std::string msg = e.what();
            CHECK(msg.find("row 2") != std::string::npos);
            CHECK(msg.find("column 2") != std::string::npos);
            CHECK(msg.find("abc") != std::string::npos);
        }
    }
    SUBCASE("ragged rows") {
        const auto path = write_file(tmp, "ragged.csv", "1,2\n3\n");
        CHECK_THROWS_AS(load_csv(path, false, std::nullopt), std::runtime_error);
    }
    SUBCASE("empty file") {
        const auto path = write_file(tmp, "empty.csv", "");
        CHECK_THROWS_AS(load_csv(path, false, std::nullopt), std::runtime_error);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_csv(tmp.file("nope.csv"), false, std::nullopt), std::runtime_error);
    }
    SUBCASE("non-finite value rejected") {
        const auto path = write_file(tmp, "inf.csv", "1,inf\n");
        CHECK_THROWS_AS(load_csv(path, false, std::nullopt), std::runtime_error);
    }
}

TEST_CASE("text labels map to ids in first-appearance order") {
    TempDir tmp("labels");
    const auto path = write_file(tmp, "l.csv", "setosa,1.0\nversicolor,2.0\nsetosa,3.0\n");
    const Dataset d = load_csv(path, false, 0);
    CHECK(d.labels == std::vector<int>{0, 1, 0});
    CHECK(d.label_names == std::vector<std::string>{"setosa", "versicolor"});
    CHECK(d.n_features() == 1);
}

TEST_CASE("min-max normalization") {
    Dataset d;
    d.points.resize(3, 3);
    d.points << 0, 7, 1,
                5, 7, 2,
                10, 7, 4;
    d.feature_names = {"a", "b", "c"};
    const Dataset n = normalize_minmax(d);
    CHECK(n.points(0, 0) == 0.0);
    CHECK(n.points(1, 0) == 0.5);
    CHECK(n.points(2, 0) == 1.0);
    // constant column maps to zero
    CHECK(n.points.col(1).isZero());
    CHECK(n.points(0, 2) == 0.0);
    CHECK(n.points(1, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(n.points(2, 2) == 1.0);
}

TEST_CASE("normalization is idempotent") {
    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Dataset d = test_util::random_dataset(rng, 17, 4, -5.0, 20.0);
        const Dataset once = normalize_minmax(d);
        const Dataset twice = normalize_minmax(once);
        CHECK((once.points - twice.points).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("distance values") {
    RowVector a(1), b(1);
    a << 10;
    b << 22;
    CHECK(distance(a, b, Metric::manhattan) == 12.0);
    CHECK(distance(a, a, Metric::manhattan) == 0.0);
    CHECK(distance(b, b, Metric::euclidean) == 0.0);

    RowVector c(2), e(2);
    c << 0, 0;
    e << 3, 4;
    CHECK(distance(c, e, Metric::euclidean) == 5.0);
    CHECK(distance(c, e, Metric::squared_euclidean) == 25.0);
    CHECK(distance(c, e, Metric::manhattan) == 7.0);

    CHECK_THROWS_AS(distance(a, c, Metric::euclidean), std::invalid_argument);
}

TEST_CASE("squared distance matches the base metric") {
    RowVector a(2), b(2);
    a << 1, 2;
    b << 4, 6;
    CHECK(squared_distance(a, b, Metric::euclidean) == 25.0);
    CHECK(squared_distance(a, b, Metric::squared_euclidean) == 25.0);
    CHECK(squared_distance(a, b, Metric::manhattan) == 49.0);
}

TEST_CASE("metric axioms on random vectors") {
    Rng rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        RowVector a(3), b(3), c(3);
        for (int j = 0; j < 3; ++j) {
            a(j) = rng.uniform(-10, 10);
            b(j) = rng.uniform(-10, 10);
            c(j) = rng.uniform(-10, 10);
        }
        for (Metric m : {Metric::euclidean, Metric::manhattan, Metric::squared_euclidean}) {
            CHECK(distance(a, b, m) >= 0.0);
            CHECK(distance(a, b, m) == distance(b, a, m));
            CHECK(distance(a, a, m) == 0.0);
        }
        // triangle inequality for the true metrics
        for (Metric m : {Metric::euclidean, Metric::manhattan}) {
            CHECK(distance(a, c, m) <= distance(a, b, m) + distance(b, c, m) + 1e-12);
        }
    }
}

TEST_CASE("save/load round trip preserves the matrix exactly") {
    TempDir tmp("roundtrip");
    Rng rng(3);
    Dataset d = test_util::random_dataset(rng, 23, 5, -1e6, 1e6);
    d.labels = test_util::random_labels(rng, 23, 3);
    d.labels[0] = 0; // keep first-appearance order stable under reload
    d.labels[1] = 1;
    d.labels[2] = 2;
    d.label_names = {"x", "y", "z"};

    const auto path = tmp.file("d.csv");
    save_csv(d, path);
    const Dataset back = load_csv(path, true, 0);
    REQUIRE(back.n_objects() == d.n_objects());
    REQUIRE(back.n_features() == d.n_features());
    CHECK(back.points == d.points); // bit-exact
    CHECK(back.labels == d.labels);
}

TEST_CASE("synthetic blobs have the requested shape and are seeded") {
    const Dataset a = make_blobs(305, 7, 5, 99);
    CHECK(a.n_objects() == 305);
    CHECK(a.n_features() == 7);
    CHECK(a.n_classes() == 5);
    CHECK(a.labels.size() == 305);

    const Dataset b = make_blobs(305, 7, 5, 99);
    CHECK(a.points == b.points);
    const Dataset c = make_blobs(305, 7, 5, 100);
    CHECK(a.points != c.points);

    std::set<int> seen(a.labels.begin(), a.labels.end());
    CHECK(seen.size() == 5);
}
