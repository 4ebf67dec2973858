#include "swarmclust/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "swarmclust/rng.hpp"

namespace swarmclust {

Metric metric_from_string(const std::string& name) {
    if (name == "euclidean") return Metric::euclidean;
    if (name == "squared_euclidean" || name == "sqeuclidean") return Metric::squared_euclidean;
    if (name == "manhattan") return Metric::manhattan;
    throw std::invalid_argument("unknown metric '" + name +
                                "' (expected euclidean, squared_euclidean, or manhattan)");
}

std::string to_string(Metric m) {
    switch (m) {
        case Metric::euclidean: return "euclidean";
        case Metric::squared_euclidean: return "squared_euclidean";
        case Metric::manhattan: return "manhattan";
    }
    return "?";
}

Scalar distance(ConstRowRef a, ConstRowRef b, Metric m) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance: vectors have lengths " + std::to_string(a.size()) +
                                    " and " + std::to_string(b.size()));
    switch (m) {
        case Metric::euclidean: return (a - b).norm();
        case Metric::squared_euclidean: return (a - b).squaredNorm();
        case Metric::manhattan: return (a - b).cwiseAbs().sum();
    }
    return 0.0;
}

Scalar squared_distance(ConstRowRef a, ConstRowRef b, Metric m) {
    if (a.size() != b.size())
        throw std::invalid_argument("squared_distance: vectors have lengths " +
                                    std::to_string(a.size()) + " and " + std::to_string(b.size()));
    switch (m) {
        case Metric::euclidean:
        case Metric::squared_euclidean:
            return (a - b).squaredNorm();
        case Metric::manhattan: {
            const Scalar l1 = (a - b).cwiseAbs().sum();
            return l1 * l1;
        }
    }
    return 0.0;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

bool parse_double(const std::string& cell, double& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    if (first != last && *first == '+') ++first; // from_chars rejects a leading '+'
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && first != last;
}

} // namespace

Dataset load_csv(const std::string& path, bool has_header,
                 std::optional<Index> label_column, const std::string& name) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");

    Dataset d;
    d.name = name.empty() ? path : name;

    std::string line;
    std::size_t file_row = 0;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> raw_labels;
    std::size_t n_columns = 0;
    bool saw_columns = false;

    const bool want_labels = label_column.has_value();
    const std::size_t label_idx = want_labels ? static_cast<std::size_t>(*label_column) : 0;

    while (std::getline(in, line)) {
        ++file_row;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        std::vector<std::string> cells = split_csv_line(stripped);

        if (!saw_columns) {
            n_columns = cells.size();
            saw_columns = true;
            if (want_labels && label_idx >= n_columns)
                throw std::runtime_error(path + ": label column " + std::to_string(label_idx) +
                                         " out of range (file has " + std::to_string(n_columns) +
                                         " columns)");
            if (has_header) {
                for (std::size_t c = 0; c < cells.size(); ++c)
                    if (!want_labels || c != label_idx) d.feature_names.push_back(cells[c]);
                continue;
            }
        } else if (cells.size() != n_columns) {
            throw std::runtime_error(path + ": row " + std::to_string(file_row) + " has " +
                                     std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(n_columns));
        }

        std::vector<double> values;
        values.reserve(n_columns - (want_labels ? 1 : 0));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (want_labels && c == label_idx) {
                raw_labels.push_back(cells[c]);
                continue;
            }
            double v = 0.0;
            if (!parse_double(cells[c], v))
                throw std::runtime_error(path + ": row " + std::to_string(file_row) + ", column " +
                                         std::to_string(c + 1) + ": cannot parse '" + cells[c] +
                                         "' as a number");
            if (!std::isfinite(v))
                throw std::runtime_error(path + ": row " + std::to_string(file_row) + ", column " +
                                         std::to_string(c + 1) + ": value '" + cells[c] +
                                         "' is not finite");
            values.push_back(v);
        }
        rows.push_back(std::move(values));
    }

    if (rows.empty()) throw std::runtime_error(path + ": no data rows");

    const Index n = static_cast<Index>(rows.size());
    const Index f = static_cast<Index>(rows.front().size());
    if (f == 0) throw std::runtime_error(path + ": no feature columns");
    d.points.resize(n, f);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < f; ++j) d.points(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

    if (d.feature_names.empty())
        for (Index j = 0; j < f; ++j) d.feature_names.push_back("f" + std::to_string(j));

    if (want_labels) {
        std::unordered_map<std::string, int> ids;
        d.labels.reserve(raw_labels.size());
        for (const std::string& text : raw_labels) {
            auto [it, inserted] = ids.try_emplace(text, static_cast<int>(d.label_names.size()));
            if (inserted) d.label_names.push_back(text);
            d.labels.push_back(it->second);
        }
    }
    return d;
}

void save_csv(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");

    if (d.has_labels()) out << "label,";
    for (Index j = 0; j < d.n_features(); ++j) {
        if (j > 0) out << ',';
        out << d.feature_names[static_cast<std::size_t>(j)];
    }
    out << '\n';

    char buf[64];
    for (Index i = 0; i < d.n_objects(); ++i) {
        if (d.has_labels()) out << d.label_names[static_cast<std::size_t>(d.labels[static_cast<std::size_t>(i)])] << ',';
        for (Index j = 0; j < d.n_features(); ++j) {
            if (j > 0) out << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", d.points(i, j));
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error(path + ": write failed");
}

Dataset normalize_minmax(const Dataset& d) {
    Dataset out = d;
    for (Index j = 0; j < d.n_features(); ++j) {
        const Scalar lo = d.points.col(j).minCoeff();
        const Scalar hi = d.points.col(j).maxCoeff();
        if (hi > lo)
            out.points.col(j) = (d.points.col(j).array() - lo) / (hi - lo);
        else
            out.points.col(j).setZero();
    }
    return out;
}

Dataset make_blobs(Index n_objects, Index n_features, int n_blobs,
                   std::uint64_t seed, Scalar spread, const std::string& name) {
    if (n_objects < 1 || n_features < 1 || n_blobs < 1)
        throw std::invalid_argument("make_blobs: sizes must be positive");
    if (static_cast<Index>(n_blobs) > n_objects)
        throw std::invalid_argument("make_blobs: more blobs than objects");

    Rng rng(seed);
    Matrix centers(n_blobs, n_features);
    for (int b = 0; b < n_blobs; ++b)
        for (Index j = 0; j < n_features; ++j) centers(b, j) = rng.uniform(0.0, 10.0);

    Dataset d;
    d.name = name;
    d.points.resize(n_objects, n_features);
    d.labels.reserve(static_cast<std::size_t>(n_objects));
    for (int b = 0; b < n_blobs; ++b) d.label_names.push_back("blob" + std::to_string(b));
    for (Index j = 0; j < n_features; ++j) d.feature_names.push_back("f" + std::to_string(j));

    Index i = 0;
    for (int b = 0; b < n_blobs && i < n_objects; ++b) {
        // spread the remainder over the leading blobs
        Index count = n_objects / n_blobs + (static_cast<Index>(b) < n_objects % n_blobs ? 1 : 0);
        for (Index c = 0; c < count; ++c, ++i) {
            for (Index j = 0; j < n_features; ++j)
                d.points(i, j) = centers(b, j) + spread * rng.normal();
            d.labels.push_back(b);
        }
    }
    return d;
}

} // namespace swarmclust
