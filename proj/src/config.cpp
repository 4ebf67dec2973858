#include "swarmclust/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <stdexcept>

namespace swarmclust {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& context, const std::string& message) {
    throw std::runtime_error(context + ": " + message);
}

double to_double(const std::string& context, const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail(context, key + ": '" + value + "' is not a number");
    }
}

std::int64_t to_int(const std::string& context, const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail(context, key + ": '" + value + "' is not an integer");
    }
}

std::uint64_t to_u64(const std::string& context, const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail(context, key + ": '" + value + "' is not a nonnegative integer");
    }
}

bool to_bool(const std::string& context, const std::string& key, const std::string& value) {
    if (value == "true" || value == "yes" || value == "on" || value == "1") return true;
    if (value == "false" || value == "no" || value == "off" || value == "0") return false;
    fail(context, key + ": '" + value + "' is not a boolean");
}

} // namespace

const std::string* ConfigSection::find(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

ConfigFile parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open config file");

    ConfigFile cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#' || stripped.front() == ';') continue;

        if (stripped.front() == '[') {
            if (stripped.back() != ']')
                fail(path, "line " + std::to_string(lineno) + ": unterminated section header");
            cfg.sections.push_back({trim(stripped.substr(1, stripped.size() - 2)), {}});
            continue;
        }

        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            fail(path, "line " + std::to_string(lineno) + ": expected 'key = value'");
        if (cfg.sections.empty())
            fail(path, "line " + std::to_string(lineno) + ": entry before any [section]");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            fail(path, "line " + std::to_string(lineno) + ": empty key");
        cfg.sections.back().entries.emplace_back(std::move(key), std::move(value));
    }
    return cfg;
}

AlgorithmKind algorithm_kind_from_string(const std::string& name) {
    if (name == "kmeans" || name == "k-means") return AlgorithmKind::kmeans;
    if (name == "simple-pso" || name == "simple_pso") return AlgorithmKind::simple_pso;
    if (name == "canonical-pso" || name == "canonical_pso") return AlgorithmKind::canonical_pso;
    if (name == "dbscan") return AlgorithmKind::dbscan;
    if (name == "hierarchical") return AlgorithmKind::hierarchical;
    throw std::invalid_argument("unknown algorithm '" + name +
                                "' (expected kmeans, simple-pso, canonical-pso, dbscan, or hierarchical)");
}

std::string to_string(AlgorithmKind kind) {
    switch (kind) {
        case AlgorithmKind::kmeans: return "kmeans";
        case AlgorithmKind::simple_pso: return "simple-pso";
        case AlgorithmKind::canonical_pso: return "canonical-pso";
        case AlgorithmKind::dbscan: return "dbscan";
        case AlgorithmKind::hierarchical: return "hierarchical";
    }
    return "?";
}

bool is_deterministic(AlgorithmKind kind) {
    return kind == AlgorithmKind::dbscan || kind == AlgorithmKind::hierarchical;
}

namespace {

DatasetSpec parse_dataset_section(const std::string& path, const ConfigSection& section,
                                  const std::string& name) {
    const std::string context = path + " [" + section.name + "]";
    DatasetSpec spec;
    spec.name = name;

    static const std::set<std::string> known = {"path", "synthetic", "objects", "features",
                                                "classes", "seed", "spread", "has_header",
                                                "label_column", "normalize", "k"};
    for (const auto& [key, value] : section.entries) {
        if (!known.count(key)) fail(context, "unknown key '" + key + "'");
        if (key == "path") spec.path = value;
        else if (key == "synthetic") {
            if (value != "blobs") fail(context, "synthetic: only 'blobs' is supported");
            if (!spec.synthetic) spec.synthetic = SyntheticSpec{};
        } else if (key == "objects") {
            if (!spec.synthetic) spec.synthetic = SyntheticSpec{};
            spec.synthetic->objects = to_int(context, key, value);
        } else if (key == "features") {
            if (!spec.synthetic) spec.synthetic = SyntheticSpec{};
            spec.synthetic->features = to_int(context, key, value);
        } else if (key == "classes") {
            if (!spec.synthetic) spec.synthetic = SyntheticSpec{};
            spec.synthetic->classes = static_cast<int>(to_int(context, key, value));
        } else if (key == "seed") {
            if (!spec.synthetic) spec.synthetic = SyntheticSpec{};
            spec.synthetic->seed = to_u64(context, key, value);
        } else if (key == "spread") {
            if (!spec.synthetic) spec.synthetic = SyntheticSpec{};
            spec.synthetic->spread = to_double(context, key, value);
        } else if (key == "has_header") spec.has_header = to_bool(context, key, value);
        else if (key == "label_column") spec.label_column = to_int(context, key, value);
        else if (key == "normalize") spec.normalize = to_bool(context, key, value);
        else if (key == "k") spec.k = static_cast<int>(to_int(context, key, value));
    }

    if (spec.path.empty() && !spec.synthetic)
        fail(context, "needs either 'path' or 'synthetic = blobs'");
    if (!spec.path.empty() && spec.synthetic)
        fail(context, "'path' and 'synthetic' are mutually exclusive");
    return spec;
}

AlgorithmSpec parse_algorithm_section(const std::string& path, const ConfigSection& section,
                                      const std::string& name) {
    const std::string context = path + " [" + section.name + "]";
    AlgorithmSpec spec;
    spec.name = name;

    const std::string* kind = section.find("kind");
    spec.kind = algorithm_kind_from_string(kind ? *kind : name);

    static const std::set<std::string> known = {"kind", "metric", "max_iter", "tol", "particles",
                                                "c1", "c2", "chi", "refine",
                                                "per_coordinate_random", "eps", "minpts",
                                                "linkage"};
    for (const auto& [key, value] : section.entries) {
        if (!known.count(key)) fail(context, "unknown key '" + key + "'");
        if (key == "kind") continue;
        else if (key == "metric") spec.metric = metric_from_string(value);
        else if (key == "max_iter") spec.max_iter = static_cast<int>(to_int(context, key, value));
        else if (key == "tol") spec.tol = to_double(context, key, value);
        else if (key == "particles") spec.particles = static_cast<int>(to_int(context, key, value));
        else if (key == "c1") spec.c1 = to_double(context, key, value);
        else if (key == "c2") spec.c2 = to_double(context, key, value);
        else if (key == "chi") spec.chi = to_double(context, key, value);
        else if (key == "refine") spec.refine = to_bool(context, key, value);
        else if (key == "per_coordinate_random") spec.per_coordinate_random = to_bool(context, key, value);
        else if (key == "eps") spec.eps = to_double(context, key, value);
        else if (key == "minpts") spec.minpts = static_cast<int>(to_int(context, key, value));
        else if (key == "linkage") spec.linkage = linkage_from_string(value);
    }

    if (spec.max_iter == 0)
        spec.max_iter = (spec.kind == AlgorithmKind::kmeans) ? 300 : 100;
    if (spec.tol < 0)
        spec.tol = (spec.kind == AlgorithmKind::kmeans) ? 1e-6 : 0.0;
    return spec;
}

} // namespace

ExperimentConfig parse_experiment_config(const std::string& path) {
    const ConfigFile file = parse_config_file(path);
    ExperimentConfig cfg;
    bool saw_experiment = false;

    for (const ConfigSection& section : file.sections) {
        if (section.name == "experiment") {
            saw_experiment = true;
            const std::string context = path + " [experiment]";
            static const std::set<std::string> known = {"trials", "base_seed", "output_dir",
                                                        "formats", "force_anova_all"};
            for (const auto& [key, value] : section.entries) {
                if (!known.count(key)) fail(context, "unknown key '" + key + "'");
                if (key == "trials") cfg.trials = static_cast<int>(to_int(context, key, value));
                else if (key == "base_seed") cfg.base_seed = to_u64(context, key, value);
                else if (key == "output_dir") cfg.output_dir = value;
                else if (key == "force_anova_all") cfg.force_anova_all = to_bool(context, key, value);
                else if (key == "formats") {
                    cfg.emit_csv = value.find("csv") != std::string::npos;
                    cfg.emit_json = value.find("json") != std::string::npos;
                    if (!cfg.emit_csv && !cfg.emit_json)
                        fail(context, "formats: expected a subset of {csv, json}");
                }
            }
        } else if (section.name.rfind("dataset.", 0) == 0) {
            cfg.datasets.push_back(parse_dataset_section(path, section, section.name.substr(8)));
        } else if (section.name.rfind("algorithm.", 0) == 0) {
            cfg.algorithms.push_back(parse_algorithm_section(path, section, section.name.substr(10)));
        } else {
            fail(path, "unknown section [" + section.name + "]");
        }
    }

    if (!saw_experiment) fail(path, "missing [experiment] section");
    if (cfg.datasets.empty()) fail(path, "no [dataset.*] sections");
    if (cfg.algorithms.empty()) fail(path, "no [algorithm.*] sections");
    if (cfg.trials < 1) fail(path, "trials must be >= 1");

    std::set<std::string> names;
    for (const auto& a : cfg.algorithms)
        if (!names.insert(a.name).second) fail(path, "duplicate algorithm name '" + a.name + "'");
    names.clear();
    for (const auto& d : cfg.datasets)
        if (!names.insert(d.name).second) fail(path, "duplicate dataset name '" + d.name + "'");
    return cfg;
}

Dataset load_dataset(const DatasetSpec& spec) {
    Dataset d;
    if (spec.synthetic) {
        d = make_blobs(spec.synthetic->objects, spec.synthetic->features, spec.synthetic->classes,
                       spec.synthetic->seed, spec.synthetic->spread, spec.name);
    } else {
        d = load_csv(spec.path, spec.has_header, spec.label_column, spec.name);
    }
    if (spec.normalize) d = normalize_minmax(d);
    return d;
}

} // namespace swarmclust
