#include "qht/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace qht {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

void check_two_classes(const std::vector<LabeledPoint>& points, const char* where) {
    bool has_zero = false;
    bool has_one = false;
    for (const LabeledPoint& p : points) {
        if (p.label == 0) has_zero = true;
        if (p.label == 1) has_one = true;
    }
    if (!has_zero || !has_one) {
        throw data_error(std::string(where) + ": both classes must be present");
    }
}

} // namespace

MinMaxParams minmax_fit(const std::vector<LabeledPoint>& train) {
    if (train.size() < 2) throw data_error("min-max fit needs at least 2 points");
    const std::size_t n_features = train.front().features.size();
    MinMaxParams params;
    params.mins.assign(n_features, 0.0);
    params.maxs.assign(n_features, 0.0);
    for (std::size_t f = 0; f < n_features; ++f) {
        double lo = train.front().features[f];
        double hi = lo;
        for (const LabeledPoint& p : train) {
            lo = std::min(lo, p.features[f]);
            hi = std::max(hi, p.features[f]);
        }
        if (!(hi > lo)) {
            throw data_error("feature " + std::to_string(f) +
                             " is constant on the training data");
        }
        params.mins[f] = lo;
        params.maxs[f] = hi;
    }
    return params;
}

std::vector<LabeledPoint> minmax_apply(const MinMaxParams& params,
                                       const std::vector<LabeledPoint>& points,
                                       std::size_t* clamp_count) {
    std::size_t clamps = 0;
    std::vector<LabeledPoint> out = points;
    for (LabeledPoint& p : out) {
        for (std::size_t f = 0; f < p.features.size(); ++f) {
            const double span = params.maxs[f] - params.mins[f];
            double v = 2.0 * (p.features[f] - params.mins[f]) / span - 1.0;
            if (v < -1.0 || v > 1.0) {
                v = std::clamp(v, -1.0, 1.0);
                ++clamps;
            }
            p.features[f] = v;
        }
    }
    if (clamp_count) *clamp_count = clamps;
    return out;
}

std::vector<LabeledPoint> load_csv(const std::string& path,
                                   const std::vector<std::size_t>& feature_columns,
                                   std::size_t label_column, const ClassPair& classes,
                                   bool has_header) {
    std::ifstream file(path);
    if (!file) throw parse_error("cannot open " + path);

    std::vector<LabeledPoint> points;
    bool seen_zero = false;
    bool seen_one = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (has_header && line_no == 1) continue;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (label_column >= fields.size()) {
            throw data_error(path + ":" + std::to_string(line_no) +
                             ": label column " + std::to_string(label_column) +
                             " out of range (row has " + std::to_string(fields.size()) +
                             " columns)");
        }
        const std::string label = trim(fields[label_column]);
        int mapped;
        if (label == classes.class_zero) {
            mapped = 0;
            seen_zero = true;
        } else if (label == classes.class_one) {
            mapped = 1;
            seen_one = true;
        } else {
            continue; // a class outside the selected pair
        }
        LabeledPoint point;
        point.label = mapped;
        point.features.reserve(feature_columns.size());
        for (std::size_t col : feature_columns) {
            if (col >= fields.size()) {
                throw parse_error(path + ":" + std::to_string(line_no) +
                                  ": feature column " + std::to_string(col) +
                                  " out of range");
            }
            try {
                std::size_t used = 0;
                const std::string text = trim(fields[col]);
                const double v = std::stod(text, &used);
                if (used != text.size()) throw std::invalid_argument(text);
                point.features.push_back(v);
            } catch (const std::exception&) {
                throw parse_error(path + ":" + std::to_string(line_no) +
                                  ": cannot parse '" + trim(fields[col]) + "' as a number");
            }
        }
        points.push_back(std::move(point));
    }
    if (line_no == 0) throw parse_error(path + ": file is empty");
    if (!seen_zero) throw data_error(path + ": class '" + classes.class_zero + "' not found");
    if (!seen_one) throw data_error(path + ": class '" + classes.class_one + "' not found");
    return points;
}

std::vector<LabeledPoint> make_blobs(std::size_t n_per_class,
                                     const std::array<std::array<double, 2>, 2>& centers,
                                     double sigma, std::uint64_t seed) {
    if (!(sigma > 0.0)) throw argument_error("blobs sigma must be > 0");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    std::vector<LabeledPoint> points;
    points.reserve(2 * n_per_class);
    for (int label = 0; label < 2; ++label) {
        for (std::size_t i = 0; i < n_per_class; ++i) {
            const double x = centers[label][0] + noise(rng);
            const double y = centers[label][1] + noise(rng);
            points.push_back(LabeledPoint{{x, y}, label});
        }
    }
    return points;
}

std::vector<LabeledPoint> make_moons(std::size_t n_per_class, double noise_sigma,
                                     std::uint64_t seed) {
    if (noise_sigma < 0.0) throw argument_error("moons noise must be >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> arc(0.0, M_PI);
    std::normal_distribution<double> noise(0.0, noise_sigma == 0.0 ? 1.0 : noise_sigma);
    std::vector<LabeledPoint> points;
    points.reserve(2 * n_per_class);
    for (int label = 0; label < 2; ++label) {
        for (std::size_t i = 0; i < n_per_class; ++i) {
            const double t = arc(rng);
            double x = label == 0 ? std::cos(t) : 1.0 - std::cos(t);
            double y = label == 0 ? std::sin(t) : 0.5 - std::sin(t);
            if (noise_sigma > 0.0) {
                x += noise(rng);
                y += noise(rng);
            }
            points.push_back(LabeledPoint{{x, y}, label});
        }
    }
    return points;
}

std::pair<std::vector<LabeledPoint>, std::vector<LabeledPoint>> train_test_split(
    const std::vector<LabeledPoint>& points, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
        throw argument_error("train_fraction must be in (0, 1)");
    }
    std::mt19937_64 rng(spec.seed);
    std::vector<LabeledPoint> train;
    std::vector<LabeledPoint> test;

    auto split_group = [&](std::vector<std::size_t>& indices) {
        std::shuffle(indices.begin(), indices.end(), rng);
        std::size_t n_train = static_cast<std::size_t>(
            std::llround(spec.train_fraction * static_cast<double>(indices.size())));
        n_train = std::clamp<std::size_t>(n_train, 1, indices.size() - 1);
        for (std::size_t i = 0; i < indices.size(); ++i) {
            (i < n_train ? train : test).push_back(points[indices[i]]);
        }
    };

    if (spec.stratified) {
        check_two_classes(points, "train_test_split");
        for (int label = 0; label < 2; ++label) {
            std::vector<std::size_t> indices;
            for (std::size_t i = 0; i < points.size(); ++i) {
                if (points[i].label == label) indices.push_back(i);
            }
            if (indices.size() < 2) {
                throw data_error("stratified split needs >= 2 points in class " +
                                 std::to_string(label));
            }
            split_group(indices);
        }
    } else {
        if (points.size() < 2) throw data_error("split needs >= 2 points");
        std::vector<std::size_t> indices(points.size());
        for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
        split_group(indices);
    }
    return {std::move(train), std::move(test)};
}

std::vector<LabeledPoint> balance_classes(const std::vector<LabeledPoint>& points,
                                          std::uint64_t seed) {
    check_two_classes(points, "balance_classes");
    std::array<std::vector<std::size_t>, 2> by_class;
    for (std::size_t i = 0; i < points.size(); ++i) {
        by_class[points[i].label].push_back(i);
    }
    const std::size_t target = std::min(by_class[0].size(), by_class[1].size());
    std::mt19937_64 rng(seed);
    std::vector<bool> keep(points.size(), false);
    for (auto& indices : by_class) {
        std::shuffle(indices.begin(), indices.end(), rng);
        indices.resize(target);
        for (std::size_t i : indices) keep[i] = true;
    }
    std::vector<LabeledPoint> out;
    out.reserve(2 * target);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (keep[i]) out.push_back(points[i]);
    }
    return out;
}

std::vector<LabeledPoint> pad_to_pow2(const std::vector<LabeledPoint>& points) {
    std::vector<LabeledPoint> out = points;
    for (LabeledPoint& p : out) {
        std::size_t dim = 1;
        while (dim < p.features.size()) dim <<= 1;
        p.features.resize(dim, 0.0);
    }
    return out;
}

std::string to_csv(const std::vector<LabeledPoint>& points) {
    std::string text;
    const std::size_t n_features = points.empty() ? 2 : points.front().features.size();
    for (std::size_t f = 0; f < n_features; ++f) {
        text += "f" + std::to_string(f) + ",";
    }
    text += "label\n";
    char buf[40];
    for (const LabeledPoint& p : points) {
        for (double v : p.features) {
            std::snprintf(buf, sizeof(buf), "%.17g,", v);
            text += buf;
        }
        text += std::to_string(p.label) + "\n";
    }
    return text;
}

} // namespace qht
