#include "qht/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qht {

namespace {

constexpr double kLossEps = 1e-15; // clamps h inside (0,1) for the log terms

void check_labeled_set(const std::vector<LabeledPoint>& set, const char* what) {
    if (set.empty()) throw argument_error(std::string(what) + " is empty");
    const std::size_t dim = set.front().features.size();
    for (const LabeledPoint& p : set) {
        if (p.label != 0 && p.label != 1) {
            throw data_error("label must be 0 or 1, got " + std::to_string(p.label));
        }
        if (p.features.size() != dim) {
            throw argument_error(std::string(what) + " has inconsistent feature dimensions");
        }
    }
}

// <w, x> + w0 via the interference test on max-abs rescaled augmented vectors.
double augmented_inner_product(const std::vector<double>& x, const LogisticModel& model,
                               const EstimatorConfig& cfg) {
    if (x.size() != model.weights.size()) {
        throw argument_error("input dimension " + std::to_string(x.size()) +
                             " does not match weight dimension " +
                             std::to_string(model.weights.size()));
    }
    std::vector<double> aug_w = model.weights;
    aug_w.push_back(model.bias);
    std::vector<double> aug_x = x;
    aug_x.push_back(1.0);

    double scale = 1.0;
    for (double w : aug_w) scale = std::max(scale, std::abs(w));
    std::vector<double> scaled_w = aug_w;
    for (double& w : scaled_w) w /= scale;

    return gqht(BoundedVector::of(scaled_w), BoundedVector::of(aug_x), cfg).value * scale;
}

double bce_loss(double h, int y) {
    const double clamped = std::clamp(h, kLossEps, 1.0 - kLossEps);
    return y ? -std::log(clamped) : -std::log(1.0 - clamped);
}

std::array<std::vector<std::size_t>, 2> indices_by_class(
    const std::vector<LabeledPoint>& set) {
    std::array<std::vector<std::size_t>, 2> by_class;
    for (std::size_t i = 0; i < set.size(); ++i) by_class[set[i].label].push_back(i);
    return by_class;
}

// One batched interference test over a class, zero-padded to a power of two;
// all-zero vectors add nothing to the sum.
double class_inner_sum(const std::vector<LabeledPoint>& train_set,
                       const std::vector<std::size_t>& members,
                       const BoundedVector& point, const EstimatorConfig& cfg) {
    std::vector<BoundedVector> batch;
    batch.reserve(members.size());
    for (std::size_t i : members) {
        batch.push_back(BoundedVector::of(train_set[i].features));
    }
    std::size_t padded = 1;
    while (padded < batch.size()) padded <<= 1;
    const std::vector<double> zeros(train_set.front().features.size(), 0.0);
    while (batch.size() < padded) batch.push_back(BoundedVector::of(zeros));
    return gqht_batched(batch, point, cfg).value;
}

} // namespace

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double hypothesis(const std::vector<double>& x, const LogisticModel& model,
                  const EstimatorConfig& cfg) {
    return sigmoid(augmented_inner_product(x, model, cfg));
}

int label_from_hypothesis(double h) { return h > 0.5 ? 1 : 0; }

int centroid_label_from_score(double score) { return score > 0.0 ? 0 : 1; }

BatchEval logistic_batch_eval(const std::vector<LabeledPoint>& batch,
                              const LogisticModel& model, const EstimatorConfig& cfg) {
    check_labeled_set(batch, "batch");
    const std::size_t dim = batch.front().features.size();
    BatchEval eval;
    eval.grad_weights.assign(dim, 0.0);
    const double inv = 1.0 / static_cast<double>(batch.size());
    for (const LabeledPoint& p : batch) {
        const double h = hypothesis(p.features, model, cfg);
        const double residual = h - static_cast<double>(p.label);
        eval.loss += bce_loss(h, p.label) * inv;
        for (std::size_t f = 0; f < dim; ++f) {
            eval.grad_weights[f] += residual * p.features[f] * inv;
        }
        eval.grad_bias += residual * inv;
    }
    return eval;
}

std::pair<LogisticModel, TrainReport> train_logistic(
    const std::vector<LabeledPoint>& train_set, const std::vector<LabeledPoint>& test_set,
    const LogisticHyperparams& hyperparams, const EstimatorConfig& cfg) {
    check_labeled_set(train_set, "training set");
    check_labeled_set(test_set, "test set");
    if (hyperparams.batch_size < 1) throw argument_error("batch_size must be >= 1");
    if (hyperparams.epochs < 1) throw argument_error("epochs must be >= 1");
    if (!(hyperparams.learning_rate > 0.0)) {
        throw argument_error("learning_rate must be > 0");
    }

    LogisticModel model;
    model.hyperparams = hyperparams;
    model.weights.assign(train_set.front().features.size(), 0.0);
    model.bias = 0.0;

    TrainReport report;
    report.loss_curve.reserve(hyperparams.epochs);

    std::mt19937_64 rng(hyperparams.seed);
    std::vector<std::size_t> order(train_set.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const std::size_t batch_size = std::min(hyperparams.batch_size, train_set.size());

    for (std::size_t epoch = 0; epoch < hyperparams.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        double epoch_loss = 0.0;
        std::size_t n_batches = 0;
        for (std::size_t start = 0; start < order.size(); start += batch_size) {
            const std::size_t stop = std::min(start + batch_size, order.size());
            std::vector<LabeledPoint> batch;
            batch.reserve(stop - start);
            for (std::size_t i = start; i < stop; ++i) batch.push_back(train_set[order[i]]);

            const BatchEval eval = logistic_batch_eval(batch, model, cfg);
            report.inner_product_calls += static_cast<std::int64_t>(batch.size());
            for (std::size_t f = 0; f < model.weights.size(); ++f) {
                model.weights[f] -= hyperparams.learning_rate * eval.grad_weights[f];
            }
            model.bias -= hyperparams.learning_rate * eval.grad_bias;
            epoch_loss += eval.loss;
            ++n_batches;
        }
        report.loss_curve.push_back(epoch_loss / static_cast<double>(n_batches));
    }

    report.final_accuracy_train = accuracy_logistic(model, train_set, cfg);
    report.final_accuracy_test = accuracy_logistic(model, test_set, cfg);
    report.inner_product_calls +=
        static_cast<std::int64_t>(train_set.size() + test_set.size());
    return {std::move(model), std::move(report)};
}

int predict_logistic(const LogisticModel& model, const std::vector<double>& x,
                     const EstimatorConfig& cfg) {
    return label_from_hypothesis(hypothesis(x, model, cfg));
}

CentroidModel fit_centroid(const std::vector<LabeledPoint>& train_set) {
    check_labeled_set(train_set, "training set");
    const auto by_class = indices_by_class(train_set);
    if (by_class[0].empty() || by_class[1].empty() ||
        by_class[0].size() != by_class[1].size()) {
        throw balance_error("centroid fit requires balanced classes (got " +
                            std::to_string(by_class[0].size()) + " vs " +
                            std::to_string(by_class[1].size()) +
                            "); run balance_classes first");
    }
    const std::size_t class_count = by_class[0].size();
    const std::size_t dim = train_set.front().features.size();

    CentroidModel model;
    model.c0.assign(dim, 0.0);
    model.c1.assign(dim, 0.0);
    for (std::size_t i : by_class[0]) {
        for (std::size_t f = 0; f < dim; ++f) model.c0[f] += train_set[i].features[f];
    }
    for (std::size_t i : by_class[1]) {
        for (std::size_t f = 0; f < dim; ++f) model.c1[f] += train_set[i].features[f];
    }
    const double inv = 1.0 / static_cast<double>(class_count);
    for (std::size_t f = 0; f < dim; ++f) {
        model.c0[f] *= inv;
        model.c1[f] *= inv;
    }
    model.w_diff.resize(dim);
    model.c_mid.resize(dim);
    for (std::size_t f = 0; f < dim; ++f) {
        model.w_diff[f] = model.c0[f] - model.c1[f];
        model.c_mid[f] = 0.5 * (model.c0[f] + model.c1[f]);
    }

    // Offset from within-class pairwise inner products (diagonal included).
    const EstimatorConfig exact = EstimatorConfig::exact();
    double sums[2] = {0.0, 0.0};
    for (int label = 0; label < 2; ++label) {
        std::vector<BoundedVector> encoded;
        encoded.reserve(class_count);
        for (std::size_t i : by_class[label]) {
            encoded.push_back(BoundedVector::of(train_set[i].features));
        }
        for (std::size_t a = 0; a < class_count; ++a) {
            for (std::size_t b = 0; b < class_count; ++b) {
                sums[label] += gqht(encoded[a], encoded[b], exact).value;
            }
        }
    }
    const double inv_sq = inv * inv;
    model.offset_b = 0.5 * (sums[0] * inv_sq - sums[1] * inv_sq);
    return model;
}

double centroid_score(const CentroidModel& model, const std::vector<double>& x,
                      const std::vector<LabeledPoint>& train_set,
                      const EstimatorConfig& cfg) {
    check_labeled_set(train_set, "training set");
    const auto by_class = indices_by_class(train_set);
    if (by_class[0].size() != by_class[1].size() || by_class[0].empty()) {
        throw balance_error("centroid prediction requires the balanced training set");
    }
    const double inv = 1.0 / static_cast<double>(by_class[0].size());
    const BoundedVector point = BoundedVector::of(x);
    const double sum0 = class_inner_sum(train_set, by_class[0], point, cfg);
    const double sum1 = class_inner_sum(train_set, by_class[1], point, cfg);
    return inv * sum0 - inv * sum1 + model.offset_b;
}

int predict_centroid(const CentroidModel& model, const std::vector<double>& x,
                     const std::vector<LabeledPoint>& train_set,
                     const EstimatorConfig& cfg) {
    return centroid_label_from_score(centroid_score(model, x, train_set, cfg));
}

double accuracy_logistic(const LogisticModel& model,
                         const std::vector<LabeledPoint>& test_set,
                         const EstimatorConfig& cfg) {
    check_labeled_set(test_set, "test set");
    std::size_t correct = 0;
    for (const LabeledPoint& p : test_set) {
        if (predict_logistic(model, p.features, cfg) == p.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(test_set.size());
}

double accuracy_centroid(const CentroidModel& model,
                         const std::vector<LabeledPoint>& test_set,
                         const std::vector<LabeledPoint>& train_set,
                         const EstimatorConfig& cfg) {
    check_labeled_set(test_set, "test set");
    std::size_t correct = 0;
    for (const LabeledPoint& p : test_set) {
        if (predict_centroid(model, p.features, train_set, cfg) == p.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(test_set.size());
}

} // namespace qht
