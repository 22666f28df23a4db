#pragma once

#include <cstdint>
#include <vector>

#include "qht/datasets.hpp"
#include "qht/hadamard_test.hpp"

namespace qht {

struct LogisticHyperparams {
    double learning_rate = 0.5;
    std::size_t batch_size = 16;
    std::size_t epochs = 100;
    std::uint64_t seed = 0;
};

struct LogisticModel {
    std::vector<double> weights; // one per feature
    double bias = 0.0;
    LogisticHyperparams hyperparams;
};

struct CentroidModel {
    std::vector<double> c0;
    std::vector<double> c1;
    std::vector<double> w_diff; // c0 - c1
    std::vector<double> c_mid;  // (c0 + c1) / 2
    double offset_b = 0.0;
};

struct TrainReport {
    std::vector<double> loss_curve; // one value per epoch
    double final_accuracy_train = 0.0;
    double final_accuracy_test = 0.0;
    std::int64_t inner_product_calls = 0;
};

// 1 / (1 + e^-z), stable for |z| up to 700.
double sigmoid(double z);

// sigma(<w, x> + w0). The augmented inner product (w, w0).(x, 1) runs through
// the interference test after rescaling by s = max(1, max|w_i|, |w0|), which
// keeps every encoded component inside [-1, 1] while preserving the product
// exactly. Weights may leave [-1, 1] during training; inputs may not.
double hypothesis(const std::vector<double>& x, const LogisticModel& model,
                  const EstimatorConfig& cfg);

// Decision thresholds, exposed separately so the tie rules are testable:
// logistic labels 1 iff h > 0.5 (h = 0.5 -> 0); centroid labels 0 iff
// score > 0 (score = 0 -> 1).
int label_from_hypothesis(double h);
int centroid_label_from_score(double score);

// Loss and analytic gradient of the binary cross-entropy objective over one
// batch, with forward passes through `hypothesis`.
struct BatchEval {
    double loss = 0.0;
    std::vector<double> grad_weights;
    double grad_bias = 0.0;
};
BatchEval logistic_batch_eval(const std::vector<LabeledPoint>& batch,
                              const LogisticModel& model, const EstimatorConfig& cfg);

// Stochastic batch gradient descent on the BCE objective; batches are a
// seeded shuffled partition of the training set each epoch, weights start at
// zero. The per-epoch loss curve records the mean batch objective before
// each update. Deterministic for fixed seeds in exact mode.
std::pair<LogisticModel, TrainReport> train_logistic(
    const std::vector<LabeledPoint>& train_set, const std::vector<LabeledPoint>& test_set,
    const LogisticHyperparams& hyperparams, const EstimatorConfig& cfg);

int predict_logistic(const LogisticModel& model, const std::vector<double>& x,
                     const EstimatorConfig& cfg);

// Componentwise class means plus the kernel-form offset
// b = (<c0,c0> - <c1,c1>) / 2, accumulated from within-class pairwise inner
// products in exact mode. Requires balanced classes.
CentroidModel fit_centroid(const std::vector<LabeledPoint>& train_set);

// (1/M) sum_{class 0} <x_m, x> - (1/M) sum_{class 1} <x_m, x> + b. Each
// class sum is one batched interference test; class sets whose size is not a
// power of two are padded with zero vectors, which contribute nothing.
double centroid_score(const CentroidModel& model, const std::vector<double>& x,
                      const std::vector<LabeledPoint>& train_set,
                      const EstimatorConfig& cfg);

int predict_centroid(const CentroidModel& model, const std::vector<double>& x,
                     const std::vector<LabeledPoint>& train_set,
                     const EstimatorConfig& cfg);

double accuracy_logistic(const LogisticModel& model,
                         const std::vector<LabeledPoint>& test_set,
                         const EstimatorConfig& cfg);
double accuracy_centroid(const CentroidModel& model,
                         const std::vector<LabeledPoint>& test_set,
                         const std::vector<LabeledPoint>& train_set,
                         const EstimatorConfig& cfg);

} // namespace qht
