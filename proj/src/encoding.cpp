#include "qht/encoding.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace qht {

namespace {

std::size_t padded_pow2(std::size_t raw_dim) {
    std::size_t dim = 1;
    while (dim < raw_dim) dim <<= 1;
    return dim;
}

int log2_of_pow2(std::size_t dim) { return std::countr_zero(dim); }

} // namespace

BoundedVector BoundedVector::of(const std::vector<double>& raw) {
    if (raw.empty()) throw argument_error("bounded vector must have at least one component");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!(raw[i] >= -1.0 && raw[i] <= 1.0)) {
            throw domain_error("component " + std::to_string(i) + " = " +
                               std::to_string(raw[i]) + " outside [-1, 1]");
        }
    }
    BoundedVector x;
    x.raw_dim = raw.size();
    x.components = raw;
    x.components.resize(padded_pow2(raw.size()), 0.0);
    return x;
}

int BoundedVector::index_qubits() const { return log2_of_pow2(components.size()); }

NormalizedVector NormalizedVector::of(std::vector<double> values) {
    if (values.empty() || (values.size() & (values.size() - 1)) != 0) {
        throw size_error("normalized vector length must be a power of two, got " +
                         std::to_string(values.size()));
    }
    double norm_sq = 0.0;
    for (double v : values) norm_sq += v * v;
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        throw domain_error("vector is not L2-normalized: |x|^2 = " + std::to_string(norm_sq));
    }
    return NormalizedVector{std::move(values)};
}

NormalizedVector NormalizedVector::normalized(const std::vector<double>& raw) {
    if (raw.empty()) throw argument_error("cannot normalize an empty vector");
    std::vector<double> padded = raw;
    padded.resize(padded_pow2(raw.size()), 0.0);
    double norm_sq = 0.0;
    for (double v : padded) norm_sq += v * v;
    if (norm_sq <= 0.0) throw domain_error("cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& v : padded) v *= inv;
    return NormalizedVector{std::move(padded)};
}

int NormalizedVector::index_qubits() const { return log2_of_pow2(components.size()); }

QubitLayout pair_layout(int n) {
    QubitLayout layout;
    layout.ancilla = 0;
    layout.component_index.resize(static_cast<std::size_t>(n));
    std::iota(layout.component_index.begin(), layout.component_index.end(), 1);
    layout.component = n + 1;
    layout.utility = n + 2;
    return layout;
}

QubitLayout batch_layout(int p, int n) {
    QubitLayout layout;
    layout.ancilla = 0;
    layout.sample_index.resize(static_cast<std::size_t>(p));
    std::iota(layout.sample_index.begin(), layout.sample_index.end(), 1);
    layout.component_index.resize(static_cast<std::size_t>(n));
    std::iota(layout.component_index.begin(), layout.component_index.end(), p + 1);
    layout.component = p + n + 1;
    layout.utility = p + n + 2;
    return layout;
}

AngleVector to_angles(const BoundedVector& x) {
    std::vector<double> values(x.components.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        values[j] = 2.0 * std::acos(x.components[j]);
    }
    return AngleVector::of(std::move(values));
}

Circuit encode_pair(const BoundedVector& x_p, const BoundedVector& x_q) {
    if (x_p.components.size() != x_q.components.size()) {
        throw argument_error("encode_pair inputs have different padded dimensions: " +
                             std::to_string(x_p.components.size()) + " vs " +
                             std::to_string(x_q.components.size()));
    }
    const int n = x_p.index_qubits();
    const QubitLayout layout = pair_layout(n);

    Circuit circuit;
    circuit.num_qubits = layout.total_qubits();
    circuit.append(Gate::h(layout.ancilla));
    for (int q : layout.component_index) circuit.append(Gate::h(q));

    // One uniformly-controlled rotation with the ancilla as the most
    // significant control selects theta_p on the |0> branch and theta_q on
    // the |1> branch.
    const AngleVector theta_p = to_angles(x_p);
    const AngleVector theta_q = to_angles(x_q);
    std::vector<double> theta = theta_p.values;
    theta.insert(theta.end(), theta_q.values.begin(), theta_q.values.end());

    std::vector<int> controls{layout.ancilla};
    controls.insert(controls.end(), layout.component_index.begin(),
                    layout.component_index.end());
    circuit.append(
        synthesize_ucry(controls, layout.component, angle_transform(AngleVector::of(theta))));
    return circuit;
}

Circuit encode_batch(const std::vector<BoundedVector>& training, const BoundedVector& test) {
    if (training.empty() || (training.size() & (training.size() - 1)) != 0) {
        throw size_error("training count must be a power of two (got " +
                         std::to_string(training.size()) +
                         "); subsample or pad explicitly before encoding");
    }
    const int n = test.index_qubits();
    for (const BoundedVector& x : training) {
        if (x.components.size() != test.components.size()) {
            throw argument_error("training vector dimension differs from the test point");
        }
    }
    const int p = log2_of_pow2(training.size());
    const QubitLayout layout = batch_layout(p, n);

    Circuit circuit;
    circuit.num_qubits = layout.total_qubits();
    circuit.append(Gate::h(layout.ancilla));
    for (int q : layout.sample_index) circuit.append(Gate::h(q));
    for (int q : layout.component_index) circuit.append(Gate::h(q));

    // Training branch: 0-basis ancilla condition, angles indexed by
    // (sample, component) with the sample register as the high bits.
    std::vector<double> theta_train;
    theta_train.reserve(training.size() * test.components.size());
    for (const BoundedVector& x : training) {
        const AngleVector theta = to_angles(x);
        theta_train.insert(theta_train.end(), theta.values.begin(), theta.values.end());
    }
    std::vector<int> train_controls = layout.sample_index;
    train_controls.insert(train_controls.end(), layout.component_index.begin(),
                          layout.component_index.end());
    circuit.append(synthesize_ucry_with_condition(
        layout.ancilla, 0, train_controls, layout.component,
        angle_transform(AngleVector::of(std::move(theta_train)))));

    // Test branch: 1-basis ancilla condition; the sample register stays in
    // uniform superposition.
    circuit.append(synthesize_ucry_with_condition(
        layout.ancilla, 1, layout.component_index, layout.component,
        angle_transform(to_angles(test))));
    return circuit;
}

std::vector<AngleVector> amplitude_encode_angles(const NormalizedVector& x) {
    const int n = x.index_qubits();
    std::vector<AngleVector> levels;
    levels.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const std::size_t blocks = std::size_t{1} << k;
        const std::size_t block_len = x.components.size() >> k;
        std::vector<double> beta(blocks, 0.0);
        for (std::size_t c = 0; c < blocks; ++c) {
            const double* block = x.components.data() + c * block_len;
            if (k == n - 1) {
                // Leaf level: the signed pair itself fixes the angle, which
                // is how negative components enter the state.
                if (block[0] != 0.0 || block[1] != 0.0) {
                    beta[c] = 2.0 * std::atan2(block[1], block[0]);
                }
            } else {
                double top = 0.0;
                double bottom = 0.0;
                for (std::size_t i = 0; i < block_len / 2; ++i) {
                    top += block[i] * block[i];
                    bottom += block[block_len / 2 + i] * block[block_len / 2 + i];
                }
                if (top + bottom > 0.0) {
                    beta[c] = 2.0 * std::atan2(std::sqrt(bottom), std::sqrt(top));
                }
            }
        }
        levels.push_back(AngleVector::of(std::move(beta)));
    }
    return levels;
}

Circuit amplitude_encode(const NormalizedVector& x) {
    const int n = x.index_qubits();
    Circuit circuit;
    circuit.num_qubits = std::max(n, 1);
    std::vector<int> controls;
    int level = 0;
    for (const AngleVector& beta : amplitude_encode_angles(x)) {
        circuit.append(synthesize_ucry(controls, level, angle_transform(beta)));
        controls.push_back(level);
        ++level;
    }
    return circuit;
}

} // namespace qht
