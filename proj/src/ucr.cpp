#include "qht/ucr.hpp"

#include <bit>
#include <unordered_set>

namespace qht {

namespace {

// n such that 2^n == len, or -1 if len is not a power of two.
int log2_exact(std::size_t len) {
    if (len == 0 || (len & (len - 1)) != 0) return -1;
    return std::countr_zero(len);
}

void check_distinct(const std::vector<int>& controls, int target) {
    std::unordered_set<int> seen{target};
    for (int q : controls) {
        if (!seen.insert(q).second) {
            throw argument_error("duplicate qubit index " + std::to_string(q) +
                                 " in uniformly-controlled rotation");
        }
    }
}

void fast_walsh_hadamard(std::vector<double>& v) {
    const std::size_t n = v.size();
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t block = 0; block < n; block += len << 1) {
            for (std::size_t j = block; j < block + len; ++j) {
                const double a = v[j];
                const double b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
        }
    }
}

} // namespace

AngleVector AngleVector::of(std::vector<double> values) {
    const int n = log2_exact(values.size());
    if (n < 0) {
        throw size_error("angle vector length must be a power of two, got " +
                         std::to_string(values.size()));
    }
    return AngleVector{n, std::move(values)};
}

std::uint32_t gray_code(std::uint32_t k) { return k ^ (k >> 1); }

std::string gray_code_bits(std::uint32_t k, int n) {
    const std::uint32_t g = gray_code(k);
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if ((g >> (n - 1 - i)) & 1u) bits[static_cast<std::size_t>(i)] = '1';
    }
    return bits;
}

GrayTable gray_table(int n) {
    GrayTable table;
    table.n = n;
    table.order.resize(std::size_t{1} << n);
    for (std::uint32_t q = 0; q < table.order.size(); ++q) table.order[q] = gray_code(q);
    return table;
}

TransformMatrix build_matrix(int n) {
    if (n < 1 || n > 12) {
        throw size_error("transform matrix supports 1 <= n <= 12, got " + std::to_string(n));
    }
    const std::uint32_t dim = 1u << n;
    const double scale = 1.0 / static_cast<double>(dim);
    TransformMatrix m;
    m.n = n;
    m.entries.resize(std::size_t{dim} * dim);
    for (std::uint32_t s = 0; s < dim; ++s) {
        for (std::uint32_t q = 0; q < dim; ++q) {
            const int parity = std::popcount(s & gray_code(q)) & 1;
            m.entries[(std::size_t{s} << n) + q] = parity ? -scale : scale;
        }
    }
    return m;
}

AngleVector angle_transform(const AngleVector& theta) {
    std::vector<double> wht = theta.values;
    fast_walsh_hadamard(wht);
    const std::size_t dim = wht.size();
    std::vector<double> alpha(dim);
    const double scale = 1.0 / static_cast<double>(dim);
    for (std::uint32_t q = 0; q < dim; ++q) alpha[q] = wht[gray_code(q)] * scale;
    return AngleVector{theta.n_controls, std::move(alpha)};
}

AngleVector angle_transform_dense(const AngleVector& theta, const TransformMatrix& matrix) {
    if (matrix.n != theta.n_controls) {
        throw argument_error("matrix size does not match angle vector");
    }
    const std::uint32_t dim = 1u << matrix.n;
    std::vector<double> alpha(dim, 0.0);
    for (std::uint32_t q = 0; q < dim; ++q) {
        double sum = 0.0;
        for (std::uint32_t s = 0; s < dim; ++s) sum += matrix.at(s, q) * theta.values[s];
        alpha[q] = sum;
    }
    return AngleVector{theta.n_controls, std::move(alpha)};
}

namespace {

// Control qubit of the CNOT closing Gray-code step q: the bit position where
// g_q and g_{q+1} (cyclically) differ, mapped so that bit 0 (LSB) is the last
// control in the list.
int step_control(const std::vector<int>& controls, std::uint32_t q, std::uint32_t count) {
    const std::uint32_t diff = gray_code(q) ^ gray_code((q + 1) % count);
    const int bit = std::countr_zero(diff);
    return controls[controls.size() - 1 - static_cast<std::size_t>(bit)];
}

} // namespace

Circuit synthesize_ucry(const std::vector<int>& controls, int target,
                        const AngleVector& alpha) {
    if (static_cast<int>(controls.size()) != alpha.n_controls) {
        throw argument_error("control count does not match angle vector");
    }
    check_distinct(controls, target);

    Circuit circuit;
    circuit.num_qubits = target + 1;
    for (int q : controls) circuit.num_qubits = std::max(circuit.num_qubits, q + 1);

    if (alpha.n_controls == 0) {
        circuit.append(Gate::ry(target, alpha.values[0]));
        return circuit;
    }
    const std::uint32_t count = 1u << alpha.n_controls;
    for (std::uint32_t q = 0; q < count; ++q) {
        circuit.append(Gate::ry(target, alpha.values[q]));
        circuit.append(Gate::cnot(step_control(controls, q, count), target));
    }
    return circuit;
}

Circuit synthesize_ucry_with_condition(int extra_control, int extra_bit,
                                       const std::vector<int>& controls, int target,
                                       const AngleVector& alpha) {
    if (static_cast<int>(controls.size()) != alpha.n_controls) {
        throw argument_error("control count does not match angle vector");
    }
    std::vector<int> all = controls;
    all.push_back(extra_control);
    check_distinct(all, target);

    Circuit circuit;
    circuit.num_qubits = std::max(target, extra_control) + 1;
    for (int q : controls) circuit.num_qubits = std::max(circuit.num_qubits, q + 1);

    if (extra_bit == 0) circuit.append(Gate::x(extra_control));

    const std::uint32_t count = 1u << alpha.n_controls;
    for (std::uint32_t q = 0; q < count; ++q) {
        const double half = alpha.values[q] / 2.0;
        circuit.append(Gate::ry(target, half));
        circuit.append(Gate::cnot(extra_control, target));
        circuit.append(Gate::ry(target, -half));
        circuit.append(Gate::cnot(extra_control, target));
        if (alpha.n_controls > 0) {
            circuit.append(Gate::cnot(step_control(controls, q, count), target));
        }
    }

    if (extra_bit == 0) circuit.append(Gate::x(extra_control));
    return circuit;
}

} // namespace qht
