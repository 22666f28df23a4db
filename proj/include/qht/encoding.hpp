#pragma once

#include <vector>

#include "qht/circuit.hpp"
#include "qht/errors.hpp"
#include "qht/ucr.hpp"

namespace qht {

// Real vector with every component in [-1, 1], zero-padded to 2^n entries.
struct BoundedVector {
    std::size_t raw_dim = 0;
    std::vector<double> components; // length 2^n, zeros beyond raw_dim

    // Validates the bounds and pads; rejects |x_j| > 1, never clamps.
    static BoundedVector of(const std::vector<double>& raw);

    int index_qubits() const; // n = ceil(log2 raw_dim)
};

// Unit-L2-norm real vector of power-of-two length.
struct NormalizedVector {
    std::vector<double> components;

    // Checks the norm (within 1e-12) and the power-of-two length.
    static NormalizedVector of(std::vector<double> values);

    // Zero-pads to a power of two, then divides by the L2 norm.
    static NormalizedVector normalized(const std::vector<double>& raw);

    int index_qubits() const;
};

// Register roles of the interference circuits. Qubit order: ancilla,
// sample-index (batched only), component-index, component, utility.
struct QubitLayout {
    int ancilla = 0;
    std::vector<int> sample_index;
    std::vector<int> component_index;
    int component = 0;
    int utility = 0;

    int total_qubits() const { return static_cast<int>(sample_index.size() +
                                                       component_index.size()) + 3; }
};

QubitLayout pair_layout(int n);
QubitLayout batch_layout(int p, int n);

// Rotation angles 2*arccos(x_j), so RY(angle)|0> has <0| amplitude exactly x_j.
AngleVector to_angles(const BoundedVector& x);

// Circuit on n+3 qubits preparing (1/sqrt(2))[|0>|x_p> + |1>|x_q>] on the
// ancilla and register, with each component stored as
// x_j|0> + sqrt(1-x_j^2)|1> on the component qubit. The |1>-branch carries a
// plus sign (the cross branches of the two inputs live on different qubits,
// so <Z> is unaffected by that sign). Utility qubit untouched.
Circuit encode_pair(const BoundedVector& x_p, const BoundedVector& x_q);

// Circuit on p+n+3 qubits preparing (1/sqrt(2))[|0>|D> + |1>|test branch>].
// The training set (|training| = 2^p, power of two required) and the test
// point are encoded by two separate ancilla-conditioned sub-circuits; the
// test branch leaves the sample-index register in uniform superposition.
Circuit encode_batch(const std::vector<BoundedVector>& training, const BoundedVector& test);

// Circuit on n qubits preparing sum_j x'_j |j> through a binary tree of
// uniformly-controlled RY gates; signs of negative components are carried by
// the leaf-level rotation angles.
Circuit amplitude_encode(const NormalizedVector& x);

// Rotation angles of one amplitude-encoding tree level; level k has 2^k
// entries and rotates qubit k. Exposed for the ancilla-conditioned
// superposition used by the baseline Hadamard test.
std::vector<AngleVector> amplitude_encode_angles(const NormalizedVector& x);

} // namespace qht
