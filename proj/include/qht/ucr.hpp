#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qht/circuit.hpp"
#include "qht/errors.hpp"

namespace qht {

// Rotation angles indexed by the basis state of the control register.
struct AngleVector {
    int n_controls = 0;
    std::vector<double> values; // length 2^n_controls

    static AngleVector of(std::vector<double> values);
};

// Gray-code ordering of {0,...,2^n-1}: order[q] = gray_code(q).
struct GrayTable {
    int n = 0;
    std::vector<std::uint32_t> order;
};

// The scaled transform matrix: entries[s][q] = (-1)^{b_s . g_q} / 2^n, stored
// row-major. Satisfies M * (2^n M^T) = I.
struct TransformMatrix {
    int n = 0;
    std::vector<double> entries; // 2^n x 2^n, row-major

    double at(std::uint32_t s, std::uint32_t q) const {
        return entries[(std::size_t{s} << n) + q];
    }
};

// g_k = k XOR (k >> 1).
std::uint32_t gray_code(std::uint32_t k);

// n-bit string of g_k, most significant bit first.
std::string gray_code_bits(std::uint32_t k, int n);

GrayTable gray_table(int n);

// Explicit transform matrix; slow reference path, 1 <= n <= 12.
TransformMatrix build_matrix(int n);

// Circuit angles alpha for target angles theta. The synthesized RY/CNOT
// sequence then satisfies theta = A alpha with A[s][q] = (-1)^{b_s . g_q},
// i.e. alpha = (1/2^n) A^T theta. Computed with a fast Walsh-Hadamard
// transform followed by the Gray-order permutation, O(2^n n) arithmetic.
AngleVector angle_transform(const AngleVector& theta);

// Reference implementation of the same map through the explicit matrix.
AngleVector angle_transform_dense(const AngleVector& theta, const TransformMatrix& matrix);

// Uniformly-controlled RY: applies RY(theta_j) to `target` when the control
// register is in basis state |j> (controls[0] = most significant bit).
// Emits the alternating RY/CNOT sequence of exactly 2^{n+1} gates for n >= 1
// (a bare RY for n = 0); the CNOT after step q is controlled by the qubit at
// the bit position where consecutive Gray codes differ, cyclically.
Circuit synthesize_ucry(const std::vector<int>& controls, int target,
                        const AngleVector& alpha);

// Same sequence with every rotation additionally conditioned on one extra
// qubit: each RY(a) becomes RY(a/2), CNOT(extra->target), RY(-a/2),
// CNOT(extra->target). A 0-basis condition is realized by X-conjugating the
// extra qubit. Emitted gates stay within {X, RY, CNOT}.
Circuit synthesize_ucry_with_condition(int extra_control, int extra_bit,
                                       const std::vector<int>& controls, int target,
                                       const AngleVector& alpha);

} // namespace qht
