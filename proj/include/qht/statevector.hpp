#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qht/errors.hpp"

namespace qht {

using Complex = std::complex<double>;

// Qubit 0 is the most significant bit of the basis-state index, so circuit
// diagrams (ancilla on top) and amplitude layouts read the same way.
struct StateVector {
    int num_qubits = 0;
    std::vector<Complex> amplitudes; // length 2^num_qubits, unit L2 norm

    std::size_t dim() const { return amplitudes.size(); }
};

enum class GateKind { H, RY, X, CNOT, CSWAP, CRY };

struct Control {
    int qubit;
    int bit; // control basis bit, 0 or 1
};

// One gate instance. `target2` is only meaningful for CSWAP (second swap
// qubit); `angle` only for RY/CRY. CNOT and CSWAP carry their control in
// `controls`; CRY may carry any number of controls with either basis bit.
struct Gate {
    GateKind kind;
    int target = 0;
    int target2 = -1;
    std::vector<Control> controls;
    double angle = 0.0;

    static Gate h(int q) { return {GateKind::H, q, -1, {}, 0.0}; }
    static Gate x(int q) { return {GateKind::X, q, -1, {}, 0.0}; }
    static Gate ry(int q, double angle) { return {GateKind::RY, q, -1, {}, angle}; }
    static Gate cnot(int control, int target) {
        return {GateKind::CNOT, target, -1, {{control, 1}}, 0.0};
    }
    static Gate cswap(int control, int t1, int t2) {
        return {GateKind::CSWAP, t1, t2, {{control, 1}}, 0.0};
    }
    static Gate cry(int control, int control_bit, int target, double angle) {
        return {GateKind::CRY, target, -1, {{control, control_bit}}, angle};
    }
};

struct MeasurementRecord {
    int qubit = 0;
    std::int64_t shots = 0;
    std::int64_t count_zero = 0;
    std::int64_t count_one = 0;
    std::uint64_t seed = 0;

    double estimate() const {
        return static_cast<double>(count_zero - count_one) / static_cast<double>(shots);
    }
};

// |0...0> on num_qubits qubits; 1 <= num_qubits <= 24.
StateVector init_zero(int num_qubits);

// Applies the gate in place by amplitude-pair iteration: O(2^m) per gate,
// no dense matrices. Norm is preserved to within 1e-12.
void apply_gate(StateVector& state, const Gate& gate);

// P(qubit = 0) under the Born rule.
double probability_zero(const StateVector& state, int qubit);

// <Z> on one qubit: P(0) - P(1).
double expectation_z(const StateVector& state, int qubit);

// Draws `shots` single-qubit Z measurements from Binomial(shots, P(0)).
// Deterministic for a fixed seed; each call owns its generator, so
// concurrent callers with distinct seeds reproduce bit-identically.
MeasurementRecord sample_z(const StateVector& state, int qubit, std::int64_t shots,
                           std::uint64_t seed);

// Debug dump, one row per basis state: basis_index,re,im
void dump_csv(const StateVector& state, std::ostream& out);

} // namespace qht
