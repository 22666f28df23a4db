#include "qht/statevector.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <string>

namespace qht {

namespace {

constexpr int kMaxQubits = 24; // desk-scale bound: 2^24 amplitudes

std::size_t qubit_mask(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits) {
        throw index_error("qubit index " + std::to_string(qubit) + " out of range for " +
                          std::to_string(state.num_qubits) + "-qubit state");
    }
    // qubit 0 = MSB of the basis index
    return std::size_t{1} << (state.num_qubits - 1 - qubit);
}

// Mask/value pair selecting the basis indices on which a controlled gate acts.
struct ControlPattern {
    std::size_t mask = 0;
    std::size_t value = 0;
};

ControlPattern control_pattern(const StateVector& state, const Gate& gate) {
    ControlPattern pat;
    for (const Control& c : gate.controls) {
        if (c.qubit == gate.target || c.qubit == gate.target2) {
            throw index_error("control qubit " + std::to_string(c.qubit) +
                              " coincides with a target");
        }
        std::size_t m = qubit_mask(state, c.qubit);
        pat.mask |= m;
        if (c.bit) pat.value |= m;
    }
    return pat;
}

// Applies a real 2x2 matrix [[a,b],[c,d]] to the target qubit on every basis
// pair whose control bits match the pattern.
void apply_two_by_two(StateVector& state, int target, const ControlPattern& pat, double a,
                      double b, double c, double d) {
    const std::size_t tmask = qubit_mask(state, target);
    const std::size_t dim = state.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tmask) != 0) continue;
        if ((i & pat.mask) != pat.value) continue;
        const std::size_t j = i | tmask;
        const Complex lo = state.amplitudes[i];
        const Complex hi = state.amplitudes[j];
        state.amplitudes[i] = a * lo + b * hi;
        state.amplitudes[j] = c * lo + d * hi;
    }
}

void apply_swap(StateVector& state, int t1, int t2, const ControlPattern& pat) {
    const std::size_t m1 = qubit_mask(state, t1);
    const std::size_t m2 = qubit_mask(state, t2);
    if (m1 == m2) throw index_error("swap targets coincide");
    const std::size_t dim = state.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & m1) != 0 || (i & m2) == 0) continue; // visit |t1=0,t2=1> once
        if ((i & pat.mask) != pat.value) continue;
        std::swap(state.amplitudes[i], state.amplitudes[(i | m1) & ~m2]);
    }
}

} // namespace

StateVector init_zero(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw size_error("num_qubits must be in [1, " + std::to_string(kMaxQubits) +
                         "], got " + std::to_string(num_qubits));
    }
    StateVector state;
    state.num_qubits = num_qubits;
    state.amplitudes.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    state.amplitudes[0] = Complex{1.0, 0.0};
    return state;
}

void apply_gate(StateVector& state, const Gate& gate) {
    const ControlPattern pat = control_pattern(state, gate);
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (gate.kind) {
    case GateKind::H:
        apply_two_by_two(state, gate.target, pat, inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
        break;
    case GateKind::RY:
    case GateKind::CRY: {
        // RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        apply_two_by_two(state, gate.target, pat, c, -s, s, c);
        break;
    }
    case GateKind::X:
    case GateKind::CNOT:
        apply_two_by_two(state, gate.target, pat, 0.0, 1.0, 1.0, 0.0);
        break;
    case GateKind::CSWAP:
        apply_swap(state, gate.target, gate.target2, pat);
        break;
    }
}

double probability_zero(const StateVector& state, int qubit) {
    const std::size_t mask = qubit_mask(state, qubit);
    double p0 = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((i & mask) == 0) p0 += std::norm(state.amplitudes[i]);
    }
    return p0;
}

double expectation_z(const StateVector& state, int qubit) {
    const std::size_t mask = qubit_mask(state, qubit);
    double expectation = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const double p = std::norm(state.amplitudes[i]);
        expectation += (i & mask) ? -p : p;
    }
    return expectation;
}

MeasurementRecord sample_z(const StateVector& state, int qubit, std::int64_t shots,
                           std::uint64_t seed) {
    if (shots < 1) throw argument_error("shots must be >= 1");
    double p0 = probability_zero(state, qubit);
    p0 = std::min(1.0, std::max(0.0, p0));

    // Uniform doubles in [0,1) built from the top 53 bits keep the draw
    // sequence independent of the standard library's distribution internals.
    std::mt19937_64 rng(seed);
    std::int64_t zeros = 0;
    for (std::int64_t k = 0; k < shots; ++k) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p0) ++zeros;
    }
    return MeasurementRecord{qubit, shots, zeros, shots - zeros, seed};
}

void dump_csv(const StateVector& state, std::ostream& out) {
    char line[96];
    for (std::size_t i = 0; i < state.dim(); ++i) {
        std::snprintf(line, sizeof(line), "%zu,%.17g,%.17g\n", i, state.amplitudes[i].real(),
                      state.amplitudes[i].imag());
        out << line;
    }
}

} // namespace qht
