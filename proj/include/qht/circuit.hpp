#pragma once

#include <string>
#include <vector>

#include "qht/statevector.hpp"

namespace qht {

// Ordered gate list over a fixed-width qubit register.
struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    void append(Gate gate) { gates.push_back(std::move(gate)); }
    void append(const Circuit& other);
};

// Runs the circuit on |0...0> and returns the final state.
StateVector simulate(const Circuit& circuit);

// Applies every gate of the circuit to an existing state in order.
void apply_circuit(StateVector& state, const Circuit& circuit);

// QASM-2.0-style text: h/x/ry/cx/cswap lines, angles at 17 significant digits.
std::string to_qasm(const Circuit& circuit);

} // namespace qht
