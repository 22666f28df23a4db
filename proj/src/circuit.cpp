#include "qht/circuit.hpp"

#include <cstdio>

namespace qht {

void Circuit::append(const Circuit& other) {
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

StateVector simulate(const Circuit& circuit) {
    StateVector state = init_zero(circuit.num_qubits);
    apply_circuit(state, circuit);
    return state;
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
    for (const Gate& gate : circuit.gates) apply_gate(state, gate);
}

namespace {

std::string angle_text(double angle) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

} // namespace

std::string to_qasm(const Circuit& circuit) {
    std::string text = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" +
                       std::to_string(circuit.num_qubits) + "];\n";
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
        case GateKind::H:
            text += "h q[" + std::to_string(g.target) + "];\n";
            break;
        case GateKind::X:
            text += "x q[" + std::to_string(g.target) + "];\n";
            break;
        case GateKind::RY:
            text += "ry(" + angle_text(g.angle) + ") q[" + std::to_string(g.target) + "];\n";
            break;
        case GateKind::CNOT:
            text += "cx q[" + std::to_string(g.controls.at(0).qubit) + "],q[" +
                    std::to_string(g.target) + "];\n";
            break;
        case GateKind::CSWAP:
            text += "cswap q[" + std::to_string(g.controls.at(0).qubit) + "],q[" +
                    std::to_string(g.target) + "],q[" + std::to_string(g.target2) + "];\n";
            break;
        case GateKind::CRY:
            // Only single-1-controlled RY has a direct qelib counterpart; the
            // circuit builders emit CRYs already decomposed, so this path is
            // for hand-built circuits.
            text += "cry(" + angle_text(g.angle) + ") q[" +
                    std::to_string(g.controls.at(0).qubit) + "],q[" +
                    std::to_string(g.target) + "];\n";
            break;
        }
    }
    return text;
}

} // namespace qht
