#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qht/encoding.hpp"
#include "qht/hadamard_test.hpp"

using namespace qht;

namespace {

// Closed-form pairwise superposition state: basis order (ancilla, index
// register, component, utility), |1>-branch of the component carrying the
// plus sign convention.
std::vector<Complex> reference_pair_state(const BoundedVector& x_p,
                                          const BoundedVector& x_q) {
    const std::size_t dim = x_p.components.size();
    const double norm = 1.0 / std::sqrt(2.0 * static_cast<double>(dim));
    std::vector<Complex> state(8 * dim, Complex{0.0, 0.0});
    for (int a = 0; a < 2; ++a) {
        const std::vector<double>& x = a == 0 ? x_p.components : x_q.components;
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t base = static_cast<std::size_t>(a) * 4 * dim + j * 4;
            state[base + 0] = Complex{norm * x[j], 0.0};
            state[base + 2] = Complex{norm * std::sqrt(1.0 - x[j] * x[j]), 0.0};
        }
    }
    return state;
}

double ancilla_expectation(const StateVector& state) { return expectation_z(state, 0); }

} // namespace

TEST_CASE("bounded vectors pad and validate") {
    const BoundedVector x = BoundedVector::of({0.5, -0.25, 1.0});
    CHECK(x.raw_dim == 3);
    CHECK(x.components == std::vector<double>{0.5, -0.25, 1.0, 0.0});
    CHECK(x.index_qubits() == 2);

    CHECK(BoundedVector::of({1.0}).index_qubits() == 0);
    CHECK_THROWS_AS(BoundedVector::of({2.0, 0.0}), domain_error);
    CHECK_THROWS_AS(BoundedVector::of({0.0, std::nan("")}), domain_error);
    CHECK_THROWS_AS(BoundedVector::of({}), argument_error);

    CHECK_THROWS_WITH_AS(BoundedVector::of({0.0, -1.5}),
                         doctest::Contains("component 1"), domain_error);
}

TEST_CASE("to_angles doubles the arccos of each component") {
    const AngleVector ones = to_angles(BoundedVector::of({1.0, 1.0, 1.0, 1.0}));
    for (double v : ones.values) CHECK(v == doctest::Approx(0.0));

    const AngleVector zeros = to_angles(BoundedVector::of({0.0, 0.0, 0.0, 0.0}));
    for (double v : zeros.values) CHECK(v == doctest::Approx(M_PI));

    const AngleVector mixed = to_angles(BoundedVector::of({-1.0, 0.5, 0.0, 1.0}));
    CHECK(mixed.values[0] == doctest::Approx(2.0 * M_PI));
    CHECK(mixed.values[1] == doctest::Approx(2.0 * M_PI / 3.0));
    CHECK(mixed.values[2] == doctest::Approx(M_PI));
    CHECK(mixed.values[3] == doctest::Approx(0.0));

    // RY(angle)|0> puts the component back in the <0| amplitude
    StateVector state = init_zero(1);
    apply_gate(state, Gate::ry(0, mixed.values[1]));
    CHECK(state.amplitudes[0].real() == doctest::Approx(0.5));
}

TEST_CASE("pairwise encoding reproduces the closed-form state") {
    SUBCASE("unit basis vectors") {
        const BoundedVector x = BoundedVector::of({1.0, 0.0, 0.0, 0.0});
        const StateVector state = simulate(encode_pair(x, x));
        const double expected = 1.0 / std::sqrt(8.0);
        // |a, 00, 0, 0> for a in {0, 1}
        CHECK(state.amplitudes[0].real() == doctest::Approx(expected));
        CHECK(state.amplitudes[16].real() == doctest::Approx(expected));
    }

    SUBCASE("worked four-component pair") {
        const BoundedVector p = BoundedVector::of({0.1, 0.25, -1.0, 0.9});
        const BoundedVector q = BoundedVector::of({-1.0, 0.75, 0.65, 0.89});
        const StateVector state = simulate(encode_pair(p, q));
        const std::vector<Complex> expected = reference_pair_state(p, q);
        REQUIRE(state.dim() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(std::abs(state.amplitudes[i] - expected[i]) < 1e-10);
        }
    }

    SUBCASE("all-zero vectors live entirely in the |1> component branch") {
        const BoundedVector z = BoundedVector::of({0.0, 0.0});
        const StateVector state = simulate(encode_pair(z, z));
        for (std::size_t i = 0; i < state.dim(); ++i) {
            const bool component_zero = ((i >> 1) & 1u) == 0; // qubit 2 of 4
            if (component_zero) CHECK(std::norm(state.amplitudes[i]) < 1e-20);
        }
    }

    SUBCASE("random pairs, n <= 3") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t dim = std::size_t{1} << (1 + trial % 3);
            const BoundedVector p = BoundedVector::of(oracle::random_bounded(rng, dim));
            const BoundedVector q = BoundedVector::of(oracle::random_bounded(rng, dim));
            const StateVector state = simulate(encode_pair(p, q));
            const std::vector<Complex> expected = reference_pair_state(p, q);
            for (std::size_t i = 0; i < expected.size(); ++i) {
                CHECK(std::abs(state.amplitudes[i] - expected[i]) < 1e-10);
            }
        }
    }

    CHECK_THROWS_AS(encode_pair(BoundedVector::of({1.0, 0.0}),
                                BoundedVector::of({1.0, 0.0, 0.0, 0.0})),
                    argument_error);
}

TEST_CASE("pairwise circuit size matches the layout budget") {
    for (std::size_t dim : {1u, 2u, 4u, 8u}) {
        std::vector<double> raw(dim, 0.5);
        const Circuit circuit = encode_pair(BoundedVector::of(raw), BoundedVector::of(raw));
        const int n = BoundedVector::of(raw).index_qubits();
        CHECK(circuit.num_qubits == n + 3);
        // one H layer (ancilla + index) plus one UCRY of 2^{n+2} gates
        CHECK(circuit.gates.size() == std::size_t(1 + n) + (std::size_t{1} << (n + 2)));
    }
}

TEST_CASE("both component-branch sign conventions give the same expectation") {
    // The minus-sign closed form differs only on the |1> branch of the
    // component qubit, which never interferes with the overlap readout.
    const BoundedVector p = BoundedVector::of({0.3, -0.8, 0.55, 0.2});
    const BoundedVector q = BoundedVector::of({0.9, 0.1, -0.4, -0.7});
    const int n = p.index_qubits();
    const QubitLayout layout = pair_layout(n);

    auto build = [&](double sign) {
        Circuit circuit;
        circuit.num_qubits = layout.total_qubits();
        circuit.append(Gate::h(layout.ancilla));
        for (int qb : layout.component_index) circuit.append(Gate::h(qb));
        std::vector<double> theta;
        for (double v : p.components) theta.push_back(sign * 2.0 * std::acos(v));
        for (double v : q.components) theta.push_back(sign * 2.0 * std::acos(v));
        std::vector<int> controls{layout.ancilla};
        controls.insert(controls.end(), layout.component_index.begin(),
                        layout.component_index.end());
        circuit.append(synthesize_ucry(controls, layout.component,
                                       angle_transform(AngleVector::of(theta))));
        circuit.append(Gate::cswap(layout.ancilla, layout.component, layout.utility));
        circuit.append(Gate::h(layout.ancilla));
        return circuit;
    };

    const double plus = ancilla_expectation(simulate(build(1.0)));
    const double minus = ancilla_expectation(simulate(build(-1.0)));
    CHECK(plus == doctest::Approx(minus).epsilon(1e-12));
}

TEST_CASE("batched encoding") {
    SUBCASE("single training vector equal to the test point") {
        const BoundedVector t = BoundedVector::of({1.0, 0.0, 0.0, 0.0});
        Circuit circuit = encode_batch({t}, t);
        CHECK(circuit.num_qubits == 0 + 2 + 3);
        circuit.append(Gate::cswap(0, 3, 4));
        circuit.append(Gate::h(0));
        CHECK(ancilla_expectation(simulate(circuit)) == doctest::Approx(0.25));
    }

    SUBCASE("appendix worked instance") {
        const std::vector<BoundedVector> training{
            BoundedVector::of({1.0, 0.25, -0.36, -0.98}),
            BoundedVector::of({-0.1, 0.37, 0.65, 0.45})};
        const BoundedVector test = BoundedVector::of({0.75, 0.1, 0.25, 0.25});
        Circuit circuit = encode_batch(training, test);
        CHECK(circuit.num_qubits == 1 + 2 + 3);
        circuit.append(Gate::cswap(0, 4, 5));
        circuit.append(Gate::h(0));
        // classical oracle: (0.44 + 0.237) / 2^{1+2}
        CHECK(ancilla_expectation(simulate(circuit)) ==
              doctest::Approx(0.084625).epsilon(1e-10));
    }

    SUBCASE("all-zero training vectors leave the test branch untouched") {
        const BoundedVector test = BoundedVector::of({0.4, -0.2});
        const BoundedVector zero = BoundedVector::of({0.0, 0.0});
        const BoundedVector other = BoundedVector::of({0.9, 0.3});
        const StateVector with_zeros = simulate(encode_batch({zero, zero}, test));
        const StateVector with_data = simulate(encode_batch({other, other}, test));
        // ancilla = 1 half of the amplitude array
        for (std::size_t i = with_zeros.dim() / 2; i < with_zeros.dim(); ++i) {
            CHECK(std::abs(with_zeros.amplitudes[i] - with_data.amplitudes[i]) < 1e-12);
        }
    }

    SUBCASE("non-power-of-two training counts are rejected") {
        const BoundedVector t = BoundedVector::of({0.5, 0.5});
        CHECK_THROWS_WITH_AS(encode_batch({t, t, t}, t), doctest::Contains("power of two"),
                             size_error);
    }
}

TEST_CASE("amplitude encoding") {
    SUBCASE("basis state") {
        const StateVector state = simulate(amplitude_encode(NormalizedVector::of({1.0, 0.0})));
        CHECK(state.amplitudes[0].real() == doctest::Approx(1.0));
        CHECK(std::norm(state.amplitudes[1]) < 1e-20);
    }

    SUBCASE("negative component carried by the rotation angle") {
        const double s = 1.0 / std::sqrt(2.0);
        const StateVector state = simulate(amplitude_encode(NormalizedVector::of({s, -s})));
        CHECK(state.amplitudes[0].real() == doctest::Approx(s));
        CHECK(state.amplitudes[1].real() == doctest::Approx(-s));
    }

    SUBCASE("random eight-component readback") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 50; ++trial) {
            const NormalizedVector x = NormalizedVector::of(oracle::random_unit(rng, 8));
            const StateVector state = simulate(amplitude_encode(x));
            for (std::size_t j = 0; j < 8; ++j) {
                CHECK(std::abs(state.amplitudes[j] - Complex{x.components[j], 0.0}) < 1e-10);
            }
        }
    }

    SUBCASE("born rule consistency") {
        std::mt19937_64 rng(18);
        const NormalizedVector x = NormalizedVector::of(oracle::random_unit(rng, 16));
        const StateVector state = simulate(amplitude_encode(x));
        for (std::size_t j = 0; j < 16; ++j) {
            CHECK(std::norm(state.amplitudes[j]) ==
                  doctest::Approx(x.components[j] * x.components[j]).epsilon(1e-12));
        }
    }

    SUBCASE("sparse vectors with zero-norm subtrees") {
        const StateVector state =
            simulate(amplitude_encode(NormalizedVector::of({0.0, 0.0, 0.0, -1.0})));
        CHECK(state.amplitudes[3].real() == doctest::Approx(-1.0));
    }

    CHECK_THROWS_AS(NormalizedVector::of({0.5, 0.5}), domain_error);
    CHECK_THROWS_AS(NormalizedVector::of({1.0, 0.0, 0.0}), size_error);
    CHECK_THROWS_AS(NormalizedVector::normalized({0.0, 0.0}), domain_error);
}

TEST_CASE("layouts expose the register roles") {
    const QubitLayout pair = pair_layout(2);
    CHECK(pair.ancilla == 0);
    CHECK(pair.component_index == std::vector<int>{1, 2});
    CHECK(pair.component == 3);
    CHECK(pair.utility == 4);
    CHECK(pair.total_qubits() == 5);

    const QubitLayout batch = batch_layout(1, 2);
    CHECK(batch.sample_index == std::vector<int>{1});
    CHECK(batch.component_index == std::vector<int>{2, 3});
    CHECK(batch.component == 4);
    CHECK(batch.utility == 5);
    CHECK(batch.total_qubits() == 6);
}
