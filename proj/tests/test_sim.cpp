#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qdo/model.hpp"
#include "qdo/sim.hpp"

using namespace qdo;

namespace {

std::vector<double> random_params(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<double> theta(n);
    for (auto& t : theta) t = u(rng);
    return theta;
}

// largest phase-aligned imaginary part: min over global phase of max |Im|
double imag_after_phase_fix(const std::vector<cplx>& psi) {
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < psi.size(); ++i)
        if (std::abs(psi[i]) > std::abs(psi[pivot])) pivot = i;
    const cplx phase = std::abs(psi[pivot]) > 0 ? psi[pivot] / std::abs(psi[pivot])
                                                : cplx{1, 0};
    double worst = 0.0;
    for (const auto& a : psi) worst = std::max(worst, std::abs(std::imag(a / phase)));
    return worst;
}

}  // namespace

TEST_CASE("ansatz states are normalized and real up to a global phase") {
    std::mt19937_64 rng(71);
    const Circuit ansatz = ansatz_circuit();
    CHECK(ansatz.num_qubits == 4);
    CHECK(ansatz.num_params == 12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = run_circuit(ansatz, random_params(12, rng));
        double norm = 0.0;
        for (const auto& a : psi) norm += std::norm(a);
        CHECK(std::abs(norm - 1.0) < 1e-10);
        CHECK(imag_after_phase_fix(psi) < 1e-10);
    }
}

TEST_CASE("two-qubit block acts as a real rotation on the subspace") {
    std::mt19937_64 rng(73);
    Circuit block;
    block.num_qubits = 2;
    block.num_params = 4;
    so4_block(block, 0, 1, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = run_circuit(block, random_params(4, rng));
        CHECK(imag_after_phase_fix(psi) < 1e-10);
    }
}

TEST_CASE("zero parameters leave the uncoupled ground state") {
    const Circuit ansatz = ansatz_circuit();
    const auto psi = run_circuit(ansatz, std::vector<double>(12, 0.0));
    CHECK(std::abs(std::abs(psi[0]) - 1.0) < 1e-10);

    HamiltonianSpec spec;
    spec.d = 4;
    spec.graph.num_oscillators = 2;
    spec.graph.edges = {{0, 1, 1.55}};
    const PauliSum h = build_1d_hamiltonian(spec);
    CHECK(expectation_exact(psi, h) == doctest::Approx(2.0));
}

TEST_CASE("basis probabilities mix with the depolarizing weight") {
    const Circuit ansatz = ansatz_circuit();
    std::mt19937_64 rng(79);
    const auto psi = run_circuit(ansatz, random_params(12, rng));
    const auto clean = basis_probabilities(psi, "ZZZZ", NoiseModel{0.0});
    const auto noisy = basis_probabilities(psi, "ZZZZ", NoiseModel{0.4});
    double sum = 0.0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        CHECK(noisy[i] == doctest::Approx(0.6 * clean[i] + 0.4 / 16.0));
        sum += noisy[i];
    }
    CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("sampled group estimates are unbiased") {
    HamiltonianSpec spec;
    spec.d = 4;
    spec.graph.num_oscillators = 2;
    spec.graph.edges = {{0, 1, 1.0}};
    const PauliSum h = build_1d_hamiltonian(spec);
    const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);
    const auto terms = term_order(h);

    std::mt19937_64 rng(83);
    const auto psi = run_circuit(ansatz_circuit(), random_params(12, rng));
    const NoiseModel clean;
    const long long shots = 100000;
    for (const auto& group : grouping.groups) {
        const auto est = measure_group(psi, group, terms, shots, clean, rng);
        for (std::size_t k = 0; k < est.size(); ++k) {
            PauliSum term(4);
            term.add_term(terms[group.members[k]], cplx{1, 0});
            const double exact = expectation_exact(psi, term);
            // Bernoulli spread: 5 sigma with sigma <= 1/sqrt(shots)
            CHECK(std::abs(est[k] - exact) < 5.0 / std::sqrt(double(shots)));
        }
    }
}

TEST_CASE("fully depolarized estimates vanish") {
    HamiltonianSpec spec;
    spec.d = 4;
    spec.graph.num_oscillators = 2;
    spec.graph.edges = {{0, 1, 1.0}};
    const PauliSum h = build_1d_hamiltonian(spec);
    const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);
    const auto terms = term_order(h);
    std::mt19937_64 rng(89);
    const auto psi = run_circuit(ansatz_circuit(), random_params(12, rng));
    const NoiseModel flat{1.0};
    for (const auto& group : grouping.groups) {
        const auto est = measure_group(psi, group, terms, 200000, flat, rng);
        for (std::size_t k = 0; k < est.size(); ++k) {
            if (terms[group.members[k]] == "IIII") continue;
            CHECK(std::abs(est[k]) < 0.02);
        }
    }
}

TEST_CASE("sample_counts is a deterministic multinomial") {
    const std::vector<double> probs = {0.5, 0.25, 0.125, 0.125};
    std::mt19937_64 a(7), b(7);
    const auto ca = sample_counts(probs, 10000, a);
    const auto cb = sample_counts(probs, 10000, b);
    CHECK(ca == cb);
    long long total = 0;
    for (long long c : ca) total += c;
    CHECK(total == 10000);
    CHECK(std::abs(ca[0] - 5000) < 5 * std::sqrt(10000.0 * 0.5 * 0.5));
}

TEST_CASE("fidelity recovery from all-Z counts") {
    {
        const std::vector<long long> counts = {900, 50, 25, 25};
        const auto est = fidelity_from_counts(counts);
        CHECK(est.fidelity == doctest::Approx(0.9));
        CHECK(est.lambda == doctest::Approx(0.1 / (1.0 - 0.25)));
    }
    // inject a known lambda and recover it
    const Circuit ansatz = ansatz_circuit();
    const auto psi = run_circuit(ansatz, std::vector<double>(12, 0.0));
    std::mt19937_64 rng(97);
    const auto probs = basis_probabilities(psi, "ZZZZ", NoiseModel{0.2});
    const auto counts = sample_counts(probs, 500000, rng);
    CHECK(fidelity_from_counts(counts).lambda == doctest::Approx(0.2).epsilon(0.02));
}

TEST_CASE("dispersion_subtract") {
    CHECK(dispersion_subtract(1.8, 2.0, 0.0) == doctest::Approx(-0.2));
    CHECK(dispersion_subtract(1.8, 2.0, 0.5) == doctest::Approx(-0.4));
    CHECK_THROWS_AS(dispersion_subtract(1.8, 2.0, 1.0), std::domain_error);
}

TEST_CASE("estimate_energy approaches the exact expectation") {
    HamiltonianSpec spec;
    spec.d = 4;
    spec.graph.num_oscillators = 2;
    spec.graph.edges = {{0, 1, 1.55}};
    const PauliSum h = build_1d_hamiltonian(spec);
    const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);
    std::mt19937_64 rng(101);
    const auto psi = run_circuit(ansatz_circuit(), random_params(12, rng));
    const double exact = expectation_exact(psi, h);
    double sum = 0.0;
    const int reps = 50;
    for (int rep = 0; rep < reps; ++rep)
        sum += estimate_energy(psi, h, grouping.groups, 4096, NoiseModel{}, rng);
    CHECK(sum / reps == doctest::Approx(exact).epsilon(0.02));
}
