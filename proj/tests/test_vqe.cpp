#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qdo/oracle.hpp"
#include "qdo/vqe.hpp"

using namespace qdo;

namespace {

HamiltonianSpec pair(double gamma) {
    HamiltonianSpec spec;
    spec.d = 4;
    spec.graph.num_oscillators = 2;
    spec.graph.edges = {{0, 1, gamma}};
    return spec;
}

}  // namespace

TEST_CASE("parameter-shift gradient matches finite differences") {
    const auto spec = pair(1.2);
    const PauliSum h = build_1d_hamiltonian(spec);
    const Circuit ansatz = ansatz_circuit();
    const EnergyFn energy = [&](const std::vector<double>& theta) {
        return expectation_exact(run_circuit(ansatz, theta), h);
    };
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> theta(12);
        for (auto& t : theta) t = u(rng);
        const auto grad = parameter_shift_gradient(theta, energy);
        REQUIRE(grad.size() == theta.size());
        const double h_step = 1e-5;
        for (std::size_t k = 0; k < theta.size(); ++k) {
            auto plus = theta, minus = theta;
            plus[k] += h_step;
            minus[k] -= h_step;
            const double fd = (energy(plus) - energy(minus)) / (2.0 * h_step);
            CHECK(std::abs(grad[k] - fd) < 1e-4);
        }
    }
}

TEST_CASE("same seed gives bit-identical runs") {
    const auto spec = pair(-1.55);
    const PauliSum h = build_1d_hamiltonian(spec);
    const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);
    VqeConfig config;
    config.steps = 10;
    config.shots_per_circuit = 512;
    config.seed = 5;
    const VqeRun a = run_vqe(h, grouping.groups, ansatz_circuit(), config);
    const VqeRun b = run_vqe(h, grouping.groups, ansatz_circuit(), config);
    CHECK(a.energy_trace == b.energy_trace);
    CHECK(a.params == b.params);
    CHECK(a.final_energy == b.final_energy);
}

TEST_CASE("warm start is honored") {
    const auto spec = pair(1.0);
    const PauliSum h = build_1d_hamiltonian(spec);
    VqeConfig config;
    config.steps = 0;
    config.init_params = std::vector<double>(12, 0.25);
    const VqeRun run = run_vqe(h, {}, ansatz_circuit(), config);
    CHECK(run.params == config.init_params);
    const double direct =
        expectation_exact(run_circuit(ansatz_circuit(), config.init_params), h);
    CHECK(run.final_energy == doctest::Approx(direct));

    config.init_params.pop_back();
    CHECK_THROWS_AS(run_vqe(h, {}, ansatz_circuit(), config), std::domain_error);
}

TEST_CASE("noiseless descent reaches the strong-coupling ground state") {
    const auto spec = pair(-1.55);
    const PauliSum h = build_1d_hamiltonian(spec);
    const double exact = exact_diag(spec).energy;
    VqeConfig config;
    config.seed = 3;
    const VqeRun run = run_vqe(h, {}, ansatz_circuit(), config);
    CHECK(run.final_energy >= exact - 1e-9);  // variational
    CHECK(std::abs(run.final_energy - exact) / std::abs(exact) < 0.01);
    CHECK(run.energy_trace.size() == std::size_t(config.steps));
    CHECK(run.energy_trace.front() > run.final_energy);
}
