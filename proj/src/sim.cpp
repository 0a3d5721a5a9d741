#include "qdo/sim.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "qdo/kernels.hpp"

namespace qdo {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::array<cplx, 4> gate_matrix(GateKind kind, double angle) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::Ry: {
            const double c = std::cos(angle / 2), s = std::sin(angle / 2);
            return {cplx{c, 0}, cplx{-s, 0}, cplx{s, 0}, cplx{c, 0}};
        }
        case GateKind::Rz: {
            return {std::polar(1.0, -angle / 2), cplx{0, 0}, cplx{0, 0},
                    std::polar(1.0, angle / 2)};
        }
        case GateKind::S:
            return gate_matrix(GateKind::Rz, kHalfPi);
        case GateKind::Sdg:
            return gate_matrix(GateKind::Rz, -kHalfPi);
        case GateKind::R:
            return gate_matrix(GateKind::Ry, kHalfPi);
        case GateKind::Rdg:
            return gate_matrix(GateKind::Ry, -kHalfPi);
        case GateKind::H:
            return {cplx{inv_sqrt2, 0}, cplx{inv_sqrt2, 0}, cplx{inv_sqrt2, 0},
                    cplx{-inv_sqrt2, 0}};
        case GateKind::Cnot:
            break;
    }
    throw std::logic_error("gate_matrix: not a single-qubit gate");
}

void apply_single(std::vector<cplx>& state, int target,
                  const std::array<cplx, 4>& u) {
    kernels::active().apply_gate1(state.data(), state.size(), target, u.data());
}

void apply_cnot(std::vector<cplx>& state, int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < state.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(state[i], state[i | tbit]);
}

}  // namespace

void so4_block(Circuit& circuit, int first, int second, int param_base) {
    auto fixed = [&](GateKind kind, int q) { circuit.gates.push_back({kind, q}); };
    auto param = [&](GateKind kind, int q, int slot) {
        circuit.gates.push_back({kind, q, -1, slot});
    };
    fixed(GateKind::S, first);
    fixed(GateKind::S, second);
    fixed(GateKind::R, second);
    circuit.gates.push_back({GateKind::Cnot, second, first});
    param(GateKind::Ry, first, param_base + 0);
    param(GateKind::Rz, first, param_base + 1);
    param(GateKind::Ry, second, param_base + 2);
    param(GateKind::Rz, second, param_base + 3);
    circuit.gates.push_back({GateKind::Cnot, second, first});
    fixed(GateKind::Rdg, second);
    fixed(GateKind::Sdg, first);
    fixed(GateKind::Sdg, second);
    circuit.num_params = std::max(circuit.num_params, param_base + 4);
    circuit.num_qubits = std::max({circuit.num_qubits, first + 1, second + 1});
}

Circuit ansatz_circuit() {
    Circuit c;
    c.num_qubits = 4;
    so4_block(c, 0, 1, 0);
    so4_block(c, 2, 3, 4);
    so4_block(c, 1, 2, 8);
    return c;
}

std::vector<cplx> run_circuit(const Circuit& circuit,
                              const std::vector<double>& params) {
    if (static_cast<int>(params.size()) != circuit.num_params)
        throw std::domain_error("run_circuit: wrong parameter count");
    std::vector<cplx> state(std::size_t{1} << circuit.num_qubits, cplx{0, 0});
    state[0] = cplx{1, 0};
    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::Cnot) {
            apply_cnot(state, g.q, g.q2);
            continue;
        }
        const double angle = g.param >= 0 ? params[g.param] : 0.0;
        apply_single(state, g.q, gate_matrix(g.kind, angle));
    }
    return state;
}

double expectation_exact(const std::vector<cplx>& state, const PauliSum& h) {
    if (state.size() != std::size_t{1} << h.num_qubits())
        throw std::domain_error("expectation_exact: dimension mismatch");
    if (!h.is_hermitian(1e-10))
        throw std::domain_error("expectation_exact: non-Hermitian sum");
    return pauli_expectation(h, state).real();
}

std::vector<double> basis_probabilities(const std::vector<cplx>& state,
                                        const std::string& basis,
                                        const NoiseModel& noise) {
    if (state.size() != std::size_t{1} << basis.size())
        throw std::domain_error("basis_probabilities: dimension mismatch");
    if (noise.lambda < 0 || noise.lambda > 1)
        throw std::domain_error("basis_probabilities: lambda out of [0,1]");
    std::vector<cplx> rotated = state;
    for (std::size_t q = 0; q < basis.size(); ++q) {
        const int qi = static_cast<int>(q);
        if (basis[q] == 'X') {
            apply_single(rotated, qi, gate_matrix(GateKind::H, 0));
        } else if (basis[q] == 'Y') {
            apply_single(rotated, qi, gate_matrix(GateKind::Sdg, 0));
            apply_single(rotated, qi, gate_matrix(GateKind::H, 0));
        }
    }
    std::vector<double> probs(state.size());
    kernels::active().abs_sq(rotated.data(), rotated.size(), probs.data());
    const double uniform = noise.lambda / double(state.size());
    for (double& p : probs) p = (1.0 - noise.lambda) * p + uniform;
    return probs;
}

std::vector<long long> sample_counts(const std::vector<double>& probs,
                                     long long shots, std::mt19937_64& rng) {
    if (shots < 1) throw std::domain_error("sample_counts: shots must be >= 1");
    std::vector<long long> counts(probs.size(), 0);
    long long remaining = shots;
    double mass_left = 1.0;
    for (std::size_t i = 0; i + 1 < probs.size() && remaining > 0; ++i) {
        const double p = mass_left > 0 ? std::clamp(probs[i] / mass_left, 0.0, 1.0) : 0.0;
        std::binomial_distribution<long long> binom(remaining, p);
        const long long c = binom(rng);
        counts[i] = c;
        remaining -= c;
        mass_left -= probs[i];
    }
    counts.back() += remaining;
    return counts;
}

std::vector<double> measure_group(const std::vector<cplx>& state,
                                  const MeasurementGroup& group,
                                  const std::vector<std::string>& terms,
                                  long long shots, const NoiseModel& noise,
                                  std::mt19937_64& rng) {
    const auto probs = basis_probabilities(state, group.basis, noise);
    const auto counts = sample_counts(probs, shots, rng);
    std::vector<double> estimates;
    estimates.reserve(group.members.size());
    for (int idx : group.members) {
        const std::string& letters = terms[idx];
        std::size_t mask = 0;
        for (std::size_t q = 0; q < letters.size(); ++q)
            if (letters[q] != 'I') mask |= std::size_t{1} << q;
        long long sum = 0;
        for (std::size_t outcome = 0; outcome < counts.size(); ++outcome) {
            const int parity = std::popcount(outcome & mask) & 1;
            sum += parity ? -counts[outcome] : counts[outcome];
        }
        estimates.push_back(double(sum) / double(shots));
    }
    return estimates;
}

double estimate_energy(const std::vector<cplx>& state, const PauliSum& h,
                       const std::vector<MeasurementGroup>& groups,
                       long long shots_per_circuit, const NoiseModel& noise,
                       std::mt19937_64& rng) {
    const auto terms = term_order(h);
    std::vector<double> coeff(terms.size());
    {
        std::size_t idx = 0;
        for (const auto& [letters, c] : h.terms()) coeff[idx++] = c.real();
    }
    double energy = 0.0;
    for (const auto& group : groups) {
        const auto estimates =
            measure_group(state, group, terms, shots_per_circuit, noise, rng);
        for (std::size_t i = 0; i < group.members.size(); ++i)
            energy += coeff[group.members[i]] * estimates[i];
    }
    return energy;
}

FidelityEstimate fidelity_from_counts(const std::vector<long long>& counts) {
    if (counts.empty()) throw std::domain_error("fidelity_from_counts: no counts");
    long long total = 0;
    for (long long c : counts) total += c;
    if (total <= 0) throw std::domain_error("fidelity_from_counts: empty counts");
    FidelityEstimate out;
    out.fidelity = double(counts[0]) / double(total);
    out.lambda = (1.0 - out.fidelity) / (1.0 - 1.0 / double(counts.size()));
    return out;
}

double dispersion_subtract(double e_r, double e_inf, double lambda) {
    if (lambda >= 1.0)
        throw std::domain_error("dispersion_subtract: lambda >= 1 is singular");
    return (e_r - e_inf) / (1.0 - lambda);
}

}  // namespace qdo
