#pragma once

#include <random>

#include "qdo/grouping.hpp"

namespace qdo {

enum class GateKind { Ry, Rz, S, Sdg, R, Rdg, H, Cnot };

/// param >= 0 marks a slot into the parameter vector (Ry/Rz only); fixed
/// rotations use `angle`. Cnot: q = control, q2 = target.
struct Gate {
    GateKind kind;
    int q = 0;
    int q2 = -1;
    int param = -1;
};

struct Circuit {
    int num_qubits = 0;
    int num_params = 0;
    std::vector<Gate> gates;
};

/// Global depolarizing channel on the final state.
struct NoiseModel {
    double lambda = 0.0;
};

/// Append the real-valued two-qubit block: S x S; R on second;
/// CNOT(first->second); Ry(t0), Rz(t1) on first and Ry(t2), Rz(t3) on second;
/// CNOT; Rdg on second; Sdg x Sdg. Uses parameter slots param_base..+3.
void so4_block(Circuit& circuit, int first, int second, int param_base);

/// Four-qubit, twelve-parameter ansatz: blocks on (q0,q1) and (q2,q3), then
/// one block on (q1,q2).
Circuit ansatz_circuit();

/// Apply the circuit to |0...0> and return the state vector.
std::vector<cplx> run_circuit(const Circuit& circuit,
                              const std::vector<double>& params);

/// <psi| h |psi>; throws if h is not Hermitian within tolerance.
double expectation_exact(const std::vector<cplx>& state, const PauliSum& h);

/// Outcome distribution of measuring `state` in the group's basis under the
/// depolarizing mixture: p' = (1-lambda) p + lambda / 2^M.
std::vector<double> basis_probabilities(const std::vector<cplx>& state,
                                        const std::string& basis,
                                        const NoiseModel& noise);

/// Multinomial counts for `shots` draws from `probs` (binomial chain).
std::vector<long long> sample_counts(const std::vector<double>& probs,
                                     long long shots, std::mt19937_64& rng);

/// Shared-sample estimates of every member of the group, aligned with
/// group.members; each is the mean +/-1 parity over the member's support.
std::vector<double> measure_group(const std::vector<cplx>& state,
                                  const MeasurementGroup& group,
                                  const std::vector<std::string>& terms,
                                  long long shots, const NoiseModel& noise,
                                  std::mt19937_64& rng);

/// Sampled energy: sum over groups of coefficient-weighted member estimates.
double estimate_energy(const std::vector<cplx>& state, const PauliSum& h,
                       const std::vector<MeasurementGroup>& groups,
                       long long shots_per_circuit, const NoiseModel& noise,
                       std::mt19937_64& rng);

struct FidelityEstimate {
    double fidelity = 0.0;
    double lambda = 0.0;
};

/// F = frequency of the all-zeros outcome in all-Z counts;
/// lambda = (1 - F) / (1 - 2^{-M}).
FidelityEstimate fidelity_from_counts(const std::vector<long long>& counts);

/// (E_R - E_inf) / (1 - lambda); throws for lambda >= 1.
double dispersion_subtract(double e_r, double e_inf, double lambda);

}  // namespace qdo
