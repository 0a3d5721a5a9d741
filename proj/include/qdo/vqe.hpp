#pragma once

#include <cstdint>
#include <functional>

#include "qdo/sim.hpp"

namespace qdo {

struct VqeConfig {
    int steps = 200;
    double learning_rate = 0.25;
    double beta1 = 0.9;
    double beta2 = 0.99;
    double adam_epsilon = 1e-8;
    /// 0 means exact expectations (no sampling).
    long long shots_per_circuit = 0;
    NoiseModel noise;
    std::uint64_t seed = 0;
    double init_scale = 0.1;
    /// Warm start; empty means random initialization from the seed.
    std::vector<double> init_params;
};

struct VqeRun {
    std::vector<double> params;
    std::vector<double> energy_trace;
    double final_energy = 0.0;
    std::uint64_t seed = 0;
};

using EnergyFn = std::function<double(const std::vector<double>&)>;

/// dE/dtheta_k = [E(theta_k + pi/2) - E(theta_k - pi/2)] / 2.
std::vector<double> parameter_shift_gradient(const std::vector<double>& theta,
                                             const EnergyFn& energy);

/// ADAM descent on the ansatz energy. Sampled evaluations when
/// shots_per_circuit > 0, exact expectations otherwise. Deterministic given
/// the seed; throws on a non-finite energy.
VqeRun run_vqe(const PauliSum& h, const std::vector<MeasurementGroup>& groups,
               const Circuit& ansatz, const VqeConfig& config);

}  // namespace qdo
