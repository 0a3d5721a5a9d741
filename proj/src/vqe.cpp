#include "qdo/vqe.hpp"

#include <cmath>
#include <numbers>

namespace qdo {

std::vector<double> parameter_shift_gradient(const std::vector<double>& theta,
                                             const EnergyFn& energy) {
    const double shift = std::numbers::pi / 2.0;
    std::vector<double> grad(theta.size());
    std::vector<double> probe = theta;
    for (std::size_t k = 0; k < theta.size(); ++k) {
        probe[k] = theta[k] + shift;
        const double plus = energy(probe);
        probe[k] = theta[k] - shift;
        const double minus = energy(probe);
        probe[k] = theta[k];
        grad[k] = (plus - minus) / 2.0;
    }
    return grad;
}

VqeRun run_vqe(const PauliSum& h, const std::vector<MeasurementGroup>& groups,
               const Circuit& ansatz, const VqeConfig& config) {
    std::mt19937_64 rng(config.seed);
    const bool sampled = config.shots_per_circuit > 0;
    if (sampled) validate_grouping(h, groups);

    EnergyFn energy = [&](const std::vector<double>& theta) {
        const auto state = run_circuit(ansatz, theta);
        if (!sampled) return expectation_exact(state, h);
        return estimate_energy(state, h, groups, config.shots_per_circuit,
                               config.noise, rng);
    };

    VqeRun run;
    run.seed = config.seed;
    if (config.init_params.empty()) {
        run.params.resize(ansatz.num_params);
        std::uniform_real_distribution<double> init(-config.init_scale,
                                                    config.init_scale);
        for (double& p : run.params) p = init(rng);
    } else {
        if (static_cast<int>(config.init_params.size()) != ansatz.num_params)
            throw std::domain_error("run_vqe: wrong init_params length");
        run.params = config.init_params;
    }

    std::vector<double> m(ansatz.num_params, 0.0), v(ansatz.num_params, 0.0);
    for (int step = 1; step <= config.steps; ++step) {
        const auto grad = parameter_shift_gradient(run.params, energy);
        for (int k = 0; k < ansatz.num_params; ++k) {
            m[k] = config.beta1 * m[k] + (1.0 - config.beta1) * grad[k];
            v[k] = config.beta2 * v[k] + (1.0 - config.beta2) * grad[k] * grad[k];
            const double m_hat = m[k] / (1.0 - std::pow(config.beta1, step));
            const double v_hat = v[k] / (1.0 - std::pow(config.beta2, step));
            run.params[k] -=
                config.learning_rate * m_hat / (std::sqrt(v_hat) + config.adam_epsilon);
        }
        const double e = energy(run.params);
        if (!std::isfinite(e))
            throw std::runtime_error("run_vqe: non-finite energy at step " +
                                     std::to_string(step));
        run.energy_trace.push_back(e);
    }
    run.final_energy = run.energy_trace.empty() ? energy(run.params)
                                                : run.energy_trace.back();
    return run;
}

}  // namespace qdo
