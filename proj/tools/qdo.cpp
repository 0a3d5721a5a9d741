#include <cstdlib>
#include <numeric>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdo/oracle.hpp"
#include "qdo/shots.hpp"
#include "qdo/vqe.hpp"

namespace {

using namespace qdo;

std::string format_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "inf")
            out.push_back(std::numeric_limits<double>::infinity());
        else
            out.push_back(std::stod(item));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

HamiltonianSpec pair_spec(int d, double gamma) {
    HamiltonianSpec spec;
    spec.d = d;
    spec.graph.num_oscillators = 2;
    if (gamma != 0.0) spec.graph.edges = {{0, 1, gamma}};
    return spec;
}

HamiltonianSpec dense_chain_spec(int n, int d, double gamma) {
    HamiltonianSpec spec;
    spec.d = d;
    spec.graph.num_oscillators = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (gamma != 0.0) spec.graph.edges.push_back({i, j, gamma});
    return spec;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QDO_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

struct SampledEnergy {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    double lambda_hat = 0.0;
};

// Repeated sampled measurements of <H> on `state`; lambda is re-estimated per
// repetition from the all-Z counts (all-zeros frequency).
SampledEnergy repeat_measure(const std::vector<cplx>& state, const PauliSum& h,
                             const std::vector<MeasurementGroup>& groups,
                             long long shots, const NoiseModel& noise, int reps,
                             std::mt19937_64& rng) {
    const auto terms = term_order(h);
    std::vector<double> energies(reps), lambdas(reps);
    const std::string all_z(h.num_qubits(), 'Z');
    for (int r = 0; r < reps; ++r) {
        energies[r] = estimate_energy(state, h, groups, shots, noise, rng);
        const auto probs = basis_probabilities(state, all_z, noise);
        const auto counts = sample_counts(probs, shots, rng);
        lambdas[r] = fidelity_from_counts(counts).lambda;
    }
    SampledEnergy out;
    for (int r = 0; r < reps; ++r) {
        out.mean += energies[r];
        out.lambda_hat += lambdas[r];
    }
    out.mean /= reps;
    out.lambda_hat /= reps;
    double var = 0.0;
    for (int r = 0; r < reps; ++r)
        var += (energies[r] - out.mean) * (energies[r] - out.mean);
    if (reps > 1) out.stderr_of_mean = std::sqrt(var / (reps - 1) / reps);
    return out;
}

int cmd_decompose(const std::string& spec_path, int d, int n, double gamma,
                  const std::string& out_path) {
    HamiltonianSpec spec;
    if (!spec_path.empty())
        spec = HamiltonianSpec::from_json(read_file(spec_path));
    else
        spec = dense_chain_spec(n, d, gamma);
    const PauliSum h = build_1d_hamiltonian(spec);
    write_file(out_path, h.to_json());
    std::cout << "terms=" << h.size() << " qubits=" << h.num_qubits() << "\n";
    return 0;
}

int cmd_group(const std::vector<int>& ns, const std::vector<int>& ds,
              double gamma, const std::string& out_path) {
    std::string csv = "N,d,exact,greedy,fell_back\n";
    for (int n : ns) {
        for (int d : ds) {
            const HamiltonianSpec spec = dense_chain_spec(n, d, gamma);
            const PauliSum h = build_1d_hamiltonian(spec);
            const auto exact = exact_grouping(h, layout_for(spec), spec.graph);
            const auto greedy = greedy_grouping(h);
            csv += std::to_string(n) + "," + std::to_string(d) + "," +
                   std::to_string(exact.groups.size()) + "," +
                   std::to_string(greedy.size()) + "," +
                   (exact.fell_back_to_greedy ? "1" : "0") + "\n";
        }
    }
    write_file(out_path, csv);
    return 0;
}

int cmd_shots(const std::vector<int>& ns, const std::vector<int>& ds,
              double gamma, double epsilon, const std::string& out_path) {
    std::string csv = "N,d,model,grouped,S,bound\n";
    for (int n : ns) {
        for (int d : ds) {
            const HamiltonianSpec spec = dense_chain_spec(n, d, gamma);
            const PauliSum h = build_1d_hamiltonian(spec);
            const auto layout = layout_for(spec);
            const auto exact = exact_grouping(h, layout, spec.graph);
            std::vector<MeasurementGroup> ungrouped;
            {
                const auto terms = term_order(h);
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    std::string basis = terms[i];
                    std::replace(basis.begin(), basis.end(), 'I', 'Z');
                    ungrouped.push_back({basis, {static_cast<int>(i)}});
                }
            }
            struct Row {
                const char* model;
                bool grouped;
                double s;
                double bound;
            };
            const Row rows[] = {
                {"spherical", true,
                 estimate_shots(h, exact.groups, StateModel::spherical(), epsilon).total,
                 bound_grouped_spherical(n, d, spec.graph, epsilon)},
                {"spherical", false,
                 estimate_shots(h, ungrouped, StateModel::spherical(), epsilon).total,
                 bound_ungrouped_spherical(n, d, spec.graph, epsilon)},
                {"uncoupled", true,
                 estimate_shots(h, exact.groups, StateModel::uncoupled(), epsilon).total,
                 bound_uncoupled(n, d, spec.graph, epsilon, true)},
                {"uncoupled", false,
                 estimate_shots(h, ungrouped, StateModel::uncoupled(), epsilon).total,
                 bound_uncoupled(n, d, spec.graph, epsilon, false)},
            };
            for (const Row& row : rows)
                csv += std::to_string(n) + "," + std::to_string(d) + "," +
                       row.model + "," + (row.grouped ? "1" : "0") + "," +
                       format_num(row.s) + "," + format_num(row.bound) + "\n";
        }
    }
    write_file(out_path, csv);
    return 0;
}

int cmd_vqe(int d, double gamma, bool extended, int steps, long long shots,
            double lambda, std::uint64_t seed, const std::string& out_json,
            const std::string& out_csv) {
    const HamiltonianSpec spec =
        extended ? example_extended_hamiltonian(gamma, d) : pair_spec(d, gamma);
    const PauliSum h = build_1d_hamiltonian(spec);
    const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);

    VqeConfig config;
    config.steps = steps;
    config.shots_per_circuit = shots;
    config.noise.lambda = lambda;
    config.seed = seed;
    const Circuit ansatz = ansatz_circuit();
    const VqeRun run = run_vqe(h, grouping.groups, ansatz, config);

    const double exact = exact_diag(spec).energy;
    const double noiseless_final =
        expectation_exact(run_circuit(ansatz, run.params), h);

    std::string json = "{\n  \"final_energy\": " + format_num(run.final_energy) +
                       ",\n  \"noiseless_final_energy\": " + format_num(noiseless_final) +
                       ",\n  \"exact_ground_energy\": " + format_num(exact) +
                       ",\n  \"seed\": " + std::to_string(seed) +
                       ",\n  \"params\": [";
    for (std::size_t i = 0; i < run.params.size(); ++i)
        json += (i ? ", " : "") + format_num(run.params[i]);
    json += "]\n}\n";
    write_file(out_json, json);

    std::string csv = "step,energy\n";
    for (std::size_t i = 0; i < run.energy_trace.size(); ++i)
        csv += std::to_string(i + 1) + "," + format_num(run.energy_trace[i]) + "\n";
    if (!out_csv.empty()) write_file(out_csv, csv);
    std::cout << "final=" << format_num(run.final_energy)
              << " exact=" << format_num(exact) << "\n";
    return 0;
}

// Standard optimization followed by warm-started passes at decaying learning
// rates; the tiny dispersion signal at weak coupling needs the refinement.
// A non-empty warm start skips the exploratory full-rate pass.
std::vector<double> optimize_polished(const PauliSum& h, const Circuit& ansatz,
                                      int steps, std::uint64_t seed,
                                      const std::vector<double>& warm = {}) {
    VqeConfig config;
    config.steps = steps;
    config.seed = seed;
    if (!warm.empty()) {
        config.init_params = warm;
        config.learning_rate = 0.05;
    }
    VqeRun run = run_vqe(h, {}, ansatz, config);
    config.steps = 300;
    for (double lr : {0.02, 0.005, 0.001, 0.0002}) {
        config.learning_rate = lr;
        config.init_params = run.params;
        run = run_vqe(h, {}, ansatz, config);
    }
    return run.params;
}

int cmd_dispersion(double alpha, double hbar_omega, const std::vector<double>& r_grid,
                   int d, int steps, long long shots, double lambda, int reps,
                   std::uint64_t seed, const std::string& out_path) {
    const Circuit ansatz = ansatz_circuit();

    // theta_inf: optimize the uncoupled pair once.
    const HamiltonianSpec spec_inf = pair_spec(d, 0.0);
    const PauliSum h_inf = build_1d_hamiltonian(spec_inf);
    const auto grouping_inf = exact_grouping(h_inf, layout_for(spec_inf), spec_inf.graph);
    const auto params_inf = optimize_polished(h_inf, ansatz, steps, seed);
    const auto state_inf = run_circuit(ansatz, params_inf);

    NoiseModel noise{lambda};
    std::mt19937_64 rng(seed + 1);

    // Continuation: optimize strongest coupling first, warm-start the rest.
    std::vector<std::size_t> order(r_grid.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto gamma_of = [&](double r) {
        return std::isinf(r) ? 0.0 : coupling_parallel(alpha, r);
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(gamma_of(r_grid[a])) > std::abs(gamma_of(r_grid[b]));
    });
    std::vector<std::vector<double>> params_at(r_grid.size());
    std::vector<double> warm;
    for (std::size_t idx : order) {
        const PauliSum h = build_1d_hamiltonian(pair_spec(d, gamma_of(r_grid[idx])));
        params_at[idx] = optimize_polished(h, ansatz, steps, seed, warm);
        warm = params_at[idx];
    }

    std::string csv = "R,gamma,dE,stderr,dE_noiseless,dE_london\n";
    for (std::size_t idx = 0; idx < r_grid.size(); ++idx) {
        const double r = r_grid[idx];
        const bool decoupled = std::isinf(r);
        const double gamma = gamma_of(r);
        const HamiltonianSpec spec = pair_spec(d, gamma);
        const PauliSum h = build_1d_hamiltonian(spec);
        const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);
        const auto state = run_circuit(ansatz, params_at[idx]);

        const double e_r = expectation_exact(state, h);
        const double e_inf = expectation_exact(state_inf, h_inf);
        const double de_noiseless = (e_r - e_inf) * hbar_omega / 2.0;

        double de = de_noiseless, se = 0.0;
        if (shots > 0 && reps > 0) {
            const auto meas_r = repeat_measure(state, h, grouping.groups, shots,
                                               noise, reps, rng);
            const auto meas_inf = repeat_measure(state_inf, h_inf, grouping_inf.groups,
                                                 shots, noise, reps, rng);
            const double lam = (meas_r.lambda_hat + meas_inf.lambda_hat) / 2.0;
            de = dispersion_subtract(meas_r.mean, meas_inf.mean, lam) * hbar_omega / 2.0;
            se = std::sqrt(meas_r.stderr_of_mean * meas_r.stderr_of_mean +
                           meas_inf.stderr_of_mean * meas_inf.stderr_of_mean) /
                 (1.0 - lam) * hbar_omega / 2.0;
        }
        const double london = decoupled ? 0.0 : london_1d(alpha, hbar_omega, r);
        csv += (decoupled ? std::string("inf") : format_num(r)) + "," +
               format_num(gamma) + "," + format_num(de) + "," + format_num(se) +
               "," + format_num(de_noiseless) + "," + format_num(london) + "\n";
    }
    write_file(out_path, csv);
    return 0;
}

int cmd_truncation(const std::vector<double>& gammas, const std::vector<int>& dims,
                   const std::string& out_path) {
    const auto rows = truncation_study(gammas, dims);
    std::string csv = "gamma,d,E_d,E_analytic,error\n";
    for (const auto& row : rows)
        csv += format_num(row.gamma) + "," + std::to_string(row.d) + "," +
               format_num(row.energy_d) + "," + format_num(row.energy_analytic) +
               "," + format_num(row.error) + "\n";
    write_file(out_path, csv);
    return 0;
}

int cmd_oracle(double alpha, double hbar_omega, const std::vector<double>& r_grid,
               int d, const std::string& out_path) {
    std::string csv = "R,gamma,E_analytic,E_d,dE_london\n";
    for (double r : r_grid) {
        const bool decoupled = std::isinf(r);
        const double gamma = decoupled ? 0.0 : coupling_parallel(alpha, r);
        const double e_analytic = analytic_pair_energy(gamma);
        const double e_d = exact_diag(pair_spec(d, gamma)).energy;
        const double london = decoupled ? 0.0 : london_1d(alpha, hbar_omega, r);
        csv += (decoupled ? std::string("inf") : format_num(r)) + "," +
               format_num(gamma) + "," + format_num(e_analytic) + "," +
               format_num(e_d) + "," + format_num(london) + "\n";
    }
    write_file(out_path, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Drude oscillator VQE toolkit"};
    app.require_subcommand(1);

    // Shared option storage.
    std::string spec_path, out_path = "-", out_json = "-", out_csv;
    std::string n_list = "2", d_list = "4", r_list = "4", gamma_list = "0,0.5,1,1.55";
    int d = 4, n = 2, steps = 200, reps = 0;
    double gamma = 0.0, epsilon = 0.01, alpha = 14.5, hbar_omega = 9.61, lambda = 0.0;
    long long shots = 0;
    std::uint64_t seed = default_seed();
    bool extended = false;

    auto* decompose = app.add_subcommand("decompose", "Pauli-decompose a Hamiltonian");
    decompose->add_option("--spec", spec_path, "HamiltonianSpec JSON file");
    decompose->add_option("--d", d);
    decompose->add_option("--N", n);
    decompose->add_option("--gamma", gamma);
    decompose->add_option("--out", out_path);

    auto* group = app.add_subcommand("group", "Measurement grouping counts");
    group->add_option("--N-list", n_list);
    group->add_option("--d-list", d_list);
    group->add_option("--gamma", gamma)->default_val(1.0);
    group->add_option("--out", out_path);

    auto* shots_cmd = app.add_subcommand("shots", "Shot-budget estimates and bounds");
    shots_cmd->add_option("--N-list", n_list);
    shots_cmd->add_option("--d-list", d_list);
    shots_cmd->add_option("--gamma", gamma)->default_val(1.0);
    shots_cmd->add_option("--epsilon", epsilon);
    shots_cmd->add_option("--out", out_path);

    auto* vqe = app.add_subcommand("vqe", "Run a variational ground-state search");
    vqe->add_option("--d", d);
    vqe->add_option("--gamma", gamma);
    vqe->add_flag("--extended", extended, "use the anharmonic demo Hamiltonian");
    vqe->add_option("--steps", steps);
    vqe->add_option("--shots", shots);
    vqe->add_option("--lambda", lambda);
    vqe->add_option("--seed", seed);
    vqe->add_option("--out", out_json);
    vqe->add_option("--trace", out_csv);

    auto* dispersion = app.add_subcommand("dispersion", "Dispersion curve over an R grid");
    dispersion->add_option("--alpha", alpha);
    dispersion->add_option("--hbar-omega", hbar_omega);
    dispersion->add_option("--R-list", r_list, "comma list, 'inf' allowed");
    dispersion->add_option("--d", d);
    dispersion->add_option("--steps", steps);
    dispersion->add_option("--shots", shots);
    dispersion->add_option("--lambda", lambda);
    dispersion->add_option("--reps", reps);
    dispersion->add_option("--seed", seed);
    dispersion->add_option("--out", out_path);

    auto* truncation = app.add_subcommand("truncation", "Truncation-convergence table");
    truncation->add_option("--gamma-list", gamma_list);
    truncation->add_option("--d-list", d_list)->default_val("2,4,8,16,32");
    truncation->add_option("--out", out_path);

    auto* oracle = app.add_subcommand("oracle", "Reference energies over an R grid");
    oracle->add_option("--alpha", alpha);
    oracle->add_option("--hbar-omega", hbar_omega);
    oracle->add_option("--R-list", r_list);
    oracle->add_option("--d", d);
    oracle->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (decompose->parsed())
            return cmd_decompose(spec_path, d, n, gamma, out_path);
        if (group->parsed())
            return cmd_group(parse_int_list(n_list), parse_int_list(d_list), gamma,
                             out_path);
        if (shots_cmd->parsed())
            return cmd_shots(parse_int_list(n_list), parse_int_list(d_list), gamma,
                             epsilon, out_path);
        if (vqe->parsed())
            return cmd_vqe(d, gamma, extended, steps, shots, lambda, seed, out_json,
                           out_csv);
        if (dispersion->parsed())
            return cmd_dispersion(alpha, hbar_omega, parse_grid(r_list), d, steps,
                                  shots, lambda, reps, seed, out_path);
        if (truncation->parsed())
            return cmd_truncation(parse_grid(gamma_list), parse_int_list(d_list),
                                  out_path);
        if (oracle->parsed())
            return cmd_oracle(alpha, hbar_omega, parse_grid(r_list), d, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
