#include "qdo/model.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

namespace qdo {

void CouplingGraph::validate() const {
    if (num_oscillators < 1)
        throw std::domain_error("CouplingGraph: need at least one oscillator");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.i < 0 || e.j < 0 || e.i >= num_oscillators || e.j >= num_oscillators)
            throw std::domain_error("CouplingGraph: edge index out of range");
        if (e.i == e.j) throw std::domain_error("CouplingGraph: self-loop");
        if (e.i >= e.j) throw std::domain_error("CouplingGraph: edges need i < j");
        if (!seen.insert({e.i, e.j}).second)
            throw std::domain_error("CouplingGraph: duplicate edge");
    }
}

bool CouplingGraph::has_dissociative_edge() const {
    for (const auto& e : edges)
        if (std::abs(e.gamma) >= 2.0) return true;
    return false;
}

void HamiltonianSpec::validate() const {
    qubits_for_dimension(d);
    graph.validate();
    for (const auto& mono : extra_terms) {
        for (const auto& [osc, power] : mono.factors) {
            if (osc < 0 || osc >= graph.num_oscillators)
                throw std::domain_error("HamiltonianSpec: monomial oscillator out of range");
            if (power < 1) throw std::domain_error("HamiltonianSpec: powers must be >= 1");
        }
    }
}

std::string HamiltonianSpec::to_json() const {
    nlohmann::json j;
    j["d"] = d;
    j["N"] = graph.num_oscillators;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : graph.edges) j["edges"].push_back({e.i, e.j, e.gamma});
    j["extra"] = nlohmann::json::array();
    for (const auto& mono : extra_terms) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [osc, power] : mono.factors) factors.push_back({osc, power});
        j["extra"].push_back({{"factors", factors}, {"coeff", mono.coefficient}});
    }
    return j.dump(2);
}

HamiltonianSpec HamiltonianSpec::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    HamiltonianSpec spec;
    spec.d = j.at("d").get<int>();
    spec.graph.num_oscillators = j.at("N").get<int>();
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        spec.graph.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                                    e.at(2).get<double>()});
    }
    for (const auto& mono : j.value("extra", nlohmann::json::array())) {
        Monomial out;
        out.coefficient = mono.at("coeff").get<double>();
        for (const auto& f : mono.at("factors"))
            out.factors.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
        spec.extra_terms.push_back(std::move(out));
    }
    spec.validate();
    return spec;
}

double coupling_parallel(double alpha, double R) {
    if (R <= 0) throw std::domain_error("coupling_parallel: R must be positive");
    return -4.0 * alpha / (R * R * R);
}

double coupling_perpendicular(double alpha, double R) {
    if (R <= 0) throw std::domain_error("coupling_perpendicular: R must be positive");
    return 2.0 * alpha / (R * R * R);
}

RegisterMap layout_for(const HamiltonianSpec& spec) {
    return RegisterMap{spec.graph.num_oscillators, qubits_for_dimension(spec.d), 1};
}

namespace {

Matrix matrix_power(const Matrix& base, int power) {
    Matrix out = Matrix::Identity(base.rows(), base.cols());
    for (int i = 0; i < power; ++i) out = out * base;
    return out;
}

}  // namespace

PauliSum build_1d_hamiltonian(const HamiltonianSpec& spec) {
    spec.validate();
    const RegisterMap layout = layout_for(spec);
    const int m = layout.qubits_per_oscillator;

    PauliSum h(layout.total_qubits());
    const PauliSum diag = number_diag_pauli(m);
    for (int osc = 0; osc < spec.graph.num_oscillators; ++osc)
        h.add(embed(diag, layout, osc));

    const PauliSum x = decompose_position(spec.d);
    for (const auto& e : spec.graph.edges) {
        PauliSum coupling = embed(x, layout, e.i).multiply(embed(x, layout, e.j));
        coupling.scale(cplx(e.gamma, 0));
        h.add(coupling);
    }

    const Matrix xmat = position_op(spec.d);
    for (const auto& mono : spec.extra_terms) {
        PauliSum term(layout.total_qubits());
        term.add_term(std::string(layout.total_qubits(), 'I'), cplx(1, 0));
        for (const auto& [osc, power] : mono.factors) {
            // Power after truncation: the d-level register never sees states
            // outside the truncated space.
            const PauliSum factor = matrix_to_pauli(matrix_power(xmat, power));
            term = term.multiply(embed(factor, layout, osc));
        }
        term.scale(cplx(mono.coefficient, 0));
        h.add(term);
    }
    h.simplify();
    return h;
}

Matrix dense_hamiltonian(const HamiltonianSpec& spec) {
    spec.validate();
    const int N = spec.graph.num_oscillators;
    const int d = spec.d;
    Eigen::Index dim = 1;
    for (int i = 0; i < N; ++i) dim *= d;

    // Oscillator 0 is the fastest-varying index, matching the qubit layout.
    auto kron_single = [&](const std::vector<const Matrix*>& ops) {
        Matrix out = Matrix::Ones(1, 1);
        for (int osc = N - 1; osc >= 0; --osc) {
            const Matrix& op = *ops[osc];
            Matrix next = Matrix::Zero(out.rows() * d, out.cols() * d);
            for (Eigen::Index r = 0; r < out.rows(); ++r)
                for (Eigen::Index c = 0; c < out.cols(); ++c)
                    next.block(r * d, c * d, d, d) = out(r, c) * op;
            out = std::move(next);
        }
        return out;
    };

    Matrix ident = Matrix::Identity(d, d);
    Matrix number = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) number(n, n) = 2.0 * n + 1.0;
    const Matrix x = position_op(d);

    Matrix h = Matrix::Zero(dim, dim);
    std::vector<const Matrix*> ops(N, &ident);
    for (int osc = 0; osc < N; ++osc) {
        ops.assign(N, &ident);
        ops[osc] = &number;
        h += kron_single(ops);
    }
    for (const auto& e : spec.graph.edges) {
        ops.assign(N, &ident);
        ops[e.i] = &x;
        ops[e.j] = &x;
        h += e.gamma * kron_single(ops);
    }
    for (const auto& mono : spec.extra_terms) {
        std::vector<Matrix> powers;
        ops.assign(N, &ident);
        powers.reserve(mono.factors.size());
        for (const auto& [osc, power] : mono.factors) {
            powers.push_back(matrix_power(x, power));
            ops[osc] = &powers.back();
        }
        h += mono.coefficient * kron_single(ops);
    }
    return h;
}

std::array<HamiltonianSpec, 3> build_3d_pair(const OscillatorParams& params,
                                             double R, int d) {
    if (R <= 0) throw std::domain_error("build_3d_pair: R must be positive");
    std::array<HamiltonianSpec, 3> out;
    const std::array<double, 3> gammas = {
        coupling_perpendicular(params.alpha_axes[0], R),
        coupling_perpendicular(params.alpha_axes[1], R),
        coupling_parallel(params.alpha_axes[2], R)};
    for (int axis = 0; axis < 3; ++axis) {
        out[axis].d = d;
        out[axis].graph.num_oscillators = 2;
        out[axis].graph.edges = {{0, 1, gammas[axis]}};
    }
    return out;
}

std::vector<double> coulomb_taylor(double r, int w) {
    if (r <= 0) throw std::domain_error("coulomb_taylor: r must be positive");
    if (w < 1) throw std::domain_error("coulomb_taylor: order must be >= 1");
    std::vector<double> coeffs(w);
    double c = 1.0 / r;
    for (int i = 0; i < w; ++i) {
        coeffs[i] = c;
        c /= r;
    }
    return coeffs;
}

HamiltonianSpec example_extended_hamiltonian(double gamma, int d) {
    HamiltonianSpec spec;
    spec.d = d;
    spec.graph.num_oscillators = 2;
    spec.graph.edges = {{0, 1, gamma}};
    spec.extra_terms = {
        {{{0, 3}}, gamma / 2.0},          {{{1, 3}}, gamma / 2.0},
        {{{0, 2}, {1, 1}}, gamma / 4.0},  {{{0, 1}, {1, 2}}, gamma / 4.0},
        {{{0, 4}}, 0.1},                  {{{1, 4}}, 0.1},
    };
    return spec;
}

}  // namespace qdo
