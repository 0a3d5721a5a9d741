#include "qdo/shots.hpp"

#include <cmath>
#include <iostream>
#include <map>

namespace qdo {

namespace {

bool iz_only(const std::string& letters) {
    for (char c : letters)
        if (c == 'X' || c == 'Y') return false;
    return true;
}

// Letter-wise product of two qubit-wise-commuting strings (no phase arises:
// at every position the letters are equal or one is I).
std::string qwc_product(const std::string& a, const std::string& b) {
    std::string out(a.size(), 'I');
    for (std::size_t q = 0; q < a.size(); ++q) {
        if (a[q] == b[q])
            out[q] = 'I';
        else
            out[q] = (a[q] == 'I') ? b[q] : a[q];
    }
    return out;
}

int weight_of(const std::string& letters) {
    int w = 0;
    for (char c : letters)
        if (c != 'I') ++w;
    return w;
}

}  // namespace

StateModel StateModel::explicit_vector(std::vector<cplx> psi) {
    double norm = 0.0;
    for (const cplx& a : psi) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-10)
        throw std::domain_error("StateModel: vector is not normalized");
    return {StateModelKind::ExplicitVector, std::move(psi)};
}

double spherical_variance(int weight) {
    if (weight < 0) throw std::domain_error("spherical_variance: negative weight");
    if (weight == 0) return 0.0;
    return 1.0 - 1.0 / (std::pow(2.0, weight) + 1.0);
}

ShotEstimate estimate_shots(const PauliSum& h,
                            const std::vector<MeasurementGroup>& groups,
                            const StateModel& model, double epsilon) {
    if (epsilon <= 0) throw std::domain_error("estimate_shots: epsilon must be positive");
    validate_grouping(h, groups);

    const auto terms = term_order(h);
    std::vector<double> coeff(terms.size());
    {
        std::size_t idx = 0;
        for (const auto& [letters, c] : h.terms()) coeff[idx++] = c.real();
    }

    // <P> on the model state; only used by the state-vector models.
    auto expect = [&](const std::string& letters) -> double {
        if (model.kind == StateModelKind::UncoupledPure)
            return iz_only(letters) ? 1.0 : 0.0;
        return pauli_term_expectation(letters, model.state).real();
    };

    ShotEstimate out;
    out.epsilon = epsilon;
    out.model = model.kind;

    double sqrt_sum = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& members = groups[g].members;
        double v = 0.0;
        if (model.kind == StateModelKind::SphericalMeasure) {
            // Zero cross-covariances under the spherical measure.
            for (int idx : members)
                v += coeff[idx] * coeff[idx] * spherical_variance(weight_of(terms[idx]));
        } else {
            std::vector<double> means(members.size());
            for (std::size_t i = 0; i < members.size(); ++i)
                means[i] = expect(terms[members[i]]);
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = 0; j < members.size(); ++j) {
                    const double corr =
                        (i == j) ? 1.0
                                 : expect(qwc_product(terms[members[i]],
                                                      terms[members[j]]));
                    v += coeff[members[i]] * coeff[members[j]] *
                         (corr - means[i] * means[j]);
                }
            }
        }
        if (v < 0) {
            if (v < -1e-9)
                std::cerr << "estimate_shots: clamping negative group variance "
                          << v << "\n";
            v = 0.0;
        }
        out.per_group.push_back({static_cast<int>(g), v, 0.0});
        sqrt_sum += std::sqrt(v);
    }

    out.total = sqrt_sum * sqrt_sum / (epsilon * epsilon);
    for (auto& share : out.per_group) {
        share.fraction = sqrt_sum > 0 ? std::sqrt(share.variance) / sqrt_sum
                                      : 1.0 / out.per_group.size();
    }
    return out;
}

double round_gamma_quadrature(const CouplingGraph& graph) {
    graph.validate();
    if (graph.num_oscillators < 2 || graph.edges.empty()) return 0.0;
    std::map<std::pair<int, int>, double> gamma;
    for (const auto& e : graph.edges) gamma[{e.i, e.j}] = e.gamma;
    const Factorization fact = round_robin_factorization(graph.num_oscillators);
    double total = 0.0;
    for (const auto& round : fact.rounds) {
        double sq = 0.0;
        for (const auto& e : round) {
            auto it = gamma.find(e);
            if (it != gamma.end()) sq += it->second * it->second;
        }
        total += std::sqrt(sq);
    }
    return total;
}

double bound_grouped_spherical(int N, int d, const CouplingGraph& graph,
                               double epsilon) {
    if (epsilon <= 0) throw std::domain_error("bound_grouped_spherical: epsilon <= 0");
    if (N < 2) throw std::domain_error("bound_grouped_spherical: N must be >= 2");
    const double m = qubits_for_dimension(d);
    const double dd = d;
    const double nonint = std::sqrt(2.0) / 3.0 * std::sqrt(double(N)) *
                          std::sqrt(dd * dd - 1.0);
    const double poly = 2.0 * dd - (4.0 + 2.0 * m) * dd * dd +
                        (2.0 + 2.0 * m + 0.5 * m * m) * dd * dd * dd;
    const double root = nonint + round_gamma_quadrature(graph) * poly;
    return root * root / (epsilon * epsilon);
}

double bound_ungrouped_spherical(int N, int d, const CouplingGraph& graph,
                                 double epsilon) {
    if (epsilon <= 0) throw std::domain_error("bound_ungrouped_spherical: epsilon <= 0");
    if (N < 2) throw std::domain_error("bound_ungrouped_spherical: N must be >= 2");
    qubits_for_dimension(d);
    const double r2 = std::sqrt(2.0);
    const double dd = d;
    double gamma_abs = 0.0;
    for (const auto& e : graph.edges) gamma_abs += std::abs(e.gamma);
    const double nonint = N * std::sqrt(6.0) / 3.0 * (dd - 1.0);
    const double poly = (3.0 + 2.0 * r2) * std::pow(dd, 2.0) -
                        (2.0 + r2) * std::pow(dd, 2.5) -
                        (3.5 + 3.0 * r2) * std::pow(dd, 3.0) +
                        (1.0 + r2) * std::pow(dd, 3.5) +
                        (1.5 + r2) * std::pow(dd, 4.0);
    const double root = nonint + gamma_abs * poly;
    return root * root / (epsilon * epsilon);
}

double bound_uncoupled(int N, int d, const CouplingGraph& graph, double epsilon,
                       bool grouped) {
    if (epsilon <= 0) throw std::domain_error("bound_uncoupled: epsilon <= 0");
    if (N < 2) throw std::domain_error("bound_uncoupled: N must be >= 2");
    qubits_for_dimension(d);
    double factor;
    if (grouped) {
        factor = round_gamma_quadrature(graph);
    } else {
        factor = 0.0;
        for (const auto& e : graph.edges) factor += std::abs(e.gamma);
    }
    const double d4 = std::pow(double(d), 4.0);
    return factor * factor * d4 / (16.0 * epsilon * epsilon);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::domain_error("loglog_slope: need >= 2 matching points");
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] <= 0 || y[i] <= 0)
            throw std::domain_error("loglog_slope: values must be positive");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qdo
