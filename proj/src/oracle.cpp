#include "qdo/oracle.hpp"

#include <cmath>

namespace qdo {

GroundState exact_diag(const HamiltonianSpec& spec) {
    const Matrix h = dense_hamiltonian(spec);
    if (h.rows() > (1 << 14))
        throw std::domain_error("exact_diag: dimension exceeds 2^14");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("exact_diag: eigensolver failed");
    GroundState out;
    out.energy = solver.eigenvalues()(0);
    out.vector = solver.eigenvectors().col(0);
    const double residual = (h * out.vector - out.energy * out.vector).norm();
    if (residual >= 1e-8)
        throw std::runtime_error("exact_diag: residual " + std::to_string(residual));
    return out;
}

double analytic_pair_energy(double gamma) {
    if (std::abs(gamma) > 2.0)
        throw std::domain_error("analytic_pair_energy: |gamma| > 2 is dissociative");
    return std::sqrt(1.0 + gamma / 2.0) + std::sqrt(1.0 - gamma / 2.0);
}

double london_1d(double alpha, double hbar_omega, double R) {
    if (R <= 0) throw std::domain_error("london_1d: R must be positive");
    const double r3 = R * R * R;
    return -alpha * alpha * hbar_omega / (2.0 * r3 * r3);
}

LondonCoefficients LondonCoefficients::from_molecule(double alpha_par,
                                                     double alpha_perp,
                                                     double omega_par,
                                                     double omega_perp) {
    LondonCoefficients c;
    c.c_par_par = alpha_par * alpha_par * omega_par / 8.0;
    c.c_perp_perp = alpha_perp * alpha_perp * omega_perp / 8.0;
    c.c_par_perp =
        alpha_par * alpha_perp * omega_par * omega_perp / (4.0 * (omega_par + omega_perp));
    return c;
}

double anisotropic_london(const LondonCoefficients& c, double theta_a,
                          double phi_a, double theta_b, double phi_b, double R) {
    if (R <= 0) throw std::domain_error("anisotropic_london: R must be positive");
    const double sa = std::sin(theta_a), ca = std::cos(theta_a);
    const double sb = std::sin(theta_b), cb = std::cos(theta_b);
    const double geom =
        sa * sa * sb * sb * std::cos(phi_a - phi_b) - 2.0 * ca * cb;
    const double bracket =
        (c.c_par_par + c.c_perp_perp - c.c_par_perp) * geom * geom +
        3.0 * (c.c_par_perp - c.c_perp_perp) * (ca * ca + cb * cb) +
        2.0 * (c.c_par_perp + 4.0 * c.c_perp_perp);
    const double r3 = R * R * R;
    return -bracket / (r3 * r3);
}

std::vector<TruncationRow> truncation_study(const std::vector<double>& gammas,
                                            const std::vector<int>& dims) {
    std::vector<TruncationRow> rows;
    rows.reserve(gammas.size() * dims.size());
    for (double gamma : gammas) {
        const double exact = analytic_pair_energy(gamma);
        for (int d : dims) {
            HamiltonianSpec spec;
            spec.d = d;
            spec.graph.num_oscillators = 2;
            spec.graph.edges = {{0, 1, gamma}};
            TruncationRow row;
            row.gamma = gamma;
            row.d = d;
            row.energy_d = exact_diag(spec).energy;
            row.energy_analytic = exact;
            row.error = row.energy_d - exact;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace qdo
