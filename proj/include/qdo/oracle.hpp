#pragma once

#include "qdo/model.hpp"

namespace qdo {

struct GroundState {
    double energy = 0.0;
    Eigen::VectorXcd vector;
};

/// Lowest eigenpair of the dense truncated Hamiltonian. Residual
/// ||Hv - Ev|| < 1e-8 is verified before returning.
GroundState exact_diag(const HamiltonianSpec& spec);

/// Normal-mode ground energy of the dipolar pair: sqrt(1+gamma/2) +
/// sqrt(1-gamma/2), units hbar*omega/2. Throws for |gamma| > 2 (dissociative).
double analytic_pair_energy(double gamma);

/// Leading-order 1D London dispersion -alpha^2 hbar_omega / (2 R^6), in eV.
double london_1d(double alpha, double hbar_omega, double R);

/// Dispersion coefficients for an axially symmetric linear molecule.
struct LondonCoefficients {
    double c_par_par = 0.0;
    double c_perp_perp = 0.0;
    double c_par_perp = 0.0;

    static LondonCoefficients from_molecule(double alpha_par, double alpha_perp,
                                            double omega_par, double omega_perp);
};

/// Orientation-dependent London energy between two linear molecules:
/// -1/R^6 [ (Cpp + Ctt - Cpt){sin^2 t_a sin^2 t_b cos(p_a - p_b)
///           - 2 cos t_a cos t_b}^2
///          + 3(Cpt - Ctt){cos^2 t_a + cos^2 t_b} + 2(Cpt + 4 Ctt) ].
double anisotropic_london(const LondonCoefficients& c, double theta_a,
                          double phi_a, double theta_b, double phi_b, double R);

struct TruncationRow {
    double gamma = 0.0;
    int d = 0;
    double energy_d = 0.0;
    double energy_analytic = 0.0;
    double error = 0.0;  // energy_d - energy_analytic (variational: >= 0)
};

/// Pair ground energy per (gamma, d) against the normal-mode value.
std::vector<TruncationRow> truncation_study(const std::vector<double>& gammas,
                                            const std::vector<int>& dims);

}  // namespace qdo
