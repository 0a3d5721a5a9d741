#pragma once

#include <array>
#include <optional>

#include "qdo/fock.hpp"
#include "qdo/pauli.hpp"

namespace qdo {

/// Per-molecule oscillator parameters. alpha in cubic angstrom, hbar_omega in
/// eV. For 3D use the per-axis polarisability triple.
struct OscillatorParams {
    double alpha = 0.0;
    double hbar_omega = 0.0;
    std::array<double, 3> alpha_axes{0.0, 0.0, 0.0};
};

struct CouplingEdge {
    int i = 0;
    int j = 0;
    double gamma = 0.0;
};

struct CouplingGraph {
    int num_oscillators = 0;
    std::vector<CouplingEdge> edges;

    void validate() const;
    /// |gamma| >= 2 marks a dissociative coupling.
    bool has_dissociative_edge() const;
};

/// One monomial prod_k x_{osc_k}^{power_k} with a real coefficient.
struct Monomial {
    std::vector<std::pair<int, int>> factors;  // (oscillator, power)
    double coefficient = 0.0;
};

/// Symbolic Hamiltonian: sum_i (x_i^2 + p_i^2) + sum_edges gamma x_i x_j plus
/// extra monomial terms, truncated to d Fock levels per oscillator.
/// Energies are dimensionless in units of hbar*omega/2.
struct HamiltonianSpec {
    int d = 4;
    CouplingGraph graph;
    std::vector<Monomial> extra_terms;

    void validate() const;
    std::string to_json() const;
    static HamiltonianSpec from_json(const std::string& text);
};

/// gamma for oscillators aligned along the intermolecular axis: -4 alpha/R^3.
double coupling_parallel(double alpha, double R);

/// gamma for oscillators perpendicular to the axis: +2 alpha/R^3.
double coupling_perpendicular(double alpha, double R);

RegisterMap layout_for(const HamiltonianSpec& spec);

/// Pauli form of the Hamiltonian. The diagonal part uses the exact 2n+1
/// spectrum; coupling and extra terms use truncated matrix powers of x.
PauliSum build_1d_hamiltonian(const HamiltonianSpec& spec);

/// Direct dense assembly in the Fock product basis (oscillator 0 fastest).
/// Independent of the Pauli decomposition path.
Matrix dense_hamiltonian(const HamiltonianSpec& spec);

/// Axis problems for a 3D pair separated by R along z:
/// gamma_xx = 2 a_xx/R^3, gamma_yy = 2 a_yy/R^3, gamma_zz = -4 a_zz/R^3.
std::array<HamiltonianSpec, 3> build_3d_pair(const OscillatorParams& params,
                                             double R, int d);

/// Taylor coefficients {1/r, 1/r^2, ..., 1/r^w} for powers x^0..x^{w-1}.
std::vector<double> coulomb_taylor(double r, int w);

/// Two-oscillator demo spec with cubic/quartic onsite terms and x^2 x
/// cross terms added to the dipolar pair.
HamiltonianSpec example_extended_hamiltonian(double gamma, int d = 4);

}  // namespace qdo
