#pragma once

#include "qdo/grouping.hpp"

namespace qdo {

enum class StateModelKind { SphericalMeasure, UncoupledPure, ExplicitVector };

/// State assumption behind a variance estimate. ExplicitVector carries a
/// normalized amplitude vector; UncoupledPure is shorthand for |0...0>.
struct StateModel {
    StateModelKind kind = StateModelKind::SphericalMeasure;
    std::vector<cplx> state;

    static StateModel spherical() { return {StateModelKind::SphericalMeasure, {}}; }
    static StateModel uncoupled() { return {StateModelKind::UncoupledPure, {}}; }
    static StateModel explicit_vector(std::vector<cplx> psi);
};

struct GroupShare {
    int group = 0;
    double variance = 0.0;  // sum_{i,j in g} a_i a_j Cov[P_i, P_j]
    double fraction = 0.0;  // optimal allocation, proportional to sqrt(variance)
};

struct ShotEstimate {
    double total = 0.0;
    std::vector<GroupShare> per_group;
    double epsilon = 0.0;
    StateModelKind model = StateModelKind::SphericalMeasure;
};

/// Expected variance of a Pauli string of the given weight over the spherical
/// measure: 0 for identity, 1 - 1/(2^w + 1) otherwise.
double spherical_variance(int weight);

/// Lagrange-optimal shot budget S = (1/eps^2) [sum_g sqrt(V_g)]^2 where V_g is
/// the within-group weighted (co)variance. The spherical model uses
/// spherical_variance with zero cross-covariances; state models use exact
/// expectations. Numerically negative group variances clamp to 0 with a
/// warning on stderr.
ShotEstimate estimate_shots(const PauliSum& h,
                            const std::vector<MeasurementGroup>& groups,
                            const StateModel& model, double epsilon);

/// sum_F sqrt(sum_{edges in F} gamma^2) over the rounds of
/// round_robin_factorization(N); edges absent from the graph contribute 0.
double round_gamma_quadrature(const CouplingGraph& graph);

/// Closed-form bound, grouped measurements, spherical measure:
/// [sqrt(2)/3 sqrt(N) sqrt(d^2-1) + (sum_F sqrt(sum_F g^2)) *
///  (2d - (4+2m)d^2 + (2+2m+m^2/2)d^3)]^2 / eps^2,  m = log2 d.
double bound_grouped_spherical(int N, int d, const CouplingGraph& graph,
                               double epsilon);

/// Closed-form bound, per-term measurements, spherical measure:
/// [N sqrt(6)/3 (d-1) + (sum |g|) ((3+2r2)d^2 - (2+r2)d^{5/2} - (7/2+3r2)d^3
///  + (1+r2)d^{7/2} + (3/2+r2)d^4)]^2 / eps^2,  r2 = sqrt(2).
double bound_ungrouped_spherical(int N, int d, const CouplingGraph& graph,
                                 double epsilon);

/// |0...0> closed forms: grouped (1/16)(sum_F sqrt(sum_F g^2))^2 d^4/eps^2,
/// ungrouped (1/16)(sum |g|)^2 d^4/eps^2.
double bound_uncoupled(int N, int d, const CouplingGraph& graph, double epsilon,
                       bool grouped);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qdo
