#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qdo/oracle.hpp"
#include "qdo/shots.hpp"
#include "qdo/sim.hpp"

using namespace qdo;

namespace {

HamiltonianSpec dense_spec(int n, int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    HamiltonianSpec spec;
    spec.d = d;
    spec.graph.num_oscillators = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) spec.graph.edges.push_back({i, j, u(rng)});
    return spec;
}

std::vector<MeasurementGroup> singleton_groups(const PauliSum& h) {
    std::vector<MeasurementGroup> groups;
    int index = 0;
    for (const auto& [letters, c] : h.terms()) {
        std::string basis = letters;
        for (char& l : basis)
            if (l == 'I') l = 'Z';
        groups.push_back({basis, {index++}});
    }
    return groups;
}

}  // namespace

TEST_CASE("spherical_variance") {
    CHECK(spherical_variance(0) == 0.0);
    CHECK(spherical_variance(1) == doctest::Approx(2.0 / 3.0));
    CHECK(spherical_variance(2) == doctest::Approx(4.0 / 5.0));
    CHECK(spherical_variance(3) == doctest::Approx(8.0 / 9.0));
}

TEST_CASE("hand-computed spherical budget for the d=2 pair") {
    // H = 4 II - ZI - IZ + (gamma/2) XX: one Z group and one XX group.
    const double gamma = 0.8, eps = 0.01;
    HamiltonianSpec spec;
    spec.d = 2;
    spec.graph.num_oscillators = 2;
    spec.graph.edges = {{0, 1, gamma}};
    const PauliSum h = build_1d_hamiltonian(spec);
    const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);
    const auto est = estimate_shots(h, grouping.groups, StateModel::spherical(), eps);
    const double expect =
        std::pow(std::sqrt(4.0 / 3.0) + (gamma / 2.0) * std::sqrt(4.0 / 5.0), 2) /
        (eps * eps);
    CHECK(est.total == doctest::Approx(expect).epsilon(1e-12));
    double fraction_sum = 0.0;
    for (const auto& share : est.per_group) {
        CHECK(share.variance >= 0.0);
        fraction_sum += share.fraction;
    }
    CHECK(fraction_sum == doctest::Approx(1.0));
}

TEST_CASE("uncoupled state needs no shots without interactions") {
    HamiltonianSpec spec;
    spec.d = 4;
    spec.graph.num_oscillators = 2;
    const PauliSum h = build_1d_hamiltonian(spec);
    const auto groups = greedy_grouping(h);
    const auto est = estimate_shots(h, groups, StateModel::uncoupled(), 0.01);
    CHECK(est.total == doctest::Approx(0.0));
}

TEST_CASE("explicit |0...0> agrees with the uncoupled shortcut") {
    std::mt19937_64 rng(7);
    const auto spec = dense_spec(2, 4, rng);
    const PauliSum h = build_1d_hamiltonian(spec);
    const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);
    std::vector<cplx> e0(1 << 4, cplx{0, 0});
    e0[0] = cplx{1, 0};
    const auto a = estimate_shots(h, grouping.groups, StateModel::uncoupled(), 0.02);
    const auto b = estimate_shots(h, grouping.groups,
                                  StateModel::explicit_vector(e0), 0.02);
    CHECK(a.total == doctest::Approx(b.total).epsilon(1e-10));
    CHECK_THROWS_AS(StateModel::explicit_vector({cplx{0.5, 0}}), std::domain_error);
}

TEST_CASE("closed-form bounds dominate direct estimates on the grid") {
    std::mt19937_64 rng(19);
    const double eps = 0.01;
    for (int n = 2; n <= 4; ++n) {
        for (int d : {2, 4, 8}) {
            const auto spec = dense_spec(n, d, rng);
            const PauliSum h = build_1d_hamiltonian(spec);
            const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);
            const auto singles = singleton_groups(h);

            const auto sph_g =
                estimate_shots(h, grouping.groups, StateModel::spherical(), eps);
            CHECK(sph_g.total <=
                  bound_grouped_spherical(n, d, spec.graph, eps) * (1 + 1e-12));

            const auto sph_u =
                estimate_shots(h, singles, StateModel::spherical(), eps);
            CHECK(sph_u.total <=
                  bound_ungrouped_spherical(n, d, spec.graph, eps) * (1 + 1e-12));

            // the uncoupled closed forms are order-of-magnitude estimates, not
            // guaranteed bounds on the direct computation
            const auto unc_g =
                estimate_shots(h, grouping.groups, StateModel::uncoupled(), eps);
            const auto unc_u = estimate_shots(h, singles, StateModel::uncoupled(), eps);
            CHECK(unc_g.total > 0.0);
            CHECK(unc_u.total >= unc_g.total * (1 - 1e-12));
        }
    }
}

TEST_CASE("round_gamma_quadrature on a dense triangle") {
    CouplingGraph g;
    g.num_oscillators = 3;
    g.edges = {{0, 1, 2.0}, {0, 2, 2.0}, {1, 2, 2.0}};
    // three rounds of one edge each
    CHECK(round_gamma_quadrature(g) == doctest::Approx(6.0));
    g.edges.pop_back();
    CHECK(round_gamma_quadrature(g) == doctest::Approx(4.0));
}

TEST_CASE("allocated budget reproduces the target standard error") {
    HamiltonianSpec spec;
    spec.d = 4;
    spec.graph.num_oscillators = 2;
    spec.graph.edges = {{0, 1, 1.0}};
    const PauliSum h = build_1d_hamiltonian(spec);
    const auto grouping = exact_grouping(h, layout_for(spec), spec.graph);
    const auto terms = term_order(h);

    const GroundState gs = exact_diag(spec);
    std::vector<cplx> psi(gs.vector.size());
    for (int i = 0; i < gs.vector.size(); ++i) psi[i] = gs.vector(i);

    const double eps = 0.05;
    const auto est =
        estimate_shots(h, grouping.groups, StateModel::explicit_vector(psi), eps);

    std::mt19937_64 rng(101);
    const NoiseModel clean;
    const int reps = 200;
    double sum = 0.0, sum_sq = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
        double energy = 0.0;
        for (std::size_t g = 0; g < grouping.groups.size(); ++g) {
            const long long shots = std::max<long long>(
                1, std::llround(est.per_group[g].fraction * est.total));
            const auto values =
                measure_group(psi, grouping.groups[g], terms, shots, clean, rng);
            for (std::size_t k = 0; k < values.size(); ++k) {
                const int member = grouping.groups[g].members[k];
                energy += h.coefficient(terms[member]).real() * values[k];
            }
        }
        sum += energy;
        sum_sq += energy * energy;
    }
    const double mean = sum / reps;
    const double sd = std::sqrt((sum_sq / reps - mean * mean) * reps / (reps - 1));
    CHECK(std::abs(mean - gs.energy) < 4.0 * eps / std::sqrt(double(reps)) + 1e-3);
    CHECK(sd <= 1.2 * eps);
    CHECK(sd >= 0.6 * eps);
}

TEST_CASE("loglog_slope recovers power laws") {
    std::vector<double> x = {1, 2, 4, 8, 16};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, 2.5));
    CHECK(loglog_slope(x, y) == doctest::Approx(2.5).epsilon(1e-10));
    CHECK_THROWS_AS(loglog_slope({1.0}, {1.0}), std::domain_error);
}
