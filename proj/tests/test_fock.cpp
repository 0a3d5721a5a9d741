#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdo/fock.hpp"

using namespace qdo;

TEST_CASE("encode_fock_index") {
    CHECK(encode_fock_index(0, 2) == std::vector<int>{0, 0});
    CHECK(encode_fock_index(3, 2) == std::vector<int>{1, 1});
    CHECK(encode_fock_index(5, 3) == std::vector<int>{1, 0, 1});
    CHECK_THROWS_AS(encode_fock_index(4, 2), std::domain_error);
}

TEST_CASE("lowest_zero_bit") {
    CHECK(lowest_zero_bit(0, 2) == 0);
    CHECK(lowest_zero_bit(1, 2) == 1);
    CHECK(lowest_zero_bit(3, 3) == 2);
    CHECK_THROWS_AS(lowest_zero_bit(3, 2), std::domain_error);
}

TEST_CASE("position operator entries") {
    const Matrix x2 = position_op(2);
    CHECK(std::abs(x2(0, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
    const Matrix x4 = position_op(4);
    CHECK(std::abs(x4(1, 2) - 1.0) < 1e-15);  // sqrt((1+1)/2)
    CHECK((x4 - x4.transpose()).norm() < 1e-15);
    CHECK_THROWS_AS(position_op(3), std::domain_error);
}

TEST_CASE("number_diag_pauli eigenvalues are 2n+1") {
    for (int m = 1; m <= 3; ++m) {
        const PauliSum sum = number_diag_pauli(m);
        const Matrix mat = pauli_to_matrix(sum);
        for (int n = 0; n < (1 << m); ++n)
            CHECK(std::abs(mat(n, n) - (2.0 * n + 1.0)) < 1e-12);
        CHECK(std::abs(mat.trace().real() - double((1 << m) * (1 << m))) < 1e-9);
    }
    const PauliSum m1 = number_diag_pauli(1);
    CHECK(std::abs(m1.coefficient("I") - cplx{2, 0}) < 1e-15);
    CHECK(std::abs(m1.coefficient("Z") - cplx{-1, 0}) < 1e-15);
}

TEST_CASE("matrix_to_pauli round trips random Hermitian matrices") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int m = 1; m <= 4; ++m) {
        const int dim = 1 << m;
        Matrix a = Matrix::Zero(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) a(i, j) = cplx{u(rng), u(rng)};
        const Matrix herm = (a + a.adjoint()) / 2.0;
        const PauliSum sum = matrix_to_pauli(herm);
        CHECK(sum.is_hermitian(1e-12));
        CHECK((pauli_to_matrix(sum) - herm).norm() < 1e-10);
    }
}

TEST_CASE("matrix_to_pauli basic identities") {
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    const PauliSum sum = matrix_to_pauli(z);
    CHECK(sum.size() == 1);
    CHECK(std::abs(sum.coefficient("Z") - cplx{1, 0}) < 1e-15);
    const PauliSum x = matrix_to_pauli(position_op(2));
    CHECK(std::abs(x.coefficient("X") - cplx{1.0 / std::sqrt(2.0), 0}) < 1e-15);
}

TEST_CASE("decompose_transition structure") {
    const PauliSum t01 = decompose_transition(0, 1);
    CHECK(t01.size() == 1);
    CHECK(std::abs(t01.coefficient("X") - cplx{1, 0}) < 1e-15);

    const PauliSum t02 = decompose_transition(0, 2);
    CHECK(t02.size() == 2);
    CHECK(std::abs(t02.coefficient("XI") - cplx{0.5, 0}) < 1e-15);
    CHECK(std::abs(t02.coefficient("XZ") - cplx{0.5, 0}) < 1e-15);

    const PauliSum t12 = decompose_transition(1, 2);
    CHECK(t12.size() == 2);
    for (const auto& [letters, c] : t12.terms()) {
        CHECK((letters[0] == 'X' || letters[0] == 'Y'));
        CHECK((letters[1] == 'X' || letters[1] == 'Y'));
    }

    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n + 1 < (1 << m); ++n) {
            const PauliSum t = decompose_transition(n, m);
            CHECK(t.size() == std::size_t(1 << m) / 2);
            Matrix expect = Matrix::Zero(1 << m, 1 << m);
            expect(n + 1, n) = 1;
            expect(n, n + 1) = 1;
            CHECK((pauli_to_matrix(t) - expect).norm() < 1e-12);
        }
    }
}

TEST_CASE("decompose_position equals the trace decomposition") {
    for (int d : {2, 4, 8}) {
        const PauliSum structural = decompose_position(d);
        const PauliSum trace = matrix_to_pauli(position_op(d));
        CHECK(structural.size() == trace.size());
        const int m = qubits_for_dimension(d);
        CHECK(static_cast<int>(structural.size()) == d / 2 * m);
        for (const auto& [letters, c] : trace.terms())
            CHECK(std::abs(structural.coefficient(letters) - c) < 1e-12);
    }
}

TEST_CASE("embed places letters on the register and respects tensor products") {
    RegisterMap layout{2, 2, 1};
    PauliSum x(1);
    x.add_term("X", cplx{1, 0});
    const PauliSum on_second = embed(x, layout, 1);
    CHECK(on_second.coefficient("IIXI") == cplx{1, 0});

    // multiply of disjoint embeds = kron of matrices (oscillator 0 fastest).
    const PauliSum a = decompose_position(4);
    const PauliSum prod = embed(a, layout, 0).multiply(embed(a, layout, 1));
    const Matrix big = pauli_to_matrix(prod);
    const Matrix small = position_op(4);
    for (int r0 = 0; r0 < 4; ++r0)
        for (int c0 = 0; c0 < 4; ++c0)
            for (int r1 = 0; r1 < 4; ++r1)
                for (int c1 = 0; c1 < 4; ++c1)
                    CHECK(std::abs(big(r1 * 4 + r0, c1 * 4 + c0) -
                                   small(r0, c0) * small(r1, c1)) < 1e-12);
}
