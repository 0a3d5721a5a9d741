#include "qdo/fock.hpp"

#include <cmath>

namespace qdo {

int qubits_for_dimension(int d) {
    if (d < 2 || (d & (d - 1)) != 0)
        throw std::domain_error("dimension must be a power of two >= 2");
    int m = 0;
    while ((1 << m) < d) ++m;
    return m;
}

std::vector<int> encode_fock_index(int n, int m) {
    if (m < 1 || n < 0 || n >= (1 << m))
        throw std::domain_error("encode_fock_index: n out of range");
    std::vector<int> bits(m);
    for (int i = 0; i < m; ++i) bits[i] = (n >> i) & 1;
    return bits;
}

int lowest_zero_bit(int n, int m) {
    if (n < 0 || n >= (1 << m) - 1)
        throw std::domain_error("lowest_zero_bit: n+1 not representable");
    int k = 0;
    while ((n >> k) & 1) ++k;
    return k;
}

Matrix position_op(int d) {
    qubits_for_dimension(d);
    Matrix x = Matrix::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n) {
        const double v = std::sqrt((n + 1) / 2.0);
        x(n + 1, n) = v;
        x(n, n + 1) = v;
    }
    return x;
}

PauliSum number_diag_pauli(int m) {
    if (m < 1) throw std::domain_error("number_diag_pauli: m must be >= 1");
    PauliSum out(m);
    out.add_term(std::string(m, 'I'), cplx(double(1 << m), 0));
    for (int i = 0; i < m; ++i) {
        std::string letters(m, 'I');
        letters[i] = 'Z';
        out.add_term(letters, cplx(-double(1 << i), 0));
    }
    return out;
}

PauliSum matrix_to_pauli(const Matrix& mat) {
    const Eigen::Index dim = mat.rows();
    if (dim != mat.cols() || dim < 2 || (dim & (dim - 1)) != 0)
        throw std::domain_error("matrix_to_pauli: dimension must be a power of two");
    int m = 0;
    while ((Eigen::Index{1} << m) < dim) ++m;

    PauliSum out(m);
    std::string letters(m, 'I');
    // Enumerate all 4^m strings; Tr[P mat] costs O(dim) since P is a
    // generalized permutation.
    const std::size_t total = std::size_t{1} << (2 * m);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t flip_mask = 0, z_mask = 0;
        cplx base{1, 0};
        for (int q = 0; q < m; ++q) {
            switch ((code >> (2 * q)) & 3) {
                case 0: letters[q] = 'I'; break;
                case 1:
                    letters[q] = 'X';
                    flip_mask |= std::size_t{1} << q;
                    break;
                case 2:
                    letters[q] = 'Y';
                    flip_mask |= std::size_t{1} << q;
                    z_mask |= std::size_t{1} << q;
                    base *= cplx{0, 1};
                    break;
                case 3:
                    letters[q] = 'Z';
                    z_mask |= std::size_t{1} << q;
                    break;
            }
        }
        cplx tr{0, 0};
        for (std::size_t col = 0; col < std::size_t(dim); ++col) {
            const int parity = __builtin_popcountll(col & z_mask) & 1;
            const cplx entry = base * mat(Eigen::Index(col), Eigen::Index(col ^ flip_mask));
            tr += parity ? -entry : entry;
        }
        const cplx coeff = tr / double(dim);
        if (std::abs(coeff) >= PauliSum::kPruneThreshold) out.add_term(letters, coeff);
    }
    out.simplify();
    return out;
}

Matrix pauli_to_matrix(const PauliSum& sum) {
    const int m = static_cast<int>(sum.num_qubits());
    const Eigen::Index dim = Eigen::Index{1} << m;
    Matrix out = Matrix::Zero(dim, dim);
    for (const auto& [letters, c] : sum.terms()) {
        std::size_t flip_mask = 0, z_mask = 0;
        cplx base = c;
        for (int q = 0; q < m; ++q) {
            switch (letters[q]) {
                case 'X': flip_mask |= std::size_t{1} << q; break;
                case 'Y':
                    flip_mask |= std::size_t{1} << q;
                    z_mask |= std::size_t{1} << q;
                    base *= cplx{0, 1};
                    break;
                case 'Z': z_mask |= std::size_t{1} << q; break;
                default: break;
            }
        }
        for (std::size_t col = 0; col < std::size_t(dim); ++col) {
            const int parity = __builtin_popcountll(col & z_mask) & 1;
            out(Eigen::Index(col ^ flip_mask), Eigen::Index(col)) +=
                parity ? -base : base;
        }
    }
    return out;
}

PauliSum decompose_transition(int n, int m) {
    if (m < 1 || n < 0 || n >= (1 << m) - 1)
        throw std::domain_error("decompose_transition: n out of range");
    const int k = lowest_zero_bit(n, m);
    const auto bits = encode_fock_index(n, m);

    // Single-bit factors of |n+1><n|:
    //   bits 0..k-1:  |0><1| = (X + iY)/2
    //   bit  k:       |1><0| = (X - iY)/2
    //   bits k+1..m-1: |b><b| = (I + (-1)^b Z)/2
    struct Factor {
        cplx c0;
        char l0;
        cplx c1;
        char l1;
    };
    std::vector<Factor> factors(m);
    for (int q = 0; q < m; ++q) {
        if (q < k)
            factors[q] = {cplx{0.5, 0}, 'X', cplx{0, 0.5}, 'Y'};
        else if (q == k)
            factors[q] = {cplx{0.5, 0}, 'X', cplx{0, -0.5}, 'Y'};
        else
            factors[q] = {cplx{0.5, 0}, 'I', cplx{bits[q] ? -0.5 : 0.5, 0}, 'Z'};
    }

    PauliSum out(m);
    std::string letters(m, 'I');
    for (std::size_t choice = 0; choice < (std::size_t{1} << m); ++choice) {
        cplx coeff{1, 0};
        for (int q = 0; q < m; ++q) {
            const bool second = (choice >> q) & 1;
            coeff *= second ? factors[q].c1 : factors[q].c0;
            letters[q] = second ? factors[q].l1 : factors[q].l0;
        }
        // Adding the adjoint doubles real coefficients and cancels imaginary
        // ones.
        if (std::abs(coeff.imag()) < 1e-15 && std::abs(coeff.real()) > 0)
            out.add_term(letters, cplx{2 * coeff.real(), 0});
    }
    out.simplify();
    return out;
}

PauliSum decompose_position(int d) {
    const int m = qubits_for_dimension(d);
    PauliSum out(m);
    for (int n = 0; n + 1 < d; ++n) {
        PauliSum t = decompose_transition(n, m);
        t.scale(cplx(std::sqrt((n + 1) / 2.0), 0));
        out.add(t);
    }
    out.simplify();
    return out;
}

PauliSum embed(const PauliSum& ps, const RegisterMap& layout, int oscillator,
               int axis) {
    const int m = layout.qubits_per_oscillator;
    if (static_cast<int>(ps.num_qubits()) > m)
        throw std::domain_error("embed: operator wider than register");
    PauliSum out(layout.total_qubits());
    for (const auto& [letters, c] : ps.terms()) {
        std::string full(layout.total_qubits(), 'I');
        for (std::size_t bit = 0; bit < letters.size(); ++bit) {
            full[layout.qubit(oscillator, static_cast<int>(bit), axis)] = letters[bit];
        }
        out.add_term(full, c);
    }
    return out;
}

}  // namespace qdo
