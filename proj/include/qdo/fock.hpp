#pragma once

#include <Eigen/Dense>

#include "qdo/pauli.hpp"

namespace qdo {

using Matrix = Eigen::MatrixXcd;

/// Qubit layout for N oscillators with m qubits each (times 3 axes in 3D).
/// Bit 0 of each register is the least significant bit of bin_m(n) and sits
/// on the lowest qubit index of the register.
struct RegisterMap {
    int num_oscillators = 0;
    int qubits_per_oscillator = 0;
    int axes = 1;

    int total_qubits() const { return num_oscillators * qubits_per_oscillator * axes; }

    /// Qubit index for (oscillator, axis, bit).
    int qubit(int oscillator, int bit, int axis = 0) const {
        if (oscillator < 0 || oscillator >= num_oscillators || bit < 0 ||
            bit >= qubits_per_oscillator || axis < 0 || axis >= axes)
            throw std::out_of_range("RegisterMap::qubit: index out of range");
        return (oscillator * axes + axis) * qubits_per_oscillator + bit;
    }
};

/// log2(d) for d a power of two; throws otherwise.
int qubits_for_dimension(int d);

/// The m bits of n, least significant first.
std::vector<int> encode_fock_index(int n, int m);

/// Least index k with bit_k(n) = 0; incrementing n flips bits 0..k.
int lowest_zero_bit(int n, int m);

/// Truncated position operator with <n+1|x|n> = sqrt((n+1)/2).
Matrix position_op(int d);

/// 2^m I - sum_i 2^i Z_i; eigenvalue 2n+1 on |bin_m(n)>.
PauliSum number_diag_pauli(int m);

/// Trace-inner-product decomposition: coefficient of P is Tr[P mat]/2^M.
PauliSum matrix_to_pauli(const Matrix& mat);

/// Dense reconstruction of a PauliSum (inverse of matrix_to_pauli).
Matrix pauli_to_matrix(const PauliSum& sum);

/// |n+1><n| + |n><n+1| as a PauliSum on m qubits; 2^m/2 Hermitian terms.
PauliSum decompose_transition(int n, int m);

/// Pauli form of position_op(d); (d/2) log2(d) non-zero terms.
PauliSum decompose_position(int d);

/// Place the letters of ps on the register of `oscillator`, I elsewhere.
PauliSum embed(const PauliSum& ps, const RegisterMap& layout, int oscillator,
               int axis = 0);

}  // namespace qdo
