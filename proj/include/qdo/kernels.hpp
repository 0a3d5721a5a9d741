#pragma once

#include <complex>
#include <cstddef>

namespace qdo::kernels {

using cplx = std::complex<double>;

/// Inner-loop kernels for the state-vector simulator. `apply_gate1` applies a
/// 2x2 unitary u (row-major: u00 u01 u10 u11) to the target qubit of a state
/// of n = 2^M amplitudes; `norm_sq` returns sum |a_i|^2; `abs_sq` writes the
/// per-amplitude probabilities.
struct Dispatch {
    void (*apply_gate1)(cplx* state, std::size_t n, int target, const cplx* u);
    double (*norm_sq)(const cplx* state, std::size_t n);
    void (*abs_sq)(const cplx* state, std::size_t n, double* out);
    const char* name;
};

const Dispatch& scalar_kernels();

/// Null when the binary was built without AVX2 support or the CPU lacks it.
const Dispatch* avx2_kernels();

/// Kernel set picked at first use: QDO_KERNEL=scalar|avx2 overrides, otherwise
/// AVX2 when available. Throws if an explicit request cannot be satisfied.
const Dispatch& active();

}  // namespace qdo::kernels
