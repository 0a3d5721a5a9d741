#include "qdo/kernels.hpp"

namespace qdo::kernels {

namespace {

void apply_gate1_scalar(cplx* state, std::size_t n, int target, const cplx* u) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const cplx a = state[base + k];
            const cplx b = state[base + k + stride];
            state[base + k] = u[0] * a + u[1] * b;
            state[base + k + stride] = u[2] * a + u[3] * b;
        }
    }
}

double norm_sq_scalar(const cplx* state, std::size_t n) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += std::norm(state[i]);
    return total;
}

void abs_sq_scalar(const cplx* state, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::norm(state[i]);
}

}  // namespace

const Dispatch& scalar_kernels() {
    static const Dispatch d{apply_gate1_scalar, norm_sq_scalar, abs_sq_scalar,
                            "scalar"};
    return d;
}

}  // namespace qdo::kernels
