#include <immintrin.h>

#include "qdo/kernels.hpp"

namespace qdo::kernels {

namespace {

// Element-wise complex product of two [c0, c1] registers.
inline __m256d cmul(__m256d x, __m256d y) {
    const __m256d t1 = _mm256_mul_pd(x, _mm256_movedup_pd(y));
    const __m256d t2 = _mm256_mul_pd(_mm256_permute_pd(x, 0x5),
                                     _mm256_permute_pd(y, 0xF));
    return _mm256_addsub_pd(t1, t2);
}

inline __m256d broadcast(const cplx& c) {
    return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&c));
}

void apply_gate1_avx2(cplx* state, std::size_t n, int target, const cplx* u) {
    double* p = reinterpret_cast<double*>(state);
    const std::size_t stride = std::size_t{1} << target;
    if (stride == 1) {
        // Pairs are adjacent: one register holds [a, b].
        const __m256d row0 = _mm256_setr_pd(u[0].real(), u[0].imag(),
                                            u[2].real(), u[2].imag());
        const __m256d row1 = _mm256_setr_pd(u[1].real(), u[1].imag(),
                                            u[3].real(), u[3].imag());
        for (std::size_t i = 0; i < n; i += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * i);
            const __m256d aa = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d bb = _mm256_permute2f128_pd(v, v, 0x11);
            _mm256_storeu_pd(p + 2 * i,
                             _mm256_add_pd(cmul(row0, aa), cmul(row1, bb)));
        }
        return;
    }
    const __m256d u00 = broadcast(u[0]), u01 = broadcast(u[1]);
    const __m256d u10 = broadcast(u[2]), u11 = broadcast(u[3]);
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t k = 0; k < stride; k += 2) {
            double* pa = p + 2 * (base + k);
            double* pb = p + 2 * (base + k + stride);
            const __m256d va = _mm256_loadu_pd(pa);
            const __m256d vb = _mm256_loadu_pd(pb);
            _mm256_storeu_pd(pa, _mm256_add_pd(cmul(va, u00), cmul(vb, u01)));
            _mm256_storeu_pd(pb, _mm256_add_pd(cmul(va, u10), cmul(vb, u11)));
        }
    }
}

double norm_sq_avx2(const cplx* state, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(state);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n; i += 2) {
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

void abs_sq_avx2(const cplx* state, std::size_t n, double* out) {
    const double* p = reinterpret_cast<const double*>(state);
    for (std::size_t i = 0; i < n; i += 2) {
        const __m256d v = _mm256_loadu_pd(p + 2 * i);
        const __m256d sq = _mm256_mul_pd(v, v);
        const __m256d sums = _mm256_hadd_pd(sq, sq);
        out[i] = _mm256_cvtsd_f64(sums);
        out[i + 1] = _mm_cvtsd_f64(_mm256_extractf128_pd(sums, 1));
    }
}

}  // namespace

const Dispatch* avx2_kernels() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Dispatch d{apply_gate1_avx2, norm_sq_avx2, abs_sq_avx2, "avx2"};
    return &d;
}

}  // namespace qdo::kernels
