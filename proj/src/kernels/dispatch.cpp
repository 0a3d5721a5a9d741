#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qdo/kernels.hpp"

namespace qdo::kernels {

#ifndef QDO_HAVE_AVX2
const Dispatch* avx2_kernels() { return nullptr; }
#endif

const Dispatch& active() {
    static const Dispatch& chosen = []() -> const Dispatch& {
        const char* env = std::getenv("QDO_KERNEL");
        const std::string want = env ? env : "";
        if (want == "scalar") return scalar_kernels();
        const Dispatch* avx2 = avx2_kernels();
        if (want == "avx2") {
            if (!avx2) throw std::runtime_error("QDO_KERNEL=avx2: not available");
            return *avx2;
        }
        if (!want.empty())
            throw std::runtime_error("QDO_KERNEL: unknown kernel '" + want + "'");
        return avx2 ? *avx2 : scalar_kernels();
    }();
    return chosen;
}

}  // namespace qdo::kernels
