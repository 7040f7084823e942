#include "kernels.hpp"

namespace f2r::detail {

const Kernels& kernels() {
#if F2R_HAVE_CLMUL_HW
    static const Kernels& selected =
        __builtin_cpu_supports("pclmul") ? kernels_hw : kernels_sw;
    return selected;
#else
    return kernels_sw;
#endif
}

}  // namespace f2r::detail
