#include "vortexab/kernels.hpp"

#include <complex>

namespace vortexab::kernels {

namespace {

// Terms between exact re-anchorings of the incremental rotation.
constexpr int kAnchorStride = 32;

} // namespace

std::complex<double> phase_sum_scalar(const double* re, const double* im, int count, int n_min,
                                      double theta) {
    double acc_re = 0.0, acc_im = 0.0;
    for (int block = 0; block < count; block += kAnchorStride) {
        const int end = block + kAnchorStride < count ? block + kAnchorStride : count;
        const std::complex<double> anchor = std::polar(1.0, (n_min + block) * theta);
        const std::complex<double> step = std::polar(1.0, theta);
        double pr = anchor.real(), pi = anchor.imag();
        for (int j = block; j < end; ++j) {
            acc_re += re[j] * pr - im[j] * pi;
            acc_im += re[j] * pi + im[j] * pr;
            const double next_r = pr * step.real() - pi * step.imag();
            const double next_i = pr * step.imag() + pi * step.real();
            pr = next_r;
            pi = next_i;
        }
    }
    return {acc_re, acc_im};
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

using KernelFn = std::complex<double> (*)(const double*, const double*, int, int, double);

KernelFn pick_kernel() {
    return avx2_supported() ? &phase_sum_avx2 : &phase_sum_scalar;
}

} // namespace

std::complex<double> phase_sum(const double* re, const double* im, int count, int n_min,
                               double theta) {
    static const KernelFn fn = pick_kernel();
    return fn(re, im, count, n_min, theta);
}

const char* active_kernel_name() {
    return avx2_supported() ? "avx2" : "scalar";
}

} // namespace vortexab::kernels
