#pragma once

#include <complex>

namespace vortexab::kernels {

// Angular-harmonic synthesis primitive: given complex amplitudes f_j stored
// as split real/imaginary arrays, computes
//
//   sum_{j=0}^{count-1} (re[j] + i*im[j]) * exp(i*(n_min + j)*theta).
//
// The rotation exp(i*n*theta) is advanced incrementally and re-anchored with
// an exact polar evaluation every block, which keeps the drift a small
// multiple of machine epsilon independent of count.
//
// phase_sum dispatches to the best variant for the host CPU at first call;
// the suffixed variants are exposed so equivalence can be tested directly.
std::complex<double> phase_sum(const double* re, const double* im, int count, int n_min,
                               double theta);
std::complex<double> phase_sum_scalar(const double* re, const double* im, int count, int n_min,
                                      double theta);

// Four-wide FMA variant. Falls back to the scalar path when the binary or the
// host CPU lacks AVX2/FMA support; avx2_supported() reports the live choice.
std::complex<double> phase_sum_avx2(const double* re, const double* im, int count, int n_min,
                                    double theta);
bool avx2_supported();

// Name of the variant phase_sum currently dispatches to: "avx2" or "scalar".
const char* active_kernel_name();

} // namespace vortexab::kernels
