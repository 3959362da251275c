#include "vortexab/kernels.hpp"

#include <complex>

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace vortexab::kernels {

namespace {

// Vector iterations between exact re-anchorings (32 terms, matching the
// scalar variant's drift bound).
constexpr int kAnchorIters = 8;

__m256d lane_phases_re(int n0, double theta) {
    return _mm256_set_pd(std::cos((n0 + 3) * theta), std::cos((n0 + 2) * theta),
                         std::cos((n0 + 1) * theta), std::cos(n0 * theta));
}

__m256d lane_phases_im(int n0, double theta) {
    return _mm256_set_pd(std::sin((n0 + 3) * theta), std::sin((n0 + 2) * theta),
                         std::sin((n0 + 1) * theta), std::sin(n0 * theta));
}

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

} // namespace

std::complex<double> phase_sum_avx2(const double* re, const double* im, int count, int n_min,
                                    double theta) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const __m256d step_re = _mm256_set1_pd(std::cos(4.0 * theta));
    const __m256d step_im = _mm256_set1_pd(std::sin(4.0 * theta));

    const int vec_count = count & ~3;
    int j = 0;
    while (j < vec_count) {
        __m256d pr = lane_phases_re(n_min + j, theta);
        __m256d pi = lane_phases_im(n_min + j, theta);
        const int stop = j + 4 * kAnchorIters < vec_count ? j + 4 * kAnchorIters : vec_count;
        for (; j < stop; j += 4) {
            const __m256d fr = _mm256_loadu_pd(re + j);
            const __m256d fi = _mm256_loadu_pd(im + j);
            acc_re = _mm256_fmadd_pd(fr, pr, acc_re);
            acc_re = _mm256_fnmadd_pd(fi, pi, acc_re);
            acc_im = _mm256_fmadd_pd(fr, pi, acc_im);
            acc_im = _mm256_fmadd_pd(fi, pr, acc_im);
            const __m256d next_r = _mm256_fnmadd_pd(pi, step_im, _mm256_mul_pd(pr, step_re));
            const __m256d next_i = _mm256_fmadd_pd(pi, step_re, _mm256_mul_pd(pr, step_im));
            pr = next_r;
            pi = next_i;
        }
    }

    std::complex<double> total(hsum(acc_re), hsum(acc_im));
    if (vec_count < count)
        total += phase_sum_scalar(re + vec_count, im + vec_count, count - vec_count,
                                  n_min + vec_count, theta);
    return total;
}

} // namespace vortexab::kernels

#else

namespace vortexab::kernels {

std::complex<double> phase_sum_avx2(const double* re, const double* im, int count, int n_min,
                                    double theta) {
    return phase_sum_scalar(re, im, count, n_min, theta);
}

} // namespace vortexab::kernels

#endif
