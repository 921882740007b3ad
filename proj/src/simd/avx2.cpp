// AVX2+FMA variants. Compiled with -mavx2 -mfma; only dispatched to when the
// CPU reports AVX2 support at runtime.

#if defined(__x86_64__) || defined(_M_X64)

#include <cmath>
#include <immintrin.h>

#include "ssn/simd/kernels.hpp"

namespace ssn::simd {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline __m256d abs_pd(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    return _mm256_and_pd(v, mask);
}

// One row of pairwise squared distances, vectorized over the p coordinates.
inline double sqdist_one(const double* a, const double* bj, std::size_t p) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= p; k += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(bj + k));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum(acc);
    for (; k < p; ++k) {
        const double d = a[k] - bj[k];
        s += d * d;
    }
    return s;
}

inline double l1dist_one(const double* a, const double* bj, std::size_t p) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= p; k += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(bj + k));
        acc = _mm256_add_pd(acc, abs_pd(d));
    }
    double s = hsum(acc);
    for (; k < p; ++k) s += std::fabs(a[k] - bj[k]);
    return s;
}

void sqdist_many_avx2(const double* a, const double* b, std::size_t nb, std::size_t p, double* out) {
    if (p == 1) {
        const __m256d av = _mm256_set1_pd(a[0]);
        std::size_t j = 0;
        for (; j + 4 <= nb; j += 4) {
            __m256d d = _mm256_sub_pd(av, _mm256_loadu_pd(b + j));
            _mm256_storeu_pd(out + j, _mm256_mul_pd(d, d));
        }
        for (; j < nb; ++j) {
            const double d = a[0] - b[j];
            out[j] = d * d;
        }
        return;
    }
    for (std::size_t j = 0; j < nb; ++j) out[j] = sqdist_one(a, b + j * p, p);
}

void sqdist_many1_avx2(double a0, const double* b, std::size_t nb, double* out) {
    sqdist_many_avx2(&a0, b, nb, 1, out);
}

void l1dist_many_avx2(const double* a, const double* b, std::size_t nb, std::size_t p, double* out) {
    if (p == 1) {
        const __m256d av = _mm256_set1_pd(a[0]);
        std::size_t j = 0;
        for (; j + 4 <= nb; j += 4)
            _mm256_storeu_pd(out + j, abs_pd(_mm256_sub_pd(av, _mm256_loadu_pd(b + j))));
        for (; j < nb; ++j) out[j] = std::fabs(a[0] - b[j]);
        return;
    }
    for (std::size_t j = 0; j < nb; ++j) out[j] = l1dist_one(a, b + j * p, p);
}

void l1dist_many1_avx2(double a0, const double* b, std::size_t nb, double* out) {
    l1dist_many_avx2(&a0, b, nb, 1, out);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot2_avx2(const double* a, const double* b, const double* c, const double* d, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i] + c[i] * d[i];
    return s;
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i];
    return s;
}

void add_inplace_avx2(double* acc, const double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) acc[i] += x[i];
}

void axpy_avx2(double* acc, double w, const double* x, std::size_t n) {
    const __m256d wv = _mm256_set1_pd(w);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(wv, _mm256_loadu_pd(x + i), _mm256_loadu_pd(acc + i)));
    for (; i < n; ++i) acc[i] += w * x[i];
}

} // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }

const Ops avx2_ops = {
    "avx2",
    sqdist_many_avx2,
    sqdist_many1_avx2,
    l1dist_many_avx2,
    l1dist_many1_avx2,
    dot_avx2,
    dot2_avx2,
    sum_avx2,
    add_inplace_avx2,
    axpy_avx2,
};

} // namespace ssn::simd

#endif // x86-64
