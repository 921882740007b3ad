// NEON variants (aarch64 baseline, always available there).

#if defined(__aarch64__)

#include <arm_neon.h>
#include <cmath>

#include "ssn/simd/kernels.hpp"

namespace ssn::simd {

namespace {

inline double sqdist_one(const double* a, const double* bj, std::size_t p) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= p; k += 2) {
        float64x2_t d = vsubq_f64(vld1q_f64(a + k), vld1q_f64(bj + k));
        acc = vfmaq_f64(acc, d, d);
    }
    double s = vaddvq_f64(acc);
    for (; k < p; ++k) {
        const double d = a[k] - bj[k];
        s += d * d;
    }
    return s;
}

void sqdist_many_neon(const double* a, const double* b, std::size_t nb, std::size_t p, double* out) {
    if (p == 1) {
        const float64x2_t av = vdupq_n_f64(a[0]);
        std::size_t j = 0;
        for (; j + 2 <= nb; j += 2) {
            float64x2_t d = vsubq_f64(av, vld1q_f64(b + j));
            vst1q_f64(out + j, vmulq_f64(d, d));
        }
        for (; j < nb; ++j) {
            const double d = a[0] - b[j];
            out[j] = d * d;
        }
        return;
    }
    for (std::size_t j = 0; j < nb; ++j) out[j] = sqdist_one(a, b + j * p, p);
}

void sqdist_many1_neon(double a0, const double* b, std::size_t nb, double* out) {
    sqdist_many_neon(&a0, b, nb, 1, out);
}

void l1dist_many_neon(const double* a, const double* b, std::size_t nb, std::size_t p, double* out) {
    for (std::size_t j = 0; j < nb; ++j) {
        const double* bj = b + j * p;
        float64x2_t acc = vdupq_n_f64(0.0);
        std::size_t k = 0;
        for (; k + 2 <= p; k += 2)
            acc = vaddq_f64(acc, vabsq_f64(vsubq_f64(vld1q_f64(a + k), vld1q_f64(bj + k))));
        double s = vaddvq_f64(acc);
        for (; k < p; ++k) s += std::fabs(a[k] - bj[k]);
        out[j] = s;
    }
}

void l1dist_many1_neon(double a0, const double* b, std::size_t nb, double* out) {
    std::size_t j = 0;
    const float64x2_t av = vdupq_n_f64(a0);
    for (; j + 2 <= nb; j += 2) vst1q_f64(out + j, vabsq_f64(vsubq_f64(av, vld1q_f64(b + j))));
    for (; j < nb; ++j) out[j] = std::fabs(a0 - b[j]);
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot2_neon(const double* a, const double* b, const double* c, const double* d, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vfmaq_f64(acc, vld1q_f64(c + i), vld1q_f64(d + i));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i] + c[i] * d[i];
    return s;
}

double sum_neon(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(a + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i];
    return s;
}

void add_inplace_neon(double* acc, const double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
    for (; i < n; ++i) acc[i] += x[i];
}

void axpy_neon(double* acc, double w, const double* x, std::size_t n) {
    const float64x2_t wv = vdupq_n_f64(w);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(acc + i, vfmaq_f64(vld1q_f64(acc + i), wv, vld1q_f64(x + i)));
    for (; i < n; ++i) acc[i] += w * x[i];
}

} // namespace

const Ops neon_ops = {
    "neon",
    sqdist_many_neon,
    sqdist_many1_neon,
    l1dist_many_neon,
    l1dist_many1_neon,
    dot_neon,
    dot2_neon,
    sum_neon,
    add_inplace_neon,
    axpy_neon,
};

} // namespace ssn::simd

#endif // aarch64
