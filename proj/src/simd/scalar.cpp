#include <cmath>

#include "ssn/simd/kernels.hpp"

namespace ssn::simd {

namespace {

void sqdist_many_scalar(const double* a, const double* b, std::size_t nb, std::size_t p, double* out) {
    for (std::size_t j = 0; j < nb; ++j) {
        const double* bj = b + j * p;
        double acc = 0.0;
        for (std::size_t k = 0; k < p; ++k) {
            const double d = a[k] - bj[k];
            acc += d * d;
        }
        out[j] = acc;
    }
}

void sqdist_many1_scalar(double a0, const double* b, std::size_t nb, double* out) {
    for (std::size_t j = 0; j < nb; ++j) {
        const double d = a0 - b[j];
        out[j] = d * d;
    }
}

void l1dist_many_scalar(const double* a, const double* b, std::size_t nb, std::size_t p, double* out) {
    for (std::size_t j = 0; j < nb; ++j) {
        const double* bj = b + j * p;
        double acc = 0.0;
        for (std::size_t k = 0; k < p; ++k) acc += std::fabs(a[k] - bj[k]);
        out[j] = acc;
    }
}

void l1dist_many1_scalar(double a0, const double* b, std::size_t nb, double* out) {
    for (std::size_t j = 0; j < nb; ++j) out[j] = std::fabs(a0 - b[j]);
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double dot2_scalar(const double* a, const double* b, const double* c, const double* d, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i] + c[i] * d[i];
    return acc;
}

double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

void add_inplace_scalar(double* acc, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void axpy_scalar(double* acc, double w, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += w * x[i];
}

} // namespace

const Ops scalar_ops = {
    "scalar",
    sqdist_many_scalar,
    sqdist_many1_scalar,
    l1dist_many_scalar,
    l1dist_many1_scalar,
    dot_scalar,
    dot2_scalar,
    sum_scalar,
    add_inplace_scalar,
    axpy_scalar,
};

} // namespace ssn::simd
