#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Data-parallel inner loops behind the numeric modules. A scalar reference
// implementation always exists; AVX2 (x86-64) and NEON (aarch64) variants are
// selected at runtime and must agree with the reference to ~1e-12 relative
// (vector reductions reassociate, so agreement is not bitwise).
namespace ssn::simd {

struct Ops {
    const char* name;

    // out[j] = sum_k (a[k] - b[j*p + k])^2 for j = 0..nb-1
    void (*sqdist_many)(const double* a, const double* b, std::size_t nb, std::size_t p, double* out);
    // univariate fast path: out[j] = (a0 - b[j])^2
    void (*sqdist_many1)(double a0, const double* b, std::size_t nb, double* out);
    // out[j] = sum_k |a[k] - b[j*p + k]|
    void (*l1dist_many)(const double* a, const double* b, std::size_t nb, std::size_t p, double* out);
    void (*l1dist_many1)(double a0, const double* b, std::size_t nb, double* out);

    double (*dot)(const double* a, const double* b, std::size_t n);
    // sum_i a[i]*b[i] + c[i]*d[i]  (HSIC pair-product reduction)
    double (*dot2)(const double* a, const double* b, const double* c, const double* d, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    void (*add_inplace)(double* acc, const double* x, std::size_t n);
    // acc[i] += w * x[i]
    void (*axpy)(double* acc, double w, const double* x, std::size_t n);
};

extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
bool avx2_supported();
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

// Active backend. First call honors SSN_SIMD={auto,scalar,avx2,neon}.
const Ops& ops();

// Force a backend by name ("auto" re-detects). Throws on unknown/unsupported.
void force_backend(const std::string& name);

std::vector<std::string> available_backends();

} // namespace ssn::simd
