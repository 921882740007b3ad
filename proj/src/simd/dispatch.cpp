#include <atomic>
#include <cstdlib>

#include "ssn/error.hpp"
#include "ssn/simd/kernels.hpp"

namespace ssn::simd {

namespace {

const Ops* detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) return &avx2_ops;
#endif
#if defined(__aarch64__)
    return &neon_ops;
#endif
    return &scalar_ops;
}

const Ops* resolve(const std::string& name) {
    if (name == "auto") return detect();
    if (name == "scalar") return &scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2") {
        if (!avx2_supported()) fail(Errc::invalid_argument, "avx2 not supported on this CPU");
        return &avx2_ops;
    }
#endif
#if defined(__aarch64__)
    if (name == "neon") return &neon_ops;
#endif
    fail(Errc::invalid_argument, "unknown simd backend '" + name + "'");
}

std::atomic<const Ops*> g_active{nullptr};

} // namespace

const Ops& ops() {
    const Ops* p = g_active.load(std::memory_order_acquire);
    if (!p) {
        const char* env = std::getenv("SSN_SIMD");
        p = resolve(env ? env : "auto");
        g_active.store(p, std::memory_order_release);
    }
    return *p;
}

void force_backend(const std::string& name) {
    g_active.store(resolve(name), std::memory_order_release);
}

std::vector<std::string> available_backends() {
    std::vector<std::string> v{"scalar"};
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) v.push_back("avx2");
#endif
#if defined(__aarch64__)
    v.push_back("neon");
#endif
    return v;
}

} // namespace ssn::simd
