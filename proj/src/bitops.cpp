#include "bitops_tables.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace netloc::bitops {

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon})
        if (backend_available(b)) out.push_back(b);
    return out;
}

namespace {

Backend pick_backend() {
    if (const char* env = std::getenv("NETLOC_BITOPS")) {
        Backend want = Backend::Scalar;
        bool known = true;
        if (std::strcmp(env, "scalar") == 0)
            want = Backend::Scalar;
        else if (std::strcmp(env, "avx2") == 0)
            want = Backend::Avx2;
        else if (std::strcmp(env, "neon") == 0)
            want = Backend::Neon;
        else
            known = false;
        if (known && backend_available(want)) return want;
        std::fprintf(stderr, "netloc: NETLOC_BITOPS=%s unavailable, using scalar kernels\n", env);
        return Backend::Scalar;
    }
    if (backend_available(Backend::Avx2)) return Backend::Avx2;
    if (backend_available(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

}  // namespace

Backend active_backend() {
    static const Backend b = pick_backend();
    return b;
}

const Kernels& kernels(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return detail::scalar_kernels;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (backend_available(Backend::Avx2)) return detail::avx2_kernels;
#endif
            break;
        case Backend::Neon:
#if defined(__aarch64__)
            return detail::neon_kernels;
#endif
            break;
    }
    throw std::runtime_error(std::string("bitops backend unavailable: ") + backend_name(b));
}

const Kernels& kernels() { return kernels(active_backend()); }

}  // namespace netloc::bitops
