#include "hubsim/kernels/vec_u32.hpp"

#include <atomic>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define HUBSIM_HAVE_AVX2_PATH 1
#include <immintrin.h>
#elif defined(__aarch64__)
#define HUBSIM_HAVE_NEON_PATH 1
#include <arm_neon.h>
#endif

namespace hubsim::kernels {

static std::atomic<bool> g_force_scalar{false};

void set_force_scalar(bool force) {
    g_force_scalar.store(force, std::memory_order_relaxed);
}

void add_wrap_u32_scalar(std::uint32_t* acc, const std::uint32_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        acc[i] += src[i];
    }
}

#if defined(HUBSIM_HAVE_AVX2_PATH)
__attribute__((target("avx2")))
static void add_wrap_u32_avx2(std::uint32_t* acc, const std::uint32_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_add_epi32(a, b));
    }
    for (; i < n; ++i) {
        acc[i] += src[i];
    }
}

static bool avx2_supported() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}
#endif

#if defined(HUBSIM_HAVE_NEON_PATH)
static void add_wrap_u32_neon(std::uint32_t* acc, const std::uint32_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        vst1q_u32(acc + i, vaddq_u32(vld1q_u32(acc + i), vld1q_u32(src + i)));
    }
    for (; i < n; ++i) {
        acc[i] += src[i];
    }
}
#endif

void add_wrap_u32(std::uint32_t* acc, const std::uint32_t* src, std::size_t n) {
    if (!g_force_scalar.load(std::memory_order_relaxed)) {
#if defined(HUBSIM_HAVE_AVX2_PATH)
        if (avx2_supported()) {
            add_wrap_u32_avx2(acc, src, n);
            return;
        }
#elif defined(HUBSIM_HAVE_NEON_PATH)
        add_wrap_u32_neon(acc, src, n);
        return;
#endif
    }
    add_wrap_u32_scalar(acc, src, n);
}

const char* active_impl() {
    if (g_force_scalar.load(std::memory_order_relaxed)) {
        return "scalar";
    }
#if defined(HUBSIM_HAVE_AVX2_PATH)
    if (avx2_supported()) {
        return "avx2";
    }
#elif defined(HUBSIM_HAVE_NEON_PATH)
    return "neon";
#endif
    return "scalar";
}

} // namespace hubsim::kernels
