#include "trisep/simd/cutscan.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#define TRISEP_X86 1
#include <immintrin.h>
#else
#define TRISEP_X86 0
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define TRISEP_NEON 1
#include <arm_neon.h>
#else
#define TRISEP_NEON 0
#endif

namespace trisep::simd {

std::ptrdiff_t find_separating_cut_scalar(const std::uint64_t* b, std::size_t count,
                                          std::uint64_t k, std::uint64_t s) {
  for (std::size_t i = 0; i < count; ++i) {
    if (((k & ~b[i]) | (s & b[i])) == 0) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

#if TRISEP_X86
__attribute__((target("avx2"))) std::ptrdiff_t find_separating_cut_avx2(
    const std::uint64_t* b, std::size_t count, std::uint64_t k, std::uint64_t s) {
  const __m256i vk = _mm256_set1_epi64x(static_cast<long long>(k));
  const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(s));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // (k & ~b) | (s & b) per lane
    __m256i miss = _mm256_or_si256(_mm256_andnot_si256(vb, vk), _mm256_and_si256(vs, vb));
    __m256i eq = _mm256_cmpeq_epi64(miss, zero);
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(eq));
    if (mask != 0)
      return static_cast<std::ptrdiff_t>(i) + __builtin_ctz(static_cast<unsigned>(mask));
  }
  for (; i < count; ++i)
    if (((k & ~b[i]) | (s & b[i])) == 0) return static_cast<std::ptrdiff_t>(i);
  return -1;
}
#else
std::ptrdiff_t find_separating_cut_avx2(const std::uint64_t* b, std::size_t count,
                                        std::uint64_t k, std::uint64_t s) {
  return find_separating_cut_scalar(b, count, k, s);
}
#endif

#if TRISEP_NEON
std::ptrdiff_t find_separating_cut_neon(const std::uint64_t* b, std::size_t count,
                                        std::uint64_t k, std::uint64_t s) {
  const uint64x2_t vk = vdupq_n_u64(k);
  const uint64x2_t vs = vdupq_n_u64(s);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    uint64x2_t vb = vld1q_u64(b + i);
    uint64x2_t miss = vorrq_u64(vbicq_u64(vk, vb), vandq_u64(vs, vb));
    if (vgetq_lane_u64(miss, 0) == 0) return static_cast<std::ptrdiff_t>(i);
    if (vgetq_lane_u64(miss, 1) == 0) return static_cast<std::ptrdiff_t>(i) + 1;
  }
  for (; i < count; ++i)
    if (((k & ~b[i]) | (s & b[i])) == 0) return static_cast<std::ptrdiff_t>(i);
  return -1;
}
#else
std::ptrdiff_t find_separating_cut_neon(const std::uint64_t* b, std::size_t count,
                                        std::uint64_t k, std::uint64_t s) {
  return find_separating_cut_scalar(b, count, k, s);
}
#endif

namespace {

bool cpu_has_avx2() {
#if TRISEP_X86
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend detect_backend() {
  if (const char* env = std::getenv("TRISEP_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::Avx2;
    if (std::strcmp(env, "neon") == 0 && TRISEP_NEON) return Backend::Neon;
    return Backend::Scalar;
  }
  if (cpu_has_avx2()) return Backend::Avx2;
  if (TRISEP_NEON) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

}  // namespace

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return cpu_has_avx2();
    case Backend::Neon:
      return TRISEP_NEON != 0;
  }
  return false;
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "?";
}

void force_backend(Backend b) {
  if (!backend_supported(b)) throw std::runtime_error("simd backend not supported on this CPU");
  g_backend.store(b, std::memory_order_relaxed);
}

std::ptrdiff_t find_separating_cut(const std::uint64_t* b, std::size_t count,
                                   std::uint64_t k, std::uint64_t s) {
  switch (g_backend.load(std::memory_order_relaxed)) {
    case Backend::Avx2:
      return find_separating_cut_avx2(b, count, k, s);
    case Backend::Neon:
      return find_separating_cut_neon(b, count, k, s);
    default:
      return find_separating_cut_scalar(b, count, k, s);
  }
}

}  // namespace trisep::simd
