#include <immintrin.h>

#include <cstring>

#include "nsg/simd/kernels.hpp"

// Compiled with -mavx2; only reached after a runtime CPU check.
namespace nsg::simd {

void remove_generator_avx2(const std::uint8_t* parent, std::uint8_t* child, int x) {
  std::memcpy(child, parent, static_cast<std::size_t>(x));
  const __m256i one = _mm256_set1_epi8(1);
  // Blocks may run past kDecSize into the padding; those bytes are cleared below.
  for (int y = x; y < kDecSize; y += 32) {
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(parent + y));
    const __m256i low = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(parent + y - x));
    const __m256i step = _mm256_min_epu8(low, one);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(child + y), _mm256_sub_epi8(cur, step));
  }
  std::memset(child + kDecSize, 0, kDecStride - kDecSize);
}

int collect_generators_avx2(const std::uint8_t* dec, int from, int to, int* out) {
  int n = 0;
  const __m256i one = _mm256_set1_epi8(1);
  for (int base = from; base <= to; base += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dec + base));
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, one)));
    const int span = to - base + 1;
    if (span < 32) mask &= (std::uint32_t{1} << span) - 1;
    while (mask) {
      out[n++] = base + __builtin_ctz(mask);
      mask &= mask - 1;
    }
  }
  return n;
}

}  // namespace nsg::simd
