#if defined(__aarch64__)
#include <arm_neon.h>

#include <cstring>

#include "nsg/simd/kernels.hpp"

namespace nsg::simd {

void remove_generator_neon(const std::uint8_t* parent, std::uint8_t* child, int x) {
  std::memcpy(child, parent, static_cast<std::size_t>(x));
  const uint8x16_t one = vdupq_n_u8(1);
  for (int y = x; y < kDecSize; y += 16) {
    const uint8x16_t cur = vld1q_u8(parent + y);
    const uint8x16_t step = vminq_u8(vld1q_u8(parent + y - x), one);
    vst1q_u8(child + y, vsubq_u8(cur, step));
  }
  std::memset(child + kDecSize, 0, kDecStride - kDecSize);
}

int collect_generators_neon(const std::uint8_t* dec, int from, int to, int* out) {
  int n = 0;
  const uint8x16_t one = vdupq_n_u8(1);
  alignas(16) std::uint8_t hits[16];
  for (int base = from; base <= to; base += 16) {
    vst1q_u8(hits, vceqq_u8(vld1q_u8(dec + base), one));
    for (int i = 0; i < 16 && base + i <= to; ++i) {
      if (hits[i]) out[n++] = base + i;
    }
  }
  return n;
}

}  // namespace nsg::simd
#endif
