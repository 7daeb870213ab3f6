#include <cstring>

#include "nsg/simd/kernels.hpp"

namespace nsg::simd {

void remove_generator_scalar(const std::uint8_t* parent, std::uint8_t* child, int x) {
  std::memcpy(child, parent, static_cast<std::size_t>(x));
  for (int y = x; y < kDecSize; ++y) {
    child[y] = static_cast<std::uint8_t>(parent[y] - (parent[y - x] != 0 ? 1 : 0));
  }
  std::memset(child + kDecSize, 0, kDecStride - kDecSize);
}

int collect_generators_scalar(const std::uint8_t* dec, int from, int to, int* out) {
  int n = 0;
  for (int y = from; y <= to; ++y) {
    if (dec[y] == 1) out[n++] = y;
  }
  return n;
}

}  // namespace nsg::simd
