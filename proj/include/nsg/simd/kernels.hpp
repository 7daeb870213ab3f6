#pragma once

#include <cstdint>
#include <string_view>

// Byte kernels for the decomposition-number representation used by the
// semigroup tree walk. dec[y] counts the pairs {a, b} of members with
// a + b = y, so y is a member iff dec[y] > 0 and a minimal generator iff
// dec[y] == 1. Removing the generator x from S turns dec into
//   child[y] = parent[y] - (parent[y - x] > 0)   for y >= x
// and leaves lower positions untouched.
namespace nsg::simd {

// Positions tracked exactly; enough for genus <= 40 (generators <= 3g).
inline constexpr int kDecSize = 128;
// Storage per node, padded so vector stores past kDecSize stay in bounds.
inline constexpr int kDecStride = 160;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

using RemoveGeneratorFn = void (*)(const std::uint8_t* parent, std::uint8_t* child, int x);
// Writes the positions y in [from, to] with dec[y] == 1 to out, ascending, and
// returns how many there were. `to` must be below kDecSize.
using CollectGeneratorsFn = int (*)(const std::uint8_t* dec, int from, int to, int* out);

struct KernelSet {
  Isa isa;
  RemoveGeneratorFn remove_generator;
  CollectGeneratorsFn collect_generators;
};

void remove_generator_scalar(const std::uint8_t* parent, std::uint8_t* child, int x);
int collect_generators_scalar(const std::uint8_t* dec, int from, int to, int* out);

#if defined(__x86_64__) || defined(__i386__)
void remove_generator_avx2(const std::uint8_t* parent, std::uint8_t* child, int x);
int collect_generators_avx2(const std::uint8_t* dec, int from, int to, int* out);
#endif

#if defined(__aarch64__)
void remove_generator_neon(const std::uint8_t* parent, std::uint8_t* child, int x);
int collect_generators_neon(const std::uint8_t* dec, int from, int to, int* out);
#endif

bool isa_supported(Isa isa) noexcept;

/// Kernels for the given ISA. Throws BadInput if the CPU lacks it.
KernelSet kernels_for(Isa isa);

/// The widest supported ISA, unless NSG_ISA=scalar|avx2|neon overrides it.
KernelSet best_kernels();

}  // namespace nsg::simd
