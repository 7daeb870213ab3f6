#include <cstdlib>
#include <string>

#include "nsg/error.hpp"
#include "nsg/simd/kernels.hpp"

namespace nsg::simd {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "scalar";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

KernelSet kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    fail(ErrorCode::BadInput, "ISA " + std::string(to_string(isa)) + " is not available");
  }
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::Avx2:
      return {Isa::Avx2, remove_generator_avx2, collect_generators_avx2};
#endif
#if defined(__aarch64__)
    case Isa::Neon:
      return {Isa::Neon, remove_generator_neon, collect_generators_neon};
#endif
    default:
      return {Isa::Scalar, remove_generator_scalar, collect_generators_scalar};
  }
}

KernelSet best_kernels() {
  if (const char* env = std::getenv("NSG_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == to_string(isa)) return kernels_for(isa);
    }
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (isa_supported(isa)) return kernels_for(isa);
  }
  return kernels_for(Isa::Scalar);
}

}  // namespace nsg::simd
