#include <cstdlib>
#include <cstring>

#include "hgc/kernels.hpp"

namespace hgc::kernels {
namespace {

constexpr KernelTable kScalar{Isa::kScalar, "scalar", &scalar::classify, &scalar::popcount};

#if defined(HGC_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::kAvx2, "avx2", &avx2::classify, &avx2::popcount};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
}
#endif

const KernelTable& pick() {
  const char* forced = std::getenv("HGC_ISA");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return kScalar;
  if (const KernelTable* best = for_isa(Isa::kAvx2)) return *best;
  return kScalar;
}

}  // namespace

const KernelTable* for_isa(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &kScalar;
    case Isa::kAvx2:
#if defined(HGC_HAVE_AVX2)
      return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& table = pick();
  return table;
}

}  // namespace hgc::kernels
