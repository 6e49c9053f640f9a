#include <atomic>

#include "ckrgap/kernels.hpp"

namespace ckrgap::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(CKRGAP_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() noexcept {
  static const Isa best = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
  return best;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) noexcept {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

#if defined(CKRGAP_HAVE_AVX2_TU)
#define CKRGAP_DISPATCH(fn, ...) \
  (active_isa() == Isa::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define CKRGAP_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

std::int64_t cut_cost(const std::uint32_t* u, const std::uint32_t* v, const std::int64_t* w,
                      std::size_t m, const std::int32_t* labels) noexcept {
  return CKRGAP_DISPATCH(cut_cost, u, v, w, m, labels);
}

void bound_batch(const ParamBatch& in, double* out) noexcept { CKRGAP_DISPATCH(bound_batch, in, out); }

void limitation_batch(const ParamBatch& in, double* out) noexcept {
  CKRGAP_DISPATCH(limitation_batch, in, out);
}

void beta_batch(const double* c, std::size_t count, double* out) noexcept {
  CKRGAP_DISPATCH(beta_batch, c, count, out);
}

}  // namespace ckrgap::kernels
