#pragma once

#include <cstddef>
#include <cstdint>

// Hot numeric loops with a scalar reference and an AVX2 variant chosen at
// runtime. Both variants are compiled with floating-point contraction off so
// their double results agree bit for bit.

namespace ckrgap::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa) noexcept;
/// Best variant this CPU and build support.
Isa detected_isa() noexcept;
/// Variant used by the dispatching entry points below.
Isa active_isa() noexcept;
/// Forces a variant (tests, benchmarks). Returns false and leaves the choice
/// unchanged if the CPU or the build cannot run it.
bool set_isa(Isa isa) noexcept;

/// Structure-of-arrays batch of (lambda_1..lambda_4, c) parameter points.
struct ParamBatch {
  const double* l1;
  const double* l2;
  const double* l3;
  const double* l4;
  const double* c;
  std::size_t count;
};

/// sum over e of w[e] * [labels[u[e]] != labels[v[e]]].
std::int64_t cut_cost(const std::uint32_t* u, const std::uint32_t* v, const std::int64_t* w,
                      std::size_t m, const std::int32_t* labels) noexcept;

/// Asymptotic two-term lower bound, min(term_i, term_ii), per point.
void bound_batch(const ParamBatch& in, double* out) noexcept;

/// Asymptotic minimum of the three certificate cut costs, per point. The
/// third cut only counts when c < 1/9.
void limitation_batch(const ParamBatch& in, double* out) noexcept;

/// (3 - 4.5c^2) / (2.5 - 4.5c^2 + 6.75c^3), per point.
void beta_batch(const double* c, std::size_t count, double* out) noexcept;

namespace scalar {
std::int64_t cut_cost(const std::uint32_t* u, const std::uint32_t* v, const std::int64_t* w,
                      std::size_t m, const std::int32_t* labels) noexcept;
void bound_batch(const ParamBatch& in, double* out) noexcept;
void limitation_batch(const ParamBatch& in, double* out) noexcept;
void beta_batch(const double* c, std::size_t count, double* out) noexcept;
}  // namespace scalar

namespace avx2 {
std::int64_t cut_cost(const std::uint32_t* u, const std::uint32_t* v, const std::int64_t* w,
                      std::size_t m, const std::int32_t* labels) noexcept;
void bound_batch(const ParamBatch& in, double* out) noexcept;
void limitation_batch(const ParamBatch& in, double* out) noexcept;
void beta_batch(const double* c, std::size_t count, double* out) noexcept;
}  // namespace avx2

}  // namespace ckrgap::kernels
