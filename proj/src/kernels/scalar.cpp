#include <algorithm>
#include <limits>

#include "ckrgap/kernels.hpp"

namespace ckrgap::kernels::scalar {

std::int64_t cut_cost(const std::uint32_t* u, const std::uint32_t* v, const std::int64_t* w,
                      std::size_t m, const std::int32_t* labels) noexcept {
  std::int64_t sum = 0;
  for (std::size_t e = 0; e < m; ++e) {
    if (labels[u[e]] != labels[v[e]]) sum += w[e];
  }
  return sum;
}

void bound_batch(const ParamBatch& in, double* out) noexcept {
  for (std::size_t p = 0; p < in.count; ++p) {
    const double l1 = in.l1[p], l2 = in.l2[p], l3 = in.l3[p], l4 = in.l4[p], c = in.c[p];
    const double c2 = c * c;
    const double term_i = l2 + 1.2 * l1 + std::min(0.2 * l1, 1.5 * l4);
    const double inner = std::min(2.0 * l3 / (9.0 * c), std::min(0.2 * c2 * l1, 1.5 * c2 * l4));
    const double term_ii = 2.0 * l2 + 1.2 * l1 + 3.0 * inner;
    out[p] = std::min(term_i, term_ii);
  }
}

void limitation_batch(const ParamBatch& in, double* out) noexcept {
  const double third = 1.0 / 9.0;
  for (std::size_t p = 0; p < in.count; ++p) {
    const double l1 = in.l1[p], l2 = in.l2[p], l3 = in.l3[p], l4 = in.l4[p], c = in.c[p];
    const double base = 1.2 * l1;
    const double ext = base + l2 + 1.5 * l4;
    const double prime = base + 2.0 * l2 + 6.0 * l3 / (9.0 * c);
    const double caps = c < third ? base + 2.0 * l2 + 4.5 * (c * c) * l4 : std::numeric_limits<double>::infinity();
    out[p] = std::min(ext, std::min(prime, caps));
  }
}

void beta_batch(const double* c, std::size_t count, double* out) noexcept {
  for (std::size_t p = 0; p < count; ++p) {
    const double c2 = c[p] * c[p];
    out[p] = (3.0 - 4.5 * c2) / (2.5 - 4.5 * c2 + 6.75 * (c2 * c[p]));
  }
}

}  // namespace ckrgap::kernels::scalar
