#include <immintrin.h>

#include "ckrgap/kernels.hpp"

// Each loop mirrors the scalar reference operation for operation; the tail
// is handed to the scalar code so results match exactly.

namespace ckrgap::kernels::avx2 {

std::int64_t cut_cost(const std::uint32_t* u, const std::uint32_t* v, const std::int64_t* w,
                      std::size_t m, const std::int32_t* labels) noexcept {
  __m256i acc = _mm256_setzero_si256();
  std::size_t e = 0;
  for (; e + 4 <= m; e += 4) {
    const __m128i iu = _mm_loadu_si128(reinterpret_cast<const __m128i*>(u + e));
    const __m128i iv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + e));
    const __m128i lu = _mm_i32gather_epi32(labels, iu, 4);
    const __m128i lv = _mm_i32gather_epi32(labels, iv, 4);
    const __m256i same = _mm256_cvtepi32_epi64(_mm_cmpeq_epi32(lu, lv));
    const __m256i we = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + e));
    acc = _mm256_add_epi64(acc, _mm256_andnot_si256(same, we));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3] + scalar::cut_cost(u + e, v + e, w + e, m - e, labels);
}

void bound_batch(const ParamBatch& in, double* out) noexcept {
  const __m256d k12 = _mm256_set1_pd(1.2), k02 = _mm256_set1_pd(0.2), k15 = _mm256_set1_pd(1.5);
  const __m256d k2 = _mm256_set1_pd(2.0), k3 = _mm256_set1_pd(3.0), k9 = _mm256_set1_pd(9.0);
  std::size_t p = 0;
  for (; p + 4 <= in.count; p += 4) {
    const __m256d l1 = _mm256_loadu_pd(in.l1 + p), l2 = _mm256_loadu_pd(in.l2 + p);
    const __m256d l3 = _mm256_loadu_pd(in.l3 + p), l4 = _mm256_loadu_pd(in.l4 + p);
    const __m256d c = _mm256_loadu_pd(in.c + p);
    const __m256d c2 = _mm256_mul_pd(c, c);
    const __m256d base = _mm256_mul_pd(k12, l1);
    const __m256d term_i = _mm256_add_pd(
        _mm256_add_pd(l2, base), _mm256_min_pd(_mm256_mul_pd(k02, l1), _mm256_mul_pd(k15, l4)));
    const __m256d red = _mm256_div_pd(_mm256_mul_pd(k2, l3), _mm256_mul_pd(k9, c));
    const __m256d a = _mm256_mul_pd(_mm256_mul_pd(k02, c2), l1);
    const __m256d b = _mm256_mul_pd(_mm256_mul_pd(k15, c2), l4);
    const __m256d inner = _mm256_min_pd(red, _mm256_min_pd(a, b));
    const __m256d term_ii = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(k2, l2), base), _mm256_mul_pd(k3, inner));
    _mm256_storeu_pd(out + p, _mm256_min_pd(term_i, term_ii));
  }
  ParamBatch tail{in.l1 + p, in.l2 + p, in.l3 + p, in.l4 + p, in.c + p, in.count - p};
  scalar::bound_batch(tail, out + p);
}

void limitation_batch(const ParamBatch& in, double* out) noexcept {
  const __m256d k12 = _mm256_set1_pd(1.2), k15 = _mm256_set1_pd(1.5), k2 = _mm256_set1_pd(2.0);
  const __m256d k6 = _mm256_set1_pd(6.0), k9 = _mm256_set1_pd(9.0), k45 = _mm256_set1_pd(4.5);
  const __m256d third = _mm256_set1_pd(1.0 / 9.0);
  const __m256d inf = _mm256_set1_pd(__builtin_inf());
  std::size_t p = 0;
  for (; p + 4 <= in.count; p += 4) {
    const __m256d l1 = _mm256_loadu_pd(in.l1 + p), l2 = _mm256_loadu_pd(in.l2 + p);
    const __m256d l3 = _mm256_loadu_pd(in.l3 + p), l4 = _mm256_loadu_pd(in.l4 + p);
    const __m256d c = _mm256_loadu_pd(in.c + p);
    const __m256d base = _mm256_mul_pd(k12, l1);
    const __m256d ext = _mm256_add_pd(_mm256_add_pd(base, l2), _mm256_mul_pd(k15, l4));
    const __m256d two_l2 = _mm256_add_pd(base, _mm256_mul_pd(k2, l2));
    const __m256d prime = _mm256_add_pd(two_l2, _mm256_div_pd(_mm256_mul_pd(k6, l3), _mm256_mul_pd(k9, c)));
    const __m256d caps_val = _mm256_add_pd(two_l2, _mm256_mul_pd(_mm256_mul_pd(k45, _mm256_mul_pd(c, c)), l4));
    const __m256d small = _mm256_cmp_pd(c, third, _CMP_LT_OQ);
    const __m256d caps = _mm256_blendv_pd(inf, caps_val, small);
    _mm256_storeu_pd(out + p, _mm256_min_pd(ext, _mm256_min_pd(prime, caps)));
  }
  ParamBatch tail{in.l1 + p, in.l2 + p, in.l3 + p, in.l4 + p, in.c + p, in.count - p};
  scalar::limitation_batch(tail, out + p);
}

void beta_batch(const double* c, std::size_t count, double* out) noexcept {
  const __m256d k3 = _mm256_set1_pd(3.0), k45 = _mm256_set1_pd(4.5);
  const __m256d k25 = _mm256_set1_pd(2.5), k675 = _mm256_set1_pd(6.75);
  std::size_t p = 0;
  for (; p + 4 <= count; p += 4) {
    const __m256d x = _mm256_loadu_pd(c + p);
    const __m256d x2 = _mm256_mul_pd(x, x);
    const __m256d q = _mm256_mul_pd(k45, x2);
    const __m256d num = _mm256_sub_pd(k3, q);
    const __m256d den = _mm256_add_pd(_mm256_sub_pd(k25, q), _mm256_mul_pd(k675, _mm256_mul_pd(x2, x)));
    _mm256_storeu_pd(out + p, _mm256_div_pd(num, den));
  }
  scalar::beta_batch(c + p, count - p, out + p);
}

}  // namespace ckrgap::kernels::avx2
