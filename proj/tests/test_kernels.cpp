#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "ckrgap/kernels.hpp"

using namespace ckrgap::kernels;

namespace {

struct Points {
  std::vector<double> l1, l2, l3, l4, c;
  ParamBatch batch() const { return {l1.data(), l2.data(), l3.data(), l4.data(), c.data(), c.size()}; }
};

Points random_points(std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0), uc(1e-3, 0.499);
  Points p;
  for (std::size_t i = 0; i < count; ++i) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng), s = a + b + c + d;
    p.l1.push_back(a / s);
    p.l2.push_back(b / s);
    p.l3.push_back(c / s);
    p.l4.push_back(d / s);
    p.c.push_back(i % 7 == 0 ? 1.0 / 9.0 : uc(rng));
  }
  return p;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar reference values") {
  // one point: the reported parameters
  double l1 = 0.751652, l2 = 0.147852, l3 = 0.000275, l4 = 0.100221, c = 0.074125, out = 0;
  ParamBatch one{&l1, &l2, &l3, &l4, &c, 1};
  scalar::bound_batch(one, &out);
  CHECK(out == doctest::Approx(1.2001597).epsilon(1e-7));
  scalar::limitation_batch(one, &out);
  CHECK(out == doctest::Approx(1.2001597).epsilon(1e-6));
  double z = 0;
  scalar::beta_batch(&z, 1, &out);
  CHECK(out == doctest::Approx(1.2));

  std::vector<std::uint32_t> u{0, 1, 2, 0};
  std::vector<std::uint32_t> v{1, 2, 3, 3};
  std::vector<std::int64_t> w{5, 7, 11, 13};
  std::vector<std::int32_t> labels{1, 1, 2, 2};
  CHECK(scalar::cut_cost(u.data(), v.data(), w.data(), u.size(), labels.data()) == 7 + 13);
}

TEST_CASE("AVX2 variants agree bit for bit with the scalar reference") {
  if (detected_isa() != Isa::Avx2) {
    MESSAGE("AVX2 not available on this machine; equivalence not exercised");
    return;
  }
  for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 17u, 1000u, 4099u}) {
    CAPTURE(count);
    Points p = random_points(count, 31 + count);
    std::vector<double> a(count), b(count);
    scalar::bound_batch(p.batch(), a.data());
    avx2::bound_batch(p.batch(), b.data());
    CHECK(same_bits(a, b));
    scalar::limitation_batch(p.batch(), a.data());
    avx2::limitation_batch(p.batch(), b.data());
    CHECK(same_bits(a, b));
    scalar::beta_batch(p.c.data(), count, a.data());
    avx2::beta_batch(p.c.data(), count, b.data());
    CHECK(same_bits(a, b));
  }
  std::mt19937 rng(5);
  for (std::size_t m : {0u, 1u, 7u, 8u, 9u, 1000u, 4097u}) {
    const std::uint32_t nodes = 300;
    std::vector<std::uint32_t> u(m), v(m);
    std::vector<std::int64_t> w(m);
    std::vector<std::int32_t> labels(nodes);
    for (auto& l : labels) l = static_cast<std::int32_t>(rng() % 5);
    for (std::size_t e = 0; e < m; ++e) {
      u[e] = rng() % nodes;
      v[e] = rng() % nodes;
      w[e] = static_cast<std::int64_t>(rng() % 1000000) << 20;
    }
    CHECK(scalar::cut_cost(u.data(), v.data(), w.data(), m, labels.data()) ==
          avx2::cut_cost(u.data(), v.data(), w.data(), m, labels.data()));
  }
}

TEST_CASE("dispatch selection") {
  Isa before = active_isa();
  CHECK(set_isa(Isa::Scalar));
  CHECK(active_isa() == Isa::Scalar);
  CHECK(std::string(isa_name(Isa::Scalar)) == "scalar");
  if (detected_isa() == Isa::Avx2) {
    CHECK(set_isa(Isa::Avx2));
    CHECK(active_isa() == Isa::Avx2);
  } else {
    CHECK_FALSE(set_isa(Isa::Avx2));
    CHECK(active_isa() == Isa::Scalar);
  }
  Points p = random_points(64, 1);
  std::vector<double> a(64), b(64);
  bound_batch(p.batch(), a.data());
  scalar::bound_batch(p.batch(), b.data());
  CHECK(same_bits(a, b));
  set_isa(before);
}
