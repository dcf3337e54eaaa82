#include <doctest.h>

#include <random>

#include "test_seed.hpp"
#include "threepage/kernels.hpp"
#include "threepage/laurent.hpp"

using namespace threepage;

TEST_CASE("laurent arithmetic") {
  const LaurentPoly a = LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-1, -3);
  CHECK(a.min_exponent() == -3);
  CHECK(a.max_exponent() == 2);
  CHECK(a.coefficient(0) == 0);
  CHECK((a - a).is_zero());
  CHECK(a * LaurentPoly(1) == a);
  CHECK((a * a).to_string() == "A^4 - 2A^-1 + A^-6");
  CHECK(a.mirrored().to_string() == "-A^3 + A^-2");
  CHECK(a.shifted(3).to_string() == "A^5 - 1");
  CHECK(loop_value().to_string() == "-A^2 - A^-2");
  CHECK(loop_value().pow(2).to_string() == "A^4 + 2 + A^-4");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::monomial(1, 1).to_string() == "A");

  LaurentPoly b = a;
  b.add_scaled(b, 2, 1);
  CHECK(b == a + a.shifted(1) * LaurentPoly(2));
}

TEST_CASE("laurent order is total and consistent") {
  const LaurentPoly x = LaurentPoly::monomial(1, 4);
  const LaurentPoly y = LaurentPoly::monomial(1, 2);
  CHECK((x <=> y) != std::strong_ordering::equal);
  CHECK(((x < y) != (y < x)));
  CHECK((x <=> x) == std::strong_ordering::equal);
}

TEST_CASE("avx2 kernels match the scalar reference") {
  const kernels::KernelSet* simd = kernels::avx2_kernels();
  if (simd == nullptr || !kernels::cpu_has_avx2()) {
    MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
    return;
  }
  const kernels::KernelSet& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(test_seed());
  std::uniform_int_distribution<std::int64_t> coeff(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 67)(rng);
    std::vector<std::int64_t> src(n), dst(n);
    for (auto& v : src) v = coeff(rng);
    for (auto& v : dst) v = coeff(rng);
    const std::int64_t k = coeff(rng) % 100'000;
    auto d1 = dst, d2 = dst;
    ref.axpy(d1.data(), src.data(), n, k);
    simd->axpy(d2.data(), src.data(), n, k);
    CHECK(d1 == d2);
    d1 = dst;
    d2 = dst;
    ref.add(d1.data(), src.data(), n);
    simd->add(d2.data(), src.data(), n);
    CHECK(d1 == d2);
    ref.sub(d1.data(), src.data(), n);
    simd->sub(d2.data(), src.data(), n);
    CHECK(d1 == d2);
    std::vector<std::int64_t> z(n, 0);
    if (n > 0) z[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = trial % 3 ? 1 : 0;
    CHECK(ref.first_nonzero(z.data(), n) == simd->first_nonzero(z.data(), n));
  }

  // Whole-polynomial products agree under both kernel sets.
  const kernels::KernelSet& before = kernels::active();
  std::uniform_int_distribution<int> small(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<int, std::int64_t>> ta, tb;
    for (int e = -20; e <= 20; e += 2) {
      ta.emplace_back(e, small(rng));
      tb.emplace_back(e + 1, small(rng));
    }
    const auto a = LaurentPoly::from_terms(ta);
    const auto b = LaurentPoly::from_terms(tb);
    kernels::set_active(ref);
    const LaurentPoly p1 = a * b + a.pow(3);
    kernels::set_active(*simd);
    const LaurentPoly p2 = a * b + a.pow(3);
    CHECK(p1 == p2);
  }
  kernels::set_active(before);
}
