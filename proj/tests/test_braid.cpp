#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "threepage/braid.hpp"

using namespace threepage;

TEST_CASE("torus braid words") {
  CHECK(torus_braid(2, 2) == BraidWord(2, {1, 1}));
  CHECK(torus_braid(3, 3).length() == 6);
  CHECK(torus_braid_small(2, 3) == BraidWord(2, {1, 1, 1}));
  CHECK(torus_braid_small(3, 4).length() == 8);
  CHECK(format_braid(torus_braid(2, 3)) == "s1 s2 s1 s2");
  CHECK(parse_braid("s1 -s2  S1", 3) == BraidWord(3, {1, -2, 1}));
  CHECK_THROWS(parse_braid("s3", 3));
  CHECK_THROWS(parse_braid("x1", 3));
}

TEST_CASE("permutations and cycle counts") {
  CHECK(cycle_count(BraidWord(4, {})) == 4);
  CHECK(cycle_count(BraidWord(2, {1})) == 1);
  for (int p = 2; p <= 7; ++p)
    for (int q = p; q <= 7; ++q) {
      CHECK(cycle_count(torus_braid(p, q)) == std::gcd(p, q));
      CHECK(cycle_count(torus_braid_small(p, q)) == std::gcd(p, q));
    }
}

TEST_CASE("factorization words are equal braids under the Artin action") {
  for (int p = 2; p <= 4; ++p)
    for (int q = p + 1; q <= 8; ++q) {
      CHECK(oracle::artin_images(torus_braid(p, q)) == oracle::artin_images(torus_factorization_twist_first(p, q)));
      CHECK(oracle::artin_images(torus_braid_small(p, q)) == oracle::artin_images(torus_factorization_small(p, q)));
      if (q >= 2 * p)
        CHECK(oracle::artin_images(torus_braid(p, q)) == oracle::artin_images(torus_factorization_twist_last(p, q)));
    }
  // The action separates braids with equal permutations and exponent sums.
  CHECK(oracle::artin_images(BraidWord(3, {1, 2})) != oracle::artin_images(BraidWord(3, {2, 1})));
}

TEST_CASE("verify_factorization") {
  CHECK(verify_factorization(torus_braid(3, 5), torus_factorization_twist_first(3, 5)).passed());
  CHECK(verify_factorization(torus_braid(2, 5), torus_factorization_twist_last(2, 5)).passed());
  const auto r = verify_factorization(BraidWord(2, {1}), BraidWord(2, {-1}));
  CHECK(r.same_permutation);
  CHECK_FALSE(r.same_exponent_sum);
  CHECK_FALSE(r.passed());
  // A final twist over one strand too many is a different braid.
  BraidWord longer(5, {});
  for (int k = 0; k < 3; ++k) longer = longer * generator_run(5, 2 + k, 1 + k);
  longer = longer * power(generator_run(5, 2, 4), 2);
  CHECK_FALSE(verify_factorization(torus_braid(2, 5), longer).passed());
}
