#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "threepage/braid.hpp"
#include "threepage/diagram.hpp"
#include "threepage/invariants.hpp"
#include "threepage/torus.hpp"

using namespace threepage;

namespace {
bool matches_braid(const ThreePagePresentation& pres, int p, int q) {
  return equal_up_to_mirror(profile(pres), profile(braid_closure_diagram(torus_braid(p, q))));
}
}  // namespace

TEST_CASE("tnn") {
  CHECK(tnn(2).arc_count() == 6);
  CHECK(equal_up_to_mirror(profile(tnn(2)), profile(braid_closure_diagram(BraidWord(2, {1, 1})))));
  CHECK(tnn(3).arc_count() == 10);
  CHECK(profile(tnn(3)).abs_linking == std::vector<int>{1, 1, 1});
  CHECK(tnn(4).page_sizes() == std::array<int, 3>{6, 4, 4});
  for (int n = 2; n <= 4; ++n) {
    CHECK(validate(tnn(n)).ok());
    CHECK(static_cast<int>(components(tnn(n)).size()) == n);
    CHECK(matches_braid(tnn(n), n, n));
  }
  CHECK_THROWS(tnn(1));
}

TEST_CASE("tpq") {
  CHECK(tpq(2, 3).arc_count() == 8);
  CHECK(tpq(2, 2) == tnn(2));
  CHECK(tpq(3, 4).arc_count() == 12);
  for (int p = 2; p <= 4; ++p)
    for (int q = p; q <= 6; ++q) {
      const auto pres = tpq(p, q);
      CHECK(validate(pres).ok());
      CHECK(pres.arc_count() == 2 * p + 2 * q - 2);
      CHECK(pres.page_sizes() == std::array<int, 3>{p + q - 2, p, q});
      CHECK(static_cast<int>(components(pres).size()) == std::gcd(p, q));
      CHECK(matches_braid(pres, p, q));
      if (std::gcd(p, q) == 1) {
        const auto v = profile(pres).jones_set.at(0);
        const auto expect = oracle::torus_knot_jones(p, q);
        CHECK((v == expect || v == expect.mirrored()));
      }
    }
  CHECK_THROWS(tpq(3, 2));
}

TEST_CASE("tpq_tight") {
  CHECK(tpq_tight(2, 4).arc_count() == 9);
  CHECK(tpq_tight(2, 4).page_sizes() == std::array<int, 3>{3, 3, 3});
  CHECK(tpq_tight(3, 6).arc_count() == 15);
  CHECK(components(tpq_tight(3, 6)).size() == 3);
  for (int p = 2; p <= 3; ++p)
    for (int q = 2 * p; q <= 2 * p + 3; ++q) {
      const auto pres = tpq_tight(p, q);
      CHECK(validate(pres).ok());
      CHECK(pres.arc_count() == 2 * p + 2 * q - 3);
      CHECK(pres.page_sizes() == std::array<int, 3>{q - 1, q - 1, 2 * p - 1});
      CHECK(matches_braid(pres, p, q));
    }
  CHECK_THROWS(tpq_tight(3, 5));
}

TEST_CASE("bounds") {
  const auto b22 = bounds(2, 2);
  CHECK(b22.arc_index == 4);
  CHECK(b22.bridge_bound == 6);
  CHECK(b22.exact == 6);
  const auto b23 = bounds(2, 3);
  CHECK(b23.arc_index == 5);
  CHECK(b23.bridge_bound == 6);
  CHECK(b23.upper_general == 8);
  CHECK_FALSE(b23.upper_tight.has_value());
  const auto b25 = bounds(2, 5);
  CHECK(b25.upper_tight == 11);
  CHECK(b25.best_upper() == 11);
  for (int p = 2; p <= 7; ++p)
    for (int q = p; q <= 12; ++q) CHECK(bounds(p, q).consistent());
  const auto mirrored = bounds(-3, 2);
  CHECK(mirrored.params.p == 2);
  CHECK(mirrored.params.q == 3);
  CHECK(mirrored.params.mirrored);
  CHECK_THROWS(bounds(1, 5));
}
