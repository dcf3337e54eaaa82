#include <doctest.h>

#include "threepage/presentation.hpp"

using namespace threepage;

namespace {
const char* kHopf = "n=6; P1:1-3,4-6; P2:2-6,3-5; P3:1-5,2-4";
const char* kTriangle = "n=3; P1:1-2; P2:2-3; P3:1-3";
}  // namespace

TEST_CASE("validation accepts the hopf fixture and the triangle") {
  CHECK(validate(parse_presentation(kHopf)).ok());
  CHECK(validate(parse_presentation(kTriangle)).ok());
}

TEST_CASE("validation reports each violation kind") {
  SUBCASE("interleaving arcs on one page") {
    ThreePagePresentation p(4, {Page{{1, 3}, {2, 4}}, Page{{1, 2}, {3, 4}}, Page{{1, 4}, {2, 3}}});
    const auto r = validate(p);
    CHECK(r.has(ViolationKind::NonCrossingViolated));
    CHECK(r.violations.front().page == 0);
  }
  SUBCASE("degree and empty page") {
    ThreePagePresentation p(3, {Page{{1, 2}}, Page{{2, 3}}, Page{}});
    const auto r = validate(p);
    CHECK(r.has(ViolationKind::DegreeViolated));
    CHECK(r.has(ViolationKind::PageEmpty));
    bool point_one = false;
    for (const auto& v : r.violations)
      if (v.kind == ViolationKind::DegreeViolated && v.point == 1) point_one = true;
    CHECK(point_one);
  }
  SUBCASE("shared endpoint within a page") {
    ThreePagePresentation p(4, {Page{{1, 2}, {2, 3}}, Page{{3, 4}}, Page{{1, 4}}});
    CHECK(validate(p).has(ViolationKind::EndpointShared));
  }
  SUBCASE("index out of range") {
    ThreePagePresentation p(3, {Page{{1, 4}}, Page{{2, 3}}, Page{{1, 3}}});
    CHECK(validate(p).has(ViolationKind::IndexOutOfRange));
  }
  SUBCASE("require_valid throws") {
    CHECK_THROWS_AS(require_valid(ThreePagePresentation(3, {Page{{1, 2}}, Page{{2, 3}}, Page{}})),
                    InvalidPresentation);
  }
}

TEST_CASE("components trace cycles") {
  const auto tri = components(parse_presentation(kTriangle));
  REQUIRE(tri.size() == 1);
  CHECK(tri.cycles[0].arcs.size() == 3);

  const auto hopf = components(parse_presentation(kHopf));
  REQUIRE(hopf.size() == 2);
  CHECK(hopf.cycles[0].points == std::vector<int>{1, 3, 5});
  CHECK(hopf.cycles[1].points == std::vector<int>{2, 6, 4});
  CHECK(hopf.cycles[0].arcs.size() == 3);
  CHECK(hopf.cycles[1].arcs.size() == 3);
}

TEST_CASE("split certificates") {
  ThreePagePresentation unlink(4, {Page{{1, 2}}, Page{{1, 2}, {3, 4}}, Page{{3, 4}}});
  const auto pair = detect_split_pair(unlink);
  REQUIRE(pair.has_value());
  CHECK(pair->first.page == 0);
  CHECK(pair->second.page == 1);
  CHECK(pair->first.arc == Arc(1, 2));
  CHECK_FALSE(detect_split_pair(parse_presentation(kHopf)).has_value());
  CHECK_FALSE(detect_split_pair(parse_presentation(kTriangle)).has_value());
}

TEST_CASE("symmetry group") {
  const auto hopf = parse_presentation(kHopf);
  CHECK(rotate_pages(rotate_pages(rotate_pages(hopf))) == hopf);
  CHECK(reverse_points(reverse_points(hopf)) == hopf);
  CHECK(rotate_pages(hopf).page(1) == hopf.page(0));
  const auto c = canonicalize(hopf);
  CHECK(canonicalize(c) == c);
  CHECK(is_canonical(c));
  CHECK(canonicalize(rotate_pages(hopf)) == c);
  CHECK(canonicalize(reverse_points(hopf)) == c);
  const auto rev = reverse_points(hopf);
  CHECK(rev.page(0) == Page{{2, 6}, {3, 5}});  // from P3 = {1-5, 2-4} under i -> 7 - i
  for (const auto& image : symmetry_orbit(hopf)) CHECK(validate(image).ok());
}

TEST_CASE("native format") {
  const auto hopf = parse_presentation(kHopf);
  CHECK(serialize(hopf) == kHopf);
  CHECK(serialize(parse_presentation("  n = 6 ;P1: 4-6 , 3-1;P2:5-3,6-2; P3:2-4,1-5 ")) == kHopf);
  CHECK(serialize(parse_presentation("n=3; P3:1-3; P1:1-2; P2:2-3")) == kTriangle);
  CHECK_THROWS_AS(parse_presentation("n=3; P1:1-4; P2:2-3; P3:1-3"), ParseError);
  CHECK_THROWS_AS(parse_presentation("n=3; P1:1-2; P1:2-3; P3:1-3"), ParseError);
  CHECK_THROWS_AS(parse_presentation("garbage"), ParseError);
  CHECK_THROWS_AS(parse_presentation("n=3; P1:1-1; P2:2-3; P3:1-3"), ParseError);
  CHECK(serialize(parse_presentation("n=3; P1:; P2:2-3; P3:1-3")) == "n=3; P1:; P2:2-3; P3:1-3");
}

TEST_CASE("json format") {
  const auto hopf = parse_presentation(kHopf);
  CHECK(parse_presentation_json(to_json(hopf)) == hopf);
  CHECK(to_json(parse_presentation(kTriangle)) == R"({"n":3,"pages":[[[1,2]],[[2,3]],[[1,3]]]})");
  CHECK_THROWS_AS(parse_presentation_json("{\"n\":3}"), ParseError);
  CHECK_THROWS_AS(parse_presentation_json("[1,2"), ParseError);
}
