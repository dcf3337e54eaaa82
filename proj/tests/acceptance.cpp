// Acceptance gate: one PASS/FAIL line per criterion, with its time limit.
//
//   threepage_acceptance [--seed N] [--data DIR]
//
// Exit status is 0 only when every criterion passes within its limit.

#include <chrono>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "threepage/braid.hpp"
#include "threepage/diagram.hpp"
#include "threepage/invariants.hpp"
#include "threepage/reidemeister.hpp"
#include "threepage/render.hpp"
#include "threepage/search.hpp"
#include "threepage/torus.hpp"

#ifndef THREEPAGE_TEST_DATA
#define THREEPAGE_TEST_DATA "tests/data"
#endif

using namespace threepage;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::uint64_t g_seed = 2024;
std::string g_data = THREEPAGE_TEST_DATA;

const ThreePagePresentation& hopf_fixture() {
  static const ThreePagePresentation p = parse_presentation("n=6; P1:1-3,4-6; P2:2-6,3-5; P3:1-5,2-4");
  return p;
}

InvariantProfile braid_profile(const BraidWord& w) { return profile(braid_closure_diagram(w)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome constructor_tnn() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    const auto p = tnn(n);
    const std::string tag = "tnn(" + std::to_string(n) + ")";
    o.require(validate(p).ok(), tag + " invalid");
    o.require(p.arc_count() == 4 * n - 2, tag + " arc count");
    o.require(p.page_sizes() == std::array<int, 3>{2 * (n - 1), n, n}, tag + " page sizes");
    o.require(equal_up_to_mirror(profile(p), braid_profile(torus_braid(n, n))), tag + " profile");
  }
  o.detail = o.pass ? "n=2..5: 4n-2 arcs, pages (2n-2,n,n), profiles match" : o.detail;
  return o;
}

Outcome constructor_tpq() {
  Outcome o;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
    const auto pres = tpq(p, q);
    const std::string tag = "tpq(" + std::to_string(p) + "," + std::to_string(q) + ")";
    o.require(validate(pres).ok(), tag + " invalid");
    o.require(pres.arc_count() == 2 * p + 2 * q - 2, tag + " arc count");
    o.require(equal_up_to_mirror(profile(pres), braid_profile(torus_braid(p, q))), tag + " profile");
  }
  o.detail = o.pass ? "(2,3),(2,5),(3,4),(3,5): 2p+2q-2 arcs, profiles match" : o.detail;
  return o;
}

Outcome constructor_tight() {
  Outcome o;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
    const auto pres = tpq_tight(p, q);
    const std::string tag = "tight(" + std::to_string(p) + "," + std::to_string(q) + ")";
    o.require(validate(pres).ok(), tag + " invalid");
    o.require(pres.arc_count() == 2 * p + 2 * q - 3, tag + " arc count");
    o.require(pres.page_sizes() == std::array<int, 3>{q - 1, q - 1, 2 * p - 1}, tag + " page sizes");
    o.require(equal_up_to_mirror(profile(pres), braid_profile(torus_braid(p, q))), tag + " profile");
  }
  o.detail = o.pass ? "(2,4),(2,5),(2,6),(3,6): 2p+2q-3 arcs, pages (q-1,q-1,2p-1), profiles match" : o.detail;
  return o;
}

Outcome hopf_index() {
  Outcome o;
  const InvariantProfile hopf = braid_profile(BraidWord(2, {1, 1}));
  const auto found = three_page_index(hopf, 6);
  o.require(found.has_value() && found->n == 6, "index is not 6");
  if (found) o.require(equal_up_to_mirror(profile(found->witness), hopf), "witness profile");
  bool at_five = false;
  for (const auto& e : census(5)) at_five = at_five || equal_up_to_mirror(e.profile, hopf);
  o.require(!at_five, "Hopf profile present at n=5");
  if (o.pass) o.detail = "index 6, witness " + serialize(found->witness) + "; none at n=5";
  return o;
}

Outcome t33_refutation() {
  Outcome o;
  const T33Report r = refute_t33_at_9();
  o.require(r.witnesses == 0, "T(3,3) witness at n=9");
  o.require(r.short_component == r.short_split, "short component without split certificate");
  o.require(r.short_component + r.profile_checked == r.three_component, "examined counts inconsistent");
  const auto t = tnn(3);
  o.require(t.n() == 10 && validate(t).ok(), "tnn(3) is not a 10-point presentation");
  o.require(equal_up_to_mirror(profile(t), braid_profile(torus_braid(3, 3))), "tnn(3) profile");
  std::ostringstream s;
  s << r.three_component << " examined, " << r.short_split << " split-pruned, " << r.profile_checked
    << " profile-checked, " << r.witnesses << " witnesses; tnn(3) witnesses n=10";
  o.detail = o.pass ? s.str() : o.detail + " (" + s.str() + ")";
  return o;
}

Outcome lower_bound_consistency() {
  Outcome o;
  std::size_t nontrivial = 0;
  for (int n = 3; n <= 7; ++n)
    for (const auto& e : census(n)) {
      if (is_unlink_profile(e.profile)) continue;
      ++nontrivial;
      o.require(n >= 6, "non-unlink profile at n=" + std::to_string(n) + ": " + serialize(e.presentation));
    }
  if (o.pass) o.detail = "n<=5 unlink profiles only; " + std::to_string(nontrivial) + " non-unlink entries, all at n>=6";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(g_seed);
  std::vector<ThreePagePresentation> pool;
  for (int n = 6; n <= 9; ++n) {
    SearchConstraints c;
    c.n = n;
    for (auto& p : enumerate(c))
      if (project(p).crossing_count() <= 12) pool.push_back(std::move(p));
  }
  int checked = 0;
  int max_crossings = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& p = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const PlanarDiagram d = project(p);
    max_crossings = std::max(max_crossings, d.crossing_count());
    o.require(bracket_statesum(d) == bracket_skein(d), "mismatch on " + serialize(p));
    ++checked;
  }
  for (int i = 0; i < 100; ++i) {
    const int strands = std::uniform_int_distribution<int>(2, 5)(rng);
    const int length = std::uniform_int_distribution<int>(0, 12)(rng);
    std::vector<int> letters;
    for (int k = 0; k < length; ++k)
      letters.push_back(std::uniform_int_distribution<int>(1, strands - 1)(rng) * (rng() % 2 ? 1 : -1));
    const BraidWord w(strands, letters);
    const PlanarDiagram d = braid_closure_diagram(w);
    max_crossings = std::max(max_crossings, d.crossing_count());
    o.require(bracket_statesum(d) == bracket_skein(d), "mismatch on braid " + format_braid(w));
    ++checked;
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " diagrams (up to " + std::to_string(max_crossings) + " crossings), seed " +
               std::to_string(g_seed);
  return o;
}

Outcome invariance_suite() {
  Outcome o;
  std::mt19937_64 rng(g_seed ^ 0x9e3779b97f4a7c15ULL);
  const std::vector<std::pair<std::string, PlanarDiagram>> bases = {
      {"unknot triangle", project(parse_presentation("n=3; P1:1-2; P2:2-3; P3:1-3"))},
      {"Hopf fixture", project(hopf_fixture())},
      {"trefoil closure", braid_closure_diagram(BraidWord(2, {1, 1, 1}))},
  };
  const LaurentPoly minus_a3 = LaurentPoly::monomial(-1, 3);
  const LaurentPoly minus_a_3 = LaurentPoly::monomial(-1, -3);
  int moves = 0;
  for (const auto& [name, base] : bases) {
    const auto expected = profile(base);
    const LaurentPoly bracket = bracket_skein(base);
    for (int trial = 0; trial < 100; ++trial) {
      const int steps = std::uniform_int_distribution<int>(1, 4)(rng);
      const Perturbation p = random_perturbation(base, rng, steps, 12);
      moves += static_cast<int>(p.moves.size());
      o.require(profile(p.diagram).jones_set == expected.jones_set, name + ": jones changed");
      LaurentPoly factor(1);
      for (int k = 0; k < std::abs(p.r1_balance); ++k) factor *= p.r1_balance > 0 ? minus_a3 : minus_a_3;
      o.require(bracket_skein(p.diagram) == bracket * factor, name + ": bracket factor");
    }
    for (const MoveSite& site : sites(base, Move::R1Insert)) {
      const PlanarDiagram d = reidemeister_perturb(base, site);
      const LaurentPoly f = (site.variant & 2) ? minus_a_3 : minus_a3;
      o.require(bracket_skein(d) == bracket * f, name + ": single R1 factor");
    }
  }
  if (o.pass) o.detail = "300 perturbations (" + std::to_string(moves) + " moves), R1 factor -A^{+-3} exact";
  return o;
}

Outcome braid_bookkeeping() {
  Outcome o;
  for (int p = 2; p <= 7; ++p)
    for (int q = p; q <= 7; ++q)
      o.require(cycle_count(torus_braid(p, q)) == std::gcd(p, q),
                "cycles of (" + std::to_string(p) + "," + std::to_string(q) + ")");
  o.require(verify_factorization(torus_braid(3, 5), torus_factorization_twist_first(3, 5)).passed(),
            "twist-first factorization at (3,5)");
  o.require(verify_factorization(torus_braid(2, 5), torus_factorization_twist_last(2, 5)).passed(),
            "twist-last factorization at (2,5)");
  if (o.pass) o.detail = "gcd cycle counts for 2<=p<=q<=7; factorizations at (3,5) and (2,5) pass all checks";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string first = format_census(census(6));
  const std::string second = format_census(census(6));
  o.require(first == second, "census(6) differs between runs");
  const std::string golden_census = read_file(g_data + "/census6.txt");
  o.require(first == golden_census, "census(6) differs from " + g_data + "/census6.txt");
  const std::string svg = render(hopf_fixture());
  o.require(svg == render(hopf_fixture()), "Hopf render differs between runs");
  o.require(svg == read_file(g_data + "/hopf.svg"), "Hopf render differs from " + g_data + "/hopf.svg");
  if (o.pass) o.detail = "census(6) and Hopf SVG byte-identical across runs and to stored copies";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::stoull(argv[++i]);
    } else if (std::strcmp(argv[i], "--data") == 0 && i + 1 < argc) {
      g_data = argv[++i];
    } else {
      std::cerr << "usage: " << argv[0] << " [--seed N] [--data DIR]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "tnn constructor, n=2..5", 120, constructor_tnn},
      {2, "tpq constructor", 60, constructor_tpq},
      {3, "tight tpq constructor", 60, constructor_tight},
      {4, "Hopf index is 6", 60, hopf_index},
      {5, "no T(3,3) at 9 points, tnn(3) at 10", 600, t33_refutation},
      {6, "census lower-bound consistency, n<=7", 300, lower_bound_consistency},
      {7, "state sum equals skein on 200 diagrams", 120, oracle_equivalence},
      {8, "Reidemeister invariance suite", 60, invariance_suite},
      {9, "braid bookkeeping", 10, braid_bookkeeping},
      {10, "determinism", 60, determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    failed += !o.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_seconds);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << timing << ") " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
