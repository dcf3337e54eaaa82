#pragma once
// Kauffman bracket (state sum and frontier skein), Jones polynomial in A and
// orientation-free identification profiles.
//
// Normalization: <unknot> = 1, loop value delta = -A^2 - A^-2. At a crossing
// X[i,j,k,l] the A-smoothing joins (i,j),(k,l) and the B-smoothing joins
// (i,l),(j,k). With this choice a positive kink contributes -A^3.

#include <stdexcept>
#include <string>
#include <vector>

#include "threepage/diagram.hpp"
#include "threepage/laurent.hpp"
#include "threepage/presentation.hpp"

namespace threepage {

inline constexpr int kStateSumCrossingLimit = 24;
inline constexpr int kSkeinCrossingLimit = 96;

class CrossingLimitExceeded : public std::runtime_error {
 public:
  CrossingLimitExceeded(int crossings, int limit);
};

/// Sum over all 2^c smoothing states. threads = 0 picks hardware concurrency.
LaurentPoly bracket_statesum(const PlanarDiagram& d, int crossing_limit = kStateSumCrossingLimit,
                             unsigned threads = 0);

/// Resolves crossings one at a time in frontier order, merging partial states
/// that induce the same pairing of open edges.
LaurentPoly bracket_skein(const PlanarDiagram& d, int crossing_limit = kSkeinCrossingLimit);

/// (-A^3)^(-writhe) <d>, computed with the skein bracket.
LaurentPoly jones(const PlanarDiagram& d, const Orientation& o);
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

struct InvariantProfile {
  int components = 0;
  std::vector<int> abs_linking;          // sorted |lk(i,j)| over pairs i < j
  std::vector<LaurentPoly> jones_set;    // sorted, distinct

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
  friend auto operator<=>(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile profile(const PlanarDiagram& d);
InvariantProfile profile(const ThreePagePresentation& p);

/// Applies A -> A^{-1} to every Jones polynomial.
InvariantProfile mirror(const InvariantProfile& p);
bool equal_up_to_mirror(const InvariantProfile& a, const InvariantProfile& b);

/// Profile of the k-component unlink: no linking, Jones delta^(k-1).
InvariantProfile unlink_profile(int components);
bool is_unlink_profile(const InvariantProfile& p);

/// `components=<k> | lk={...} | jones={p1; p2}`
std::string to_string(const InvariantProfile& p);
/// `{p1; p2}` with polynomials in the order stored.
std::string format_jones_set(const std::vector<LaurentPoly>& set);

/// Jones polynomial in t = A^-4. Exponents of t are integers for odd
/// component counts and half-integers for even ones; the latter print as t^(m/2).
std::string format_jones_t(const LaurentPoly& jones_in_a, int components);

}  // namespace threepage
