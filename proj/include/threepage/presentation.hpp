#pragma once
// Three-page presentations: binding points 1..n on an axis, three pages of
// pairwise disjoint arcs, validation, cycle decomposition, symmetry
// canonicalization and the native text / JSON formats.

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace threepage {

inline constexpr int kPages = 3;

/// An arc joining binding points lo < hi on one page.
struct Arc {
  int lo = 0;
  int hi = 0;

  Arc() = default;
  Arc(int a, int b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  bool contains(int x) const { return lo < x && x < hi; }
  bool has_endpoint(int x) const { return lo == x || hi == x; }
  int other(int x) const { return x == lo ? hi : lo; }

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// True when the endpoints of a and b interleave (a.lo < b.lo < a.hi < b.hi or the mirror case).
inline bool interleaves(const Arc& a, const Arc& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

using Page = std::vector<Arc>;

/// n binding points plus three pages in cyclic order around the axis.
/// Arcs inside each page are kept sorted; no validity rule is enforced here
/// (see validate()), so arbitrary candidate data can be represented.
class ThreePagePresentation {
 public:
  ThreePagePresentation() = default;
  ThreePagePresentation(int n, std::array<Page, kPages> pages);

  int n() const { return n_; }
  const Page& page(int k) const { return pages_[k]; }
  const std::array<Page, kPages>& pages() const { return pages_; }
  int arc_count() const;
  std::array<int, kPages> page_sizes() const;

  friend auto operator<=>(const ThreePagePresentation&, const ThreePagePresentation&) = default;
  friend bool operator==(const ThreePagePresentation&, const ThreePagePresentation&) = default;

 private:
  int n_ = 0;
  std::array<Page, kPages> pages_;
};

enum class ViolationKind {
  IndexOutOfRange,
  EndpointShared,
  NonCrossingViolated,
  DegreeViolated,
  PageEmpty,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int page = -1;  // 0-based page index, -1 when not page specific
  int point = 0;  // offending binding point for DegreeViolated / EndpointShared
  std::vector<Arc> arcs;

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string describe() const;
};

/// Total over arbitrary data; never throws.
ValidationReport validate(const ThreePagePresentation& p);

/// Thrown by operations whose precondition is a valid presentation.
class InvalidPresentation : public std::invalid_argument {
 public:
  explicit InvalidPresentation(const ValidationReport& report);
};

void require_valid(const ThreePagePresentation& p);

struct ArcRef {
  int page = 0;
  Arc arc;

  friend auto operator<=>(const ArcRef&, const ArcRef&) = default;
};

/// One component: points[i] and points[i+1] (cyclically) are joined by arcs[i].
struct Cycle {
  std::vector<int> points;
  std::vector<ArcRef> arcs;
};

struct ComponentDecomposition {
  std::vector<Cycle> cycles;

  std::size_t size() const { return cycles.size(); }
};

/// Cycles of the degree-2 graph on binding points. Each cycle starts at its
/// smallest point and leaves it along the arc on the lowest-numbered page.
ComponentDecomposition components(const ThreePagePresentation& p);

/// Two arcs on different pages with the same endpoints, if any: a certificate
/// that the presented link is splittable.
std::optional<std::pair<ArcRef, ArcRef>> detect_split_pair(const ThreePagePresentation& p);

/// Rigid motions of the open book.
ThreePagePresentation rotate_pages(const ThreePagePresentation& p);  // page k -> page k+1
ThreePagePresentation reverse_points(const ThreePagePresentation& p);  // i -> n+1-i, page order reversed

/// The six images of p under the group generated by the two motions above.
std::array<ThreePagePresentation, 6> symmetry_orbit(const ThreePagePresentation& p);

/// Lexicographically smallest member of the symmetry orbit.
ThreePagePresentation canonicalize(const ThreePagePresentation& p);
bool is_canonical(const ThreePagePresentation& p);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Native text form: `n=<int>; P1:<i>-<j>,...; P2:...; P3:...`, whitespace-insensitive.
ThreePagePresentation parse_presentation(std::string_view text);
std::string serialize(const ThreePagePresentation& p);

ThreePagePresentation parse_presentation_json(std::string_view text);
std::string to_json(const ThreePagePresentation& p);

}  // namespace threepage
