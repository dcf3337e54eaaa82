#pragma once
// Exhaustive enumeration of canonical three-page presentations, exact
// three-page indices of small links and census tables.
//
// Enumeration fixes page 1, then page 2, and completes page 3 on the points
// covered exactly once so far. Work is split by page-1 matching across
// threads; results are merged and sorted, so output order never depends on
// scheduling.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "threepage/invariants.hpp"
#include "threepage/presentation.hpp"

namespace threepage {

inline constexpr int kDefaultMaxPoints = 10;

/// Largest point count accepted by the search (THREEPAGE_MAX_N overrides the default).
int max_points();

class SearchLimitExceeded : public std::invalid_argument {
 public:
  SearchLimitExceeded(int n, int limit);
};

struct SearchConstraints {
  int n = 0;
  std::optional<int> required_components;
  std::optional<int> min_arcs_per_component;
  bool prune_split_pairs = false;
  std::optional<int> min_page_arcs;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Non-crossing partial matchings of points 1..n (including the empty one).
std::vector<std::vector<Arc>> noncrossing_matchings(int n);

/// Every valid presentation satisfying c, one per symmetry orbit, in canonical order.
std::vector<ThreePagePresentation> enumerate(const SearchConstraints& c);

struct IndexResult {
  int n = 0;
  ThreePagePresentation witness;
};

/// Smallest n <= n_max with a presentation whose profile matches target up to
/// mirror. Exhaustive, so nullopt means no presentation with at most n_max
/// points has that profile.
std::optional<IndexResult> three_page_index(const InvariantProfile& target, int n_max, int n_min = 1);

struct CensusEntry {
  ThreePagePresentation presentation;
  InvariantProfile profile;
  int n = 0;
};

/// All canonical presentations on n points with their profiles, grouped by
/// profile; groups in order of their first canonical member.
std::vector<CensusEntry> census(int n);

/// One line per entry: `<native> | components=<k> | jones={...}`.
std::string format_census(const std::vector<CensusEntry>& entries);

struct T33Report {
  std::uint64_t three_component = 0;  // valid 9-point presentations with 3 components
  std::uint64_t short_component = 0;  // of those, with a component of fewer than 3 arcs
  std::uint64_t short_split = 0;      // short ones carrying a split certificate
  std::uint64_t profile_checked = 0;  // 3 + 3 + 3 arcs, profiles computed
  std::uint64_t witnesses = 0;        // profile equal to that of T(3,3) up to mirror
};

/// Examines every 9-point presentation with three components for the T(3,3) profile.
T33Report refute_t33_at_9();

std::string format_report(const T33Report& r);

}  // namespace threepage
