#include "threepage/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "threepage/torus.hpp"

namespace threepage {

namespace {

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(t, jobs)));
}

// Runs body(i) for i in [0, jobs) on a pool; body must only touch slot i of its output.
void parallel_for(std::size_t jobs, unsigned threads, const std::function<void(std::size_t, unsigned)>& body) {
  const unsigned t = worker_count(threads, jobs);
  std::atomic<std::size_t> next{0};
  auto run = [&](unsigned worker) {
    for (std::size_t i = next++; i < jobs; i = next++) body(i, worker);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < t; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& th : pool) th.join();
}

void matchings_between(int lo, int hi, std::vector<Arc>& current, std::vector<std::vector<Arc>>& out,
                       const std::function<void()>& rest);

// Enumerates non-crossing partial matchings of lo..hi, calling `rest` for each.
void matchings_between(int lo, int hi, std::vector<Arc>& current, std::vector<std::vector<Arc>>& out,
                       const std::function<void()>& rest) {
  if (lo > hi) {
    rest();
    return;
  }
  matchings_between(lo + 1, hi, current, out, rest);
  for (int j = lo + 1; j <= hi; ++j) {
    current.emplace_back(lo, j);
    matchings_between(lo + 1, j - 1, current, out,
                      [&, j] { matchings_between(j + 1, hi, current, out, rest); });
    current.pop_back();
  }
}

// Non-crossing perfect matchings of positions 0..2m-1, as index pairs.
std::vector<std::vector<std::pair<int, int>>> perfect_templates(int m) {
  if (m == 0) return {{}};
  std::vector<std::vector<std::pair<int, int>>> out;
  const int size = 2 * m;
  for (int j = 1; j < size; j += 2) {
    const auto inner = perfect_templates((j - 1) / 2);
    const auto outer = perfect_templates((size - j - 1) / 2);
    for (const auto& a : inner)
      for (const auto& b : outer) {
        std::vector<std::pair<int, int>> t{{0, j}};
        for (auto [x, y] : a) t.emplace_back(x + 1, y + 1);
        for (auto [x, y] : b) t.emplace_back(x + j + 1, y + j + 1);
        out.push_back(std::move(t));
      }
  }
  return out;
}

std::uint32_t cover(const std::vector<Arc>& m) {
  std::uint32_t mask = 0;
  for (const Arc& a : m) mask |= (1u << (a.lo - 1)) | (1u << (a.hi - 1));
  return mask;
}

bool satisfies(const ThreePagePresentation& p, const SearchConstraints& c) {
  if (c.min_page_arcs)
    for (int s : p.page_sizes())
      if (s < *c.min_page_arcs) return false;
  if (c.prune_split_pairs && detect_split_pair(p)) return false;
  if (c.required_components || c.min_arcs_per_component) {
    const auto comps = components(p);
    if (c.required_components && static_cast<int>(comps.size()) != *c.required_components) return false;
    if (c.min_arcs_per_component)
      for (const Cycle& cyc : comps.cycles)
        if (static_cast<int>(cyc.arcs.size()) < *c.min_arcs_per_component) return false;
  }
  return true;
}

std::vector<InvariantProfile> profiles_of(const std::vector<ThreePagePresentation>& ps, unsigned threads) {
  std::vector<InvariantProfile> out(ps.size());
  parallel_for(ps.size(), threads, [&](std::size_t i, unsigned) { out[i] = profile(ps[i]); });
  return out;
}

}  // namespace

int max_points() {
  if (const char* env = std::getenv("THREEPAGE_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 16) return static_cast<int>(v);
  }
  return kDefaultMaxPoints;
}

SearchLimitExceeded::SearchLimitExceeded(int n, int limit)
    : std::invalid_argument("n=" + std::to_string(n) + " exceeds the search limit " + std::to_string(limit) +
                            " (set THREEPAGE_MAX_N to raise it)") {}

std::vector<std::vector<Arc>> noncrossing_matchings(int n) {
  std::vector<std::vector<Arc>> out;
  std::vector<Arc> current;
  matchings_between(1, n, current, out, [&] {
    auto m = current;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ThreePagePresentation> enumerate(const SearchConstraints& c) {
  const int limit = max_points();
  if (c.n > limit) throw SearchLimitExceeded(c.n, limit);
  if (c.n < 3) return {};
  const int n = c.n;
  std::vector<std::vector<Arc>> matchings = noncrossing_matchings(n);
  std::erase_if(matchings, [](const auto& m) { return m.empty(); });
  std::vector<std::uint32_t> covers;
  for (const auto& m : matchings) covers.push_back(cover(m));
  std::vector<std::vector<std::vector<std::pair<int, int>>>> templates;
  for (int m = 0; 2 * m <= n; ++m) templates.push_back(perfect_templates(m));
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);

  std::vector<std::vector<ThreePagePresentation>> found(matchings.size());
  parallel_for(matchings.size(), c.threads, [&](std::size_t i, unsigned) {
    std::vector<int> once;
    for (std::size_t j = 0; j < matchings.size(); ++j) {
      if ((covers[i] | covers[j]) != all) continue;
      const std::uint32_t free = covers[i] ^ covers[j];
      if (free == 0) continue;
      once.clear();
      for (int x = 0; x < n; ++x)
        if (free >> x & 1u) once.push_back(x + 1);
      for (const auto& t : templates[once.size() / 2]) {
        Page third;
        for (auto [a, b] : t) third.emplace_back(once[a], once[b]);
        ThreePagePresentation p(n, {matchings[i], matchings[j], std::move(third)});
        if (!is_canonical(p) || !satisfies(p, c)) continue;
        found[i].push_back(std::move(p));
      }
    }
  });
  std::vector<ThreePagePresentation> out;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<IndexResult> three_page_index(const InvariantProfile& target, int n_max, int n_min) {
  const int limit = max_points();
  if (n_max > limit) throw SearchLimitExceeded(n_max, limit);
  for (int n = std::max(n_min, 3); n <= n_max; ++n) {
    SearchConstraints c;
    c.n = n;
    c.required_components = target.components;
    const auto candidates = enumerate(c);
    const auto profiles = profiles_of(candidates, 0);
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (equal_up_to_mirror(profiles[i], target)) return IndexResult{n, candidates[i]};
  }
  return std::nullopt;
}

std::vector<CensusEntry> census(int n) {
  SearchConstraints c;
  c.n = n;
  const auto all = enumerate(c);
  const auto profiles = profiles_of(all, 0);
  std::map<InvariantProfile, std::size_t> group_of;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto [it, fresh] = group_of.emplace(profiles[i], groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  std::vector<CensusEntry> out;
  for (const auto& g : groups)
    for (std::size_t i : g) out.push_back({all[i], profiles[i], n});
  return out;
}

std::string format_census(const std::vector<CensusEntry>& entries) {
  std::string out;
  for (const CensusEntry& e : entries)
    out += serialize(e.presentation) + " | components=" + std::to_string(e.profile.components) +
           " | jones=" + format_jones_set(e.profile.jones_set) + "\n";
  return out;
}

T33Report refute_t33_at_9() {
  const InvariantProfile target = profile(tnn(3));
  SearchConstraints c;
  c.n = 9;
  c.required_components = 3;
  const auto all = enumerate(c);
  T33Report r;
  r.three_component = all.size();
  std::vector<ThreePagePresentation> full;
  for (const auto& p : all) {
    const auto comps = components(p);
    const bool short_one = std::any_of(comps.cycles.begin(), comps.cycles.end(),
                                       [](const Cycle& cyc) { return cyc.arcs.size() < 3; });
    if (short_one) {
      ++r.short_component;
      if (detect_split_pair(p)) ++r.short_split;
    } else {
      full.push_back(p);
    }
  }
  r.profile_checked = full.size();
  for (const auto& prof : profiles_of(full, 0))
    if (equal_up_to_mirror(prof, target)) ++r.witnesses;
  return r;
}

std::string format_report(const T33Report& r) {
  std::ostringstream out;
  out << "three-component presentations at n=9: " << r.three_component << "\n"
      << "with a component of < 3 arcs:         " << r.short_component << " (split certificate: "
      << r.short_split << ")\n"
      << "3+3+3 arcs, profile checked:          " << r.profile_checked << "\n"
      << "T(3,3) witnesses:                     " << r.witnesses << "\n";
  return out.str();
}

}  // namespace threepage
