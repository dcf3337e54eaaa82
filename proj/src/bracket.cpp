#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

#include "threepage/invariants.hpp"

namespace threepage {

CrossingLimitExceeded::CrossingLimitExceeded(int crossings, int limit)
    : std::runtime_error("diagram has " + std::to_string(crossings) + " crossings, limit is " +
                         std::to_string(limit)) {}

namespace {

// delta^k for k >= 0.
LaurentPoly loop_power(int k) { return loop_value().pow(k); }

LaurentPoly finish(const std::vector<std::vector<std::int64_t>>& hist, int crossings, int loop_max) {
  // hist[a - b + crossings][loops]
  LaurentPoly total;
  std::vector<LaurentPoly> powers;
  for (int l = 0; l <= loop_max; ++l) powers.push_back(loop_power(l));
  for (std::size_t s = 0; s < hist.size(); ++s)
    for (int l = 1; l <= loop_max; ++l)
      if (hist[s][l] != 0)
        total.add_scaled(powers[l - 1], hist[s][l], static_cast<int>(s) - crossings);
  return total;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { reset(); }
  void reset() { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

LaurentPoly bracket_statesum(const PlanarDiagram& d, int crossing_limit, unsigned threads) {
  const int c = d.crossing_count();
  if (c > crossing_limit) throw CrossingLimitExceeded(c, crossing_limit);
  const int free = static_cast<int>(d.free_loops().size());
  if (c == 0) return loop_power(free - 1);

  const int edges = d.edge_count();
  std::vector<std::array<int, 4>> pd;
  for (const auto& x : d.crossings()) pd.push_back(x.pd());

  const int loop_max = edges + free;
  const std::uint64_t states = std::uint64_t{1} << c;
  // Split on the top bits of the state index.
  const int prefix_bits = std::min(c, 6);
  const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;
  const std::uint64_t per_chunk = states >> prefix_bits;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

  using Hist = std::vector<std::vector<std::int64_t>>;
  std::vector<Hist> partial(threads, Hist(static_cast<std::size_t>(2 * c + 1),
                                          std::vector<std::int64_t>(static_cast<std::size_t>(loop_max) + 1, 0)));
  auto work = [&](unsigned t) {
    Dsu dsu(edges);
    Hist& hist = partial[t];
    for (std::uint64_t chunk = t; chunk < chunks; chunk += threads) {
      for (std::uint64_t s = chunk * per_chunk; s < (chunk + 1) * per_chunk; ++s) {
        dsu.reset();
        int joins = 0;
        int a_count = 0;
        for (int x = 0; x < c; ++x) {
          const auto& q = pd[x];
          if ((s >> x) & 1u) {  // B-smoothing
            joins += dsu.unite(q[0], q[3]);
            joins += dsu.unite(q[1], q[2]);
          } else {
            ++a_count;
            joins += dsu.unite(q[0], q[1]);
            joins += dsu.unite(q[2], q[3]);
          }
        }
        const int loops = edges - joins + free;
        ++hist[static_cast<std::size_t>(a_count - (c - a_count) + c)][static_cast<std::size_t>(loops)];
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();

  Hist hist = partial[0];
  for (unsigned t = 1; t < threads; ++t)
    for (std::size_t i = 0; i < hist.size(); ++i)
      for (std::size_t j = 0; j < hist[i].size(); ++j) hist[i][j] += partial[t][i][j];
  return finish(hist, c, loop_max);
}

namespace {

// Open edges of the processed region, paired by the paths joining them.
// Stored as sorted (lo, hi) label pairs plus a flag recording whether a closed
// loop has already been counted (the first loop is the normalizing one).
struct FrontierKey {
  std::vector<std::pair<int, int>> pairs;
  bool closed_one = false;

  friend auto operator<=>(const FrontierKey&, const FrontierKey&) = default;
};

class Frontier {
 public:
  explicit Frontier(const FrontierKey& key) : pairs_(key.pairs) {}

  // Joins the crossing ends labelled x and y; returns the number of loops closed.
  int join(int x, int y) {
    if (x == y) return 1;
    const int ix = find(x);
    const int iy = find(y);
    if (ix >= 0 && ix == iy) {
      erase(ix);
      return 1;
    }
    const int px = ix >= 0 ? take(ix, x) : x;
    const int iy2 = find(y);  // indices shift after take
    const int py = iy2 >= 0 ? take(iy2, y) : y;
    pairs_.emplace_back(std::min(px, py), std::max(px, py));
    return 0;
  }

  FrontierKey key(bool closed_one) {
    std::sort(pairs_.begin(), pairs_.end());
    return {pairs_, closed_one};
  }

 private:
  int find(int label) const {
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if (pairs_[i].first == label || pairs_[i].second == label) return static_cast<int>(i);
    return -1;
  }
  int take(int index, int label) {
    const auto pr = pairs_[static_cast<std::size_t>(index)];
    erase(index);
    return pr.first == label ? pr.second : pr.first;
  }
  void erase(int index) { pairs_.erase(pairs_.begin() + index); }

  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

LaurentPoly bracket_skein(const PlanarDiagram& d, int crossing_limit) {
  const int c = d.crossing_count();
  if (c > crossing_limit) throw CrossingLimitExceeded(c, crossing_limit);
  const int free = static_cast<int>(d.free_loops().size());
  if (c == 0) return loop_power(free - 1);

  std::vector<std::array<int, 4>> pd;
  for (const auto& x : d.crossings()) pd.push_back(x.pd());

  std::map<FrontierKey, LaurentPoly> states;
  states.emplace(FrontierKey{}, LaurentPoly(1));
  std::vector<int> seen(static_cast<std::size_t>(d.edge_count()), 0);
  std::vector<bool> done(static_cast<std::size_t>(c), false);

  for (int step = 0; step < c; ++step) {
    // Next crossing: most labels already on the frontier.
    int best = -1;
    int best_score = -1;
    for (int x = 0; x < c; ++x) {
      if (done[x]) continue;
      int score = 0;
      for (int e : pd[x]) score += seen[e] == 1;
      if (score > best_score) {
        best = x;
        best_score = score;
      }
    }
    done[best] = true;
    for (int e : pd[best]) ++seen[e];
    const auto& q = pd[best];
    const std::array<std::array<std::pair<int, int>, 2>, 2> smoothings{{
        {{{q[0], q[1]}, {q[2], q[3]}}},  // A
        {{{q[0], q[3]}, {q[1], q[2]}}},  // B
    }};

    std::map<FrontierKey, LaurentPoly> next;
    for (const auto& [key, poly] : states) {
      for (int s = 0; s < 2; ++s) {
        Frontier frontier(key);
        int loops = 0;
        for (const auto& [x, y] : smoothings[s]) loops += frontier.join(x, y);
        bool closed_one = key.closed_one;
        LaurentPoly term = poly.shifted(s == 0 ? 1 : -1);
        if (loops > 0 && !closed_one) {
          closed_one = true;
          --loops;
        }
        if (loops > 0) term *= loop_power(loops);
        next[frontier.key(closed_one)] += term;
      }
    }
    states.clear();
    for (auto& [key, poly] : next)
      if (!poly.is_zero()) states.emplace(key, std::move(poly));
  }

  LaurentPoly total;
  for (const auto& [key, poly] : states) total += poly;
  if (free > 0) total *= loop_power(free);
  return total;
}

}  // namespace threepage
