#include "threepage/torus.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace threepage {

int TorusParams::gcd() const { return std::gcd(p, q); }

TorusParams normalize_torus(int p, int q) {
  if (std::abs(p) <= 1 || std::abs(q) <= 1)
    throw std::invalid_argument("T(" + std::to_string(p) + "," + std::to_string(q) + ") is trivial");
  TorusParams out;
  out.mirrored = (p < 0) != (q < 0);
  out.p = std::min(std::abs(p), std::abs(q));
  out.q = std::max(std::abs(p), std::abs(q));
  return out;
}

ThreePagePresentation tnn(int n) {
  if (n < 2) throw std::invalid_argument("tnn needs n >= 2");
  return tpq(n, n);
}

ThreePagePresentation tpq(int p, int q) {
  if (p < 2 || q < p) throw std::invalid_argument("tpq needs 2 <= p <= q");
  const int n = 2 * p + 2 * q - 2;
  std::array<Page, kPages> pages;
  for (int i = 1; i < p; ++i) pages[0].emplace_back(i, 2 * p - i);
  for (int i = 1; i < q; ++i) pages[0].emplace_back(2 * p - 1 + i, 2 * p + 2 * q - 1 - i);
  for (int i = 1; i <= p; ++i) pages[1].emplace_back(i, 2 * p + q - i);
  for (int j = 0; j < q; ++j) pages[2].emplace_back(p + j, n - j);
  return ThreePagePresentation(n, std::move(pages));
}

ThreePagePresentation tpq_tight(int p, int q) {
  if (p < 2 || q < 2 * p) throw std::invalid_argument("tpq_tight needs 2 <= p and 2p <= q");
  const int n = 2 * p + 2 * q - 3;
  std::array<Page, kPages> pages;
  // Page 1: nested family around the gap at q.
  for (int i = 1; i < q; ++i) pages[0].emplace_back(i, 2 * q - i);
  // Page 2: 2p-1 outer arcs, then q-2p arcs nested around (q, q+p).
  for (int k = 0; k < 2 * p - 1; ++k) pages[1].emplace_back(2 + k, n - k);
  for (int j = 1; j <= q - 2 * p; ++j) pages[1].emplace_back(q + 1 - j, q + p - 1 + j);
  // Page 3: (1, q) plus a nested family on the points still of degree one.
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < 2; ++k)
    for (const Arc& a : pages[k]) {
      ++degree[a.lo];
      ++degree[a.hi];
    }
  std::vector<int> rest;
  for (int x = 1; x <= n; ++x)
    if (degree[x] == 1 && x != 1 && x != q) rest.push_back(x);
  pages[2].emplace_back(1, q);
  for (std::size_t i = 0; i < rest.size() / 2; ++i) pages[2].emplace_back(rest[i], rest[rest.size() - 1 - i]);
  return ThreePagePresentation(n, std::move(pages));
}

int BoundsReport::best_upper() const {
  if (exact) return *exact;
  if (upper_tight) return *upper_tight;
  return upper_general;
}

bool BoundsReport::consistent() const {
  for (std::optional<int> v : {std::optional<int>(upper_general), upper_tight, exact}) {
    if (!v) continue;
    if (bridge_bound > *v || arc_index > *v) return false;
  }
  return upper_general == 2 * arc_index - 2 && (!upper_tight || *upper_tight == 2 * arc_index - 3);
}

BoundsReport bounds(int p, int q) {
  BoundsReport out;
  out.params = normalize_torus(p, q);
  const int a = out.params.p;
  const int b = out.params.q;
  out.arc_index = a + b;
  out.bridge_number = a;
  out.bridge_bound = 3 * a;
  out.upper_general = 2 * a + 2 * b - 2;
  if (b >= 2 * a) out.upper_tight = 2 * a + 2 * b - 3;
  if (a == b) out.exact = 4 * a - 2;
  return out;
}

std::string format_bounds(const BoundsReport& b) {
  std::ostringstream out;
  out << "torus T(" << b.params.p << "," << b.params.q << ")" << (b.params.mirrored ? " (mirror)" : "")
      << "\n";
  out << "components      " << b.params.gcd() << "\n";
  out << "arc_index       " << b.arc_index << "\n";
  out << "bridge_number   " << b.bridge_number << "  (external: min(p,q))\n";
  out << "bridge_bound    " << b.bridge_bound << "  (3*br <= alpha3)\n";
  out << "upper_general   " << b.upper_general << "  (2p+2q-2 = 2*alpha-2)\n";
  out << "upper_tight     " << (b.upper_tight ? std::to_string(*b.upper_tight) + "  (2p+2q-3 = 2*alpha-3)" : "-")
      << "\n";
  out << "exact           " << (b.exact ? std::to_string(*b.exact) + "  (4n-2)" : "-") << "\n";
  out << "relations       alpha <= alpha3, 3*br <= alpha3: " << (b.consistent() ? "consistent" : "VIOLATED")
      << "\n";
  return out.str();
}

}  // namespace threepage
