#pragma once
// Explicit three-page presentations of torus links and their index bounds.

#include <optional>
#include <string>

#include "threepage/presentation.hpp"

namespace threepage {

/// Normalized torus parameters 2 <= p <= q.
struct TorusParams {
  int p = 2;
  int q = 2;
  bool mirrored = false;  // true when the requested link was the mirror of T(p,q)

  int gcd() const;
};

/// Normalizes arbitrary nonzero (p, q) using T(p,q) = T(q,p) and
/// T(-p,q) = mirror of T(p,q). Throws when the link is trivial (|p| or |q| <= 1).
TorusParams normalize_torus(int p, int q);

/// T(n,n) with 4n-2 arcs, page sizes (2(n-1), n, n).
ThreePagePresentation tnn(int n);

/// T(p,q), 2 <= p <= q, with 2p+2q-2 arcs and page sizes (p+q-2, p, q).
///
/// Points 1..2p-1 and 2p..2p+2q-2 carry the two nested families of page 1,
/// centred at p and 2p+q-1. Page 2 joins (i, 2p+q-i) for i = 1..p and page 3
/// joins (p+j, n-j) for j = 0..q-1.
ThreePagePresentation tpq(int p, int q);

/// T(p,q), 2 <= p and 2p <= q, with 2p+2q-3 arcs and page sizes (q-1, q-1, 2p-1).
ThreePagePresentation tpq_tight(int p, int q);

struct BoundsReport {
  TorusParams params;
  int arc_index = 0;       // p + q
  int bridge_number = 0;   // min(p, q), taken from the literature
  int bridge_bound = 0;    // 3 * bridge_number
  int upper_general = 0;   // 2p + 2q - 2
  std::optional<int> upper_tight;  // 2p + 2q - 3 when q >= 2p
  std::optional<int> exact;        // 4n - 2 when p = q = n

  /// Best known upper bound.
  int best_upper() const;
  /// bridge_bound and arc_index are <= every upper value, and the general
  /// bound equals 2*arc_index - 2.
  bool consistent() const;
};

BoundsReport bounds(int p, int q);

std::string format_bounds(const BoundsReport& b);

}  // namespace threepage
