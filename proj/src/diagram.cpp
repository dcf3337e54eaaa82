#include "threepage/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "threepage/braid.hpp"

namespace threepage {

PlanarDiagram::PlanarDiagram(int components, std::vector<Crossing> crossings,
                             std::vector<int> edge_component, std::vector<int> free_loops)
    : components_(components),
      crossings_(std::move(crossings)),
      edge_component_(std::move(edge_component)),
      free_loops_(std::move(free_loops)) {}

Orientation base_orientation(const PlanarDiagram& d) {
  return Orientation(static_cast<std::size_t>(d.components()), false);
}

Orientation orientation_from_bits(const PlanarDiagram& d, std::uint64_t bits) {
  Orientation o(static_cast<std::size_t>(d.components()), false);
  for (int c = 0; c < d.components(); ++c) o[c] = (bits >> c) & 1u;
  return o;
}

int crossing_sign(const PlanarDiagram& d, int c, const Orientation& o) {
  const Crossing& x = d.crossings()[c];
  const int under = d.edge_component()[x.under_in];
  const int over = d.edge_component()[x.over_in];
  return o[under] != o[over] ? -x.sign : x.sign;
}

int writhe(const PlanarDiagram& d, const Orientation& o) {
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += crossing_sign(d, c, o);
  return w;
}

std::vector<std::vector<int>> linking_matrix(const PlanarDiagram& d, const Orientation& o) {
  const auto k = static_cast<std::size_t>(d.components());
  std::vector<std::vector<int>> twice(k, std::vector<int>(k, 0));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings()[c];
    const int a = d.edge_component()[x.under_in];
    const int b = d.edge_component()[x.over_in];
    if (a == b) continue;
    const int s = crossing_sign(d, c, o);
    twice[a][b] += s;
    twice[b][a] += s;
  }
  for (auto& row : twice)
    for (int& v : row) v /= 2;
  return twice;
}

PlanarDiagram diagram_from_passages(const std::vector<std::vector<Passage>>& curves,
                                    const std::vector<int>& signs) {
  const std::size_t m = signs.size();
  std::vector<Crossing> crossings(m);
  std::vector<int> seen_over(m, 0), seen_under(m, 0);
  std::vector<int> edge_component;
  std::vector<int> free_loops;
  int next_edge = 0;
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& curve = curves[ci];
    const int k = static_cast<int>(curve.size());
    if (k == 0) {
      free_loops.push_back(static_cast<int>(ci));
      continue;
    }
    const int base = next_edge;
    for (int i = 0; i < k; ++i) {
      const Passage& pass = curve[i];
      const int in = base + (i + k - 1) % k;
      const int out = base + i;
      Crossing& x = crossings.at(static_cast<std::size_t>(pass.crossing));
      if (pass.over) {
        x.over_in = in;
        x.over_out = out;
        ++seen_over[pass.crossing];
      } else {
        x.under_in = in;
        x.under_out = out;
        ++seen_under[pass.crossing];
      }
    }
    next_edge += k;
    edge_component.insert(edge_component.end(), static_cast<std::size_t>(k), static_cast<int>(ci));
  }
  for (std::size_t c = 0; c < m; ++c) {
    if (seen_over[c] != 1 || seen_under[c] != 1)
      throw std::logic_error("crossing " + std::to_string(c) + " not passed once over and once under");
    crossings[c].sign = signs[c];
  }
  return PlanarDiagram(static_cast<int>(curves.size()), std::move(crossings), std::move(edge_component),
                       std::move(free_loops));
}

PlanarDiagram project(const ThreePagePresentation& p) {
  const ComponentDecomposition decomposition = components(p);
  const Page& under_page = p.page(0);
  const Page& over_page = p.page(2);

  struct Meet {
    Arc under;
    Arc over;
  };
  std::vector<Meet> meets;
  for (const Arc& u : under_page)
    for (const Arc& o : over_page)
      if (interleaves(u, o)) meets.push_back({u, o});

  // Starting point of each page-1 / page-3 arc in the traversal.
  std::map<ArcRef, int> start;
  for (const Cycle& cycle : decomposition.cycles)
    for (std::size_t i = 0; i < cycle.arcs.size(); ++i) start[cycle.arcs[i]] = cycle.points[i];

  std::vector<int> signs(meets.size());
  for (std::size_t c = 0; c < meets.size(); ++c) {
    const Meet& m = meets[c];
    const int s_under = start.at({0, m.under}) == m.under.lo ? 1 : -1;
    const int inside = m.under.contains(m.over.lo) ? m.over.lo : m.over.hi;
    const int s_over = start.at({2, m.over}) == inside ? 1 : -1;
    signs[c] = -s_under * s_over;
  }

  std::vector<std::vector<Passage>> curves;
  for (const Cycle& cycle : decomposition.cycles) {
    std::vector<Passage> curve;
    for (std::size_t i = 0; i < cycle.arcs.size(); ++i) {
      const ArcRef& ref = cycle.arcs[i];
      if (ref.page == 1) continue;
      const bool over = ref.page == 2;
      // Crossings along this arc ordered by the inside endpoint of the other arc.
      std::vector<std::pair<int, int>> along;
      for (std::size_t c = 0; c < meets.size(); ++c) {
        const Arc& mine = over ? meets[c].over : meets[c].under;
        const Arc& theirs = over ? meets[c].under : meets[c].over;
        if (mine != ref.arc) continue;
        const int inside = mine.contains(theirs.lo) ? theirs.lo : theirs.hi;
        along.emplace_back(inside, static_cast<int>(c));
      }
      std::sort(along.begin(), along.end());
      if (cycle.points[i] != ref.arc.lo) std::reverse(along.begin(), along.end());
      for (const auto& [pos, c] : along) curve.push_back({c, over});
    }
    curves.push_back(std::move(curve));
  }
  return diagram_from_passages(curves, signs);
}

PlanarDiagram braid_closure_diagram(const BraidWord& w) {
  const int n = w.strands;
  // who[pos] is the strand (labelled by its top position) currently at pos.
  std::vector<int> who(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) who[i] = i;
  std::vector<std::vector<Passage>> along(static_cast<std::size_t>(n));
  std::vector<int> signs;
  for (int t = 0; t < w.length(); ++t) {
    const int g = w.letters[t];
    const int i = std::abs(g) - 1;
    const int over_pos = g > 0 ? i + 1 : i;
    const int under_pos = g > 0 ? i : i + 1;
    along[who[over_pos]].push_back({t, true});
    along[who[under_pos]].push_back({t, false});
    std::swap(who[i], who[i + 1]);
    // Strands run downward; the over-strand of sigma_i moves down-left.
    signs.push_back(g > 0 ? 1 : -1);
  }
  std::vector<int> bottom(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) bottom[who[pos]] = pos;

  std::vector<std::vector<Passage>> curves;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Passage> curve;
    for (int x = s; !seen[x]; x = bottom[x]) {
      seen[x] = true;
      curve.insert(curve.end(), along[x].begin(), along[x].end());
    }
    curves.push_back(std::move(curve));
  }
  return diagram_from_passages(curves, signs);
}

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b) {
  const int shift = a.edge_count();
  std::vector<Crossing> crossings = a.crossings();
  for (Crossing x : b.crossings()) {
    x.under_in += shift;
    x.under_out += shift;
    x.over_in += shift;
    x.over_out += shift;
    crossings.push_back(x);
  }
  std::vector<int> edges = a.edge_component();
  for (int c : b.edge_component()) edges.push_back(c + a.components());
  std::vector<int> loops = a.free_loops();
  for (int c : b.free_loops()) loops.push_back(c + a.components());
  return PlanarDiagram(a.components() + b.components(), std::move(crossings), std::move(edges),
                       std::move(loops));
}

std::string to_pd_text(const PlanarDiagram& d) {
  std::string out = "components=" + std::to_string(d.components()) +
                    " crossings=" + std::to_string(d.crossing_count()) + "\n";
  for (const Crossing& x : d.crossings()) {
    out += "X";
    for (int e : x.pd()) out += " " + std::to_string(e + 1);
    out += "\n";
  }
  return out;
}

}  // namespace threepage
