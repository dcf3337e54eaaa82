#include "threepage/reidemeister.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace threepage {

namespace {

// Slots are crossing * 4 + position in pd().
struct SlotTable {
  std::vector<std::array<int, 4>> pd;
  std::vector<int> head;  // slot where the edge ends
  std::vector<int> tail;  // slot where the edge starts
};

SlotTable slot_table(const PlanarDiagram& d) {
  SlotTable t;
  t.head.assign(static_cast<std::size_t>(d.edge_count()), -1);
  t.tail.assign(static_cast<std::size_t>(d.edge_count()), -1);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings()[c];
    const auto q = x.pd();
    t.pd.push_back(q);
    const int over_in_pos = x.sign > 0 ? 3 : 1;
    for (int pos = 0; pos < 4; ++pos) {
      const bool in = pos == 0 || pos == over_in_pos;
      (in ? t.head : t.tail)[q[pos]] = c * 4 + pos;
    }
  }
  return t;
}

struct EdgePlace {
  int component = 0;
  int index = 0;  // the edge leaves passage `index`
};

std::vector<EdgePlace> edge_places(const PlanarDiagram& d) {
  std::vector<EdgePlace> out(static_cast<std::size_t>(d.edge_count()));
  std::vector<int> seen(static_cast<std::size_t>(d.components()), 0);
  for (int e = 0; e < d.edge_count(); ++e) {
    const int c = d.edge_component()[e];
    out[e] = {c, seen[c]++};
  }
  return out;
}

int sign_of(bool forward) { return forward ? 1 : -1; }

PlanarDiagram rebuild(const PassageForm& f) { return diagram_from_passages(f.curves, f.signs); }

// Drops the given crossings and renumbers the rest.
void erase_crossings(PassageForm& f, std::vector<int> gone) {
  std::sort(gone.begin(), gone.end());
  for (auto& curve : f.curves)
    std::erase_if(curve, [&](const Passage& p) { return std::binary_search(gone.begin(), gone.end(), p.crossing); });
  for (auto& curve : f.curves)
    for (Passage& p : curve)
      p.crossing -= static_cast<int>(std::lower_bound(gone.begin(), gone.end(), p.crossing) - gone.begin());
  for (auto it = gone.rbegin(); it != gone.rend(); ++it) f.signs.erase(f.signs.begin() + *it);
}

bool has_face(const std::vector<std::vector<Dart>>& fs, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  for (const auto& face : fs) {
    if (face.size() != edges.size()) continue;
    std::vector<int> mine;
    for (const Dart& dart : face) mine.push_back(dart.edge);
    std::sort(mine.begin(), mine.end());
    if (mine == edges) return true;
  }
  return false;
}

// Passage positions (component, index) of crossing c, over first.
struct CrossingPlaces {
  EdgePlace over;
  EdgePlace under;
};

std::vector<CrossingPlaces> crossing_places(const PassageForm& f) {
  std::vector<CrossingPlaces> out(f.signs.size());
  for (std::size_t c = 0; c < f.curves.size(); ++c)
    for (std::size_t i = 0; i < f.curves[c].size(); ++i) {
      const Passage& p = f.curves[c][i];
      (p.over ? out[p.crossing].over : out[p.crossing].under) = {static_cast<int>(c), static_cast<int>(i)};
    }
  return out;
}

bool consecutive(const PassageForm& f, const EdgePlace& a, const EdgePlace& b) {
  if (a.component != b.component) return false;
  const int k = static_cast<int>(f.curves[a.component].size());
  return (a.index + 1) % k == b.index;
}

std::vector<MoveSite> r1_remove_sites(const PlanarDiagram& d) {
  const PassageForm f = to_passages(d);
  const auto places = crossing_places(f);
  const auto fs = faces(d);
  std::vector<MoveSite> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& pl = places[c];
    int loop = -1;
    const Crossing& x = d.crossings()[c];
    if (consecutive(f, pl.over, pl.under)) loop = x.over_out;
    if (consecutive(f, pl.under, pl.over)) loop = x.under_out;
    if (loop < 0 || !has_face(fs, {loop})) continue;
    MoveSite s;
    s.move = Move::R1Remove;
    s.crossing = c;
    out.push_back(s);
  }
  return out;
}

std::vector<MoveSite> r2_remove_sites(const PlanarDiagram& d) {
  const PassageForm f = to_passages(d);
  const auto places = crossing_places(f);
  const auto fs = faces(d);
  std::vector<MoveSite> out;
  for (int a = 0; a < d.crossing_count(); ++a)
    for (int b = 0; b < d.crossing_count(); ++b) {
      if (a == b || f.signs[a] == f.signs[b]) continue;
      // Over strand runs a -> b; under strand either way.
      if (!consecutive(f, places[a].over, places[b].over)) continue;
      const Crossing& xa = d.crossings()[a];
      const Crossing& xb = d.crossings()[b];
      int under_edge = -1;
      if (consecutive(f, places[a].under, places[b].under)) under_edge = xa.under_out;
      else if (consecutive(f, places[b].under, places[a].under)) under_edge = xb.under_out;
      if (under_edge < 0 || !has_face(fs, {xa.over_out, under_edge})) continue;
      MoveSite s;
      s.move = Move::R2Remove;
      s.crossing = std::min(a, b);
      s.crossing2 = std::max(a, b);
      if (std::none_of(out.begin(), out.end(), [&](const MoveSite& o) {
            return o.crossing == s.crossing && o.crossing2 == s.crossing2;
          }))
        out.push_back(s);
    }
  return out;
}

std::vector<MoveSite> r3_sites(const PlanarDiagram& d) {
  const auto fs = faces(d);
  const PassageForm f = to_passages(d);
  const auto places = edge_places(d);
  std::vector<MoveSite> out;
  for (const auto& face : fs) {
    if (face.size() != 3) continue;
    std::set<int> crossings;
    int top = 0;
    bool ok = true;
    for (const Dart& dart : face) {
      const EdgePlace& pl = places[dart.edge];
      const auto& curve = f.curves[pl.component];
      const int k = static_cast<int>(curve.size());
      const Passage& from = curve[pl.index];
      const Passage& to = curve[(pl.index + 1) % k];
      if (from.crossing == to.crossing) ok = false;
      crossings.insert(from.crossing);
      crossings.insert(to.crossing);
      if (from.over && to.over) ++top;
    }
    if (!ok || crossings.size() != 3 || top != 1) continue;
    MoveSite s;
    s.move = Move::R3;
    for (const Dart& dart : face) s.triangle.push_back(dart.edge);
    std::sort(s.triangle.begin(), s.triangle.end());
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::string to_string(Move m) {
  switch (m) {
    case Move::R1Insert: return "R1+";
    case Move::R1Remove: return "R1-";
    case Move::R2Insert: return "R2+";
    case Move::R2Remove: return "R2-";
    case Move::R3: return "R3";
  }
  return "?";
}

std::vector<std::vector<Dart>> faces(const PlanarDiagram& d) {
  const SlotTable t = slot_table(d);
  const int e_count = d.edge_count();
  std::vector<bool> used(static_cast<std::size_t>(2 * e_count), false);
  auto id = [](const Dart& x) { return 2 * x.edge + (x.forward ? 0 : 1); };
  std::vector<std::vector<Dart>> out;
  for (int start = 0; start < 2 * e_count; ++start) {
    if (used[start]) continue;
    std::vector<Dart> face;
    Dart cur{start / 2, start % 2 == 0};
    while (!used[id(cur)]) {
      used[id(cur)] = true;
      face.push_back(cur);
      const int arrive = cur.forward ? t.head[cur.edge] : t.tail[cur.edge];
      const int c = arrive / 4;
      const int next_slot = c * 4 + (arrive % 4 + 1) % 4;
      const int f = t.pd[c][next_slot % 4];
      cur = Dart{f, t.tail[f] == next_slot};
    }
    out.push_back(std::move(face));
  }
  return out;
}

PassageForm to_passages(const PlanarDiagram& d) {
  PassageForm f;
  f.curves.resize(static_cast<std::size_t>(d.components()));
  std::vector<Passage> leaving(static_cast<std::size_t>(d.edge_count()));
  std::vector<bool> found(static_cast<std::size_t>(d.edge_count()), false);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings()[c];
    leaving[x.over_out] = {c, true};
    leaving[x.under_out] = {c, false};
    found[x.over_out] = found[x.under_out] = true;
    f.signs.push_back(x.sign);
  }
  int prev_component = -1;
  for (int e = 0; e < d.edge_count(); ++e) {
    const int c = d.edge_component()[e];
    if (c < prev_component || !found[e]) throw std::logic_error("diagram is not canonically labelled");
    prev_component = c;
    f.curves[c].push_back(leaving[e]);
  }
  if (rebuild(f) != d) throw std::logic_error("diagram is not canonically labelled");
  return f;
}

std::vector<MoveSite> sites(const PlanarDiagram& d, Move m) {
  std::vector<MoveSite> out;
  switch (m) {
    case Move::R1Insert:
      for (int c : d.free_loops())
        for (int v = 0; v < 4; ++v) {
          MoveSite s;
          s.component = c;
          s.variant = v;
          out.push_back(s);
        }
      for (int e = 0; e < d.edge_count(); ++e)
        for (int v = 0; v < 4; ++v) {
          MoveSite s;
          s.edge = e;
          s.variant = v;
          out.push_back(s);
        }
      break;
    case Move::R1Remove: return r1_remove_sites(d);
    case Move::R2Insert:
      for (const auto& face : faces(d))
        for (const Dart& x : face)
          for (const Dart& y : face) {
            if (x.edge == y.edge) continue;
            MoveSite s;
            s.move = Move::R2Insert;
            s.x = x;
            s.y = y;
            out.push_back(s);
          }
      break;
    case Move::R2Remove: return r2_remove_sites(d);
    case Move::R3: return r3_sites(d);
  }
  return out;
}

PlanarDiagram reidemeister_perturb(const PlanarDiagram& d, const MoveSite& site) {
  PassageForm f = to_passages(d);
  const auto places = edge_places(d);
  const int next_crossing = d.crossing_count();
  auto check_edge = [&](int e) {
    if (e < 0 || e >= d.edge_count()) throw InapplicableMove("edge " + std::to_string(e) + " out of range");
  };

  switch (site.move) {
    case Move::R1Insert: {
      if (site.variant < 0 || site.variant > 3) throw InapplicableMove("R1 variant out of range");
      const bool under_first = site.variant & 1;
      const int sign = (site.variant & 2) ? -1 : 1;
      std::vector<Passage>* curve = nullptr;
      int at = 0;
      if (site.edge < 0) {
        if (std::find(d.free_loops().begin(), d.free_loops().end(), site.component) == d.free_loops().end())
          throw InapplicableMove("component is not a free loop");
        curve = &f.curves[site.component];
      } else {
        check_edge(site.edge);
        curve = &f.curves[places[site.edge].component];
        at = places[site.edge].index + 1;
      }
      const Passage first{next_crossing, !under_first};
      const Passage second{next_crossing, under_first};
      curve->insert(curve->begin() + at, {first, second});
      f.signs.push_back(sign);
      return rebuild(f);
    }
    case Move::R1Remove: {
      const auto ok = r1_remove_sites(d);
      if (std::none_of(ok.begin(), ok.end(), [&](const MoveSite& s) { return s.crossing == site.crossing; }))
        throw InapplicableMove("crossing " + std::to_string(site.crossing) + " is not a removable kink");
      erase_crossings(f, {site.crossing});
      return rebuild(f);
    }
    case Move::R2Insert: {
      check_edge(site.x.edge);
      check_edge(site.y.edge);
      if (site.x.edge == site.y.edge) throw InapplicableMove("R2 needs two distinct edges");
      bool shared = false;
      for (const auto& face : faces(d)) {
        const bool has_x = std::find(face.begin(), face.end(), site.x) != face.end();
        const bool has_y = std::find(face.begin(), face.end(), site.y) != face.end();
        shared = shared || (has_x && has_y);
      }
      if (!shared) throw InapplicableMove("darts do not border a common face");
      // Facing along x with the face on the right, x dips across y: it meets
      // P then Q, while y (running the other way) meets Q then P.
      const int p = next_crossing;
      const int q = next_crossing + 1;
      const int s = sign_of(site.x.forward) * sign_of(site.y.forward);
      f.signs.push_back(-s);
      f.signs.push_back(s);
      std::vector<Passage> over = {{p, true}, {q, true}};
      std::vector<Passage> under = {{q, false}, {p, false}};
      if (!site.x.forward) std::reverse(over.begin(), over.end());
      if (!site.y.forward) std::reverse(under.begin(), under.end());
      EdgePlace px = places[site.x.edge];
      EdgePlace py = places[site.y.edge];
      // Insert at the later position first so earlier indices stay valid.
      const bool x_later = px.component == py.component && px.index > py.index;
      auto put = [&](const EdgePlace& pl, const std::vector<Passage>& ps) {
        auto& curve = f.curves[pl.component];
        curve.insert(curve.begin() + pl.index + 1, ps.begin(), ps.end());
      };
      if (x_later || px.component != py.component) {
        put(px, over);
        put(py, under);
      } else {
        put(py, under);
        put(px, over);
      }
      return rebuild(f);
    }
    case Move::R2Remove: {
      const auto ok = r2_remove_sites(d);
      const int a = std::min(site.crossing, site.crossing2);
      const int b = std::max(site.crossing, site.crossing2);
      if (std::none_of(ok.begin(), ok.end(),
                       [&](const MoveSite& s) { return s.crossing == a && s.crossing2 == b; }))
        throw InapplicableMove("crossings do not bound a removable bigon");
      erase_crossings(f, {a, b});
      return rebuild(f);
    }
    case Move::R3: {
      std::vector<int> tri = site.triangle;
      std::sort(tri.begin(), tri.end());
      const auto ok = r3_sites(d);
      if (std::none_of(ok.begin(), ok.end(), [&](const MoveSite& s) { return s.triangle == tri; }))
        throw InapplicableMove("edges do not form an R3 triangle");
      // Each strand meets the other two in the opposite order afterwards.
      for (int e : tri) {
        const EdgePlace& pl = places[e];
        auto& curve = f.curves[pl.component];
        const int k = static_cast<int>(curve.size());
        std::swap(curve[pl.index], curve[(pl.index + 1) % k]);
      }
      return rebuild(f);
    }
  }
  throw InapplicableMove("unknown move");
}

Perturbation random_perturbation(const PlanarDiagram& d, std::mt19937_64& rng, int steps,
                                 int max_crossings) {
  Perturbation out{d, {}, 0};
  for (int step = 0; step < steps; ++step) {
    std::vector<std::vector<MoveSite>> options;
    for (Move m : {Move::R1Insert, Move::R1Remove, Move::R2Insert, Move::R2Remove, Move::R3}) {
      const int growth = m == Move::R1Insert ? 1 : m == Move::R2Insert ? 2 : 0;
      if (out.diagram.crossing_count() + growth > max_crossings) continue;
      auto s = sites(out.diagram, m);
      if (!s.empty()) options.push_back(std::move(s));
    }
    if (options.empty()) break;
    const auto& pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    const MoveSite& site = pick[std::uniform_int_distribution<std::size_t>(0, pick.size() - 1)(rng)];
    if (site.move == Move::R1Insert) out.r1_balance += (site.variant & 2) ? -1 : 1;
    if (site.move == Move::R1Remove) out.r1_balance -= out.diagram.crossings()[site.crossing].sign;
    out.diagram = reidemeister_perturb(out.diagram, site);
    out.moves.push_back(site.move);
  }
  return out;
}

}  // namespace threepage
