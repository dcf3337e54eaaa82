#pragma once
// Planar link diagrams stored as oriented crossing data.
//
// Every crossing records the four incident edge labels by role together with
// its sign for the diagram's base orientation. Edges are oriented along the
// base orientation of their component.

/*
  Sign convention (right-hand rule, over-strand direction first):

         positive (+1)            negative (-1)

           ^     ^                  ^     ^
            \   /                    \   /
             \ /                      \ /
              /                        \
             / \                      / \
            /   \                    /   \

  Both strands point up; the unbroken stroke is the over-strand. Facing along
  the over-strand, a positive crossing has the under-strand
  moving from right to left. In PD form each crossing is written
  X[under_in, b, under_out, d] counterclockwise from the incoming under-edge;
  for a positive crossing (b, d) = (over_out, over_in), for a negative one
  (b, d) = (over_in, over_out).
*/

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "threepage/presentation.hpp"

namespace threepage {

struct Crossing {
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;
  int sign = 1;

  /// Edge labels counterclockwise starting at the incoming under-edge.
  std::array<int, 4> pd() const {
    return sign > 0 ? std::array<int, 4>{under_in, over_out, under_out, over_in}
                    : std::array<int, 4>{under_in, over_in, under_out, over_out};
  }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// edge_component[e] is the component of edge e; crossingless components are
  /// listed by index in free_loops.
  PlanarDiagram(int components, std::vector<Crossing> crossings, std::vector<int> edge_component,
                std::vector<int> free_loops);

  int components() const { return components_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return static_cast<int>(edge_component_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<int>& edge_component() const { return edge_component_; }
  const std::vector<int>& free_loops() const { return free_loops_; }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  int components_ = 0;
  std::vector<Crossing> crossings_;
  std::vector<int> edge_component_;
  std::vector<int> free_loops_;
};

/// Direction choice per component: true reverses the base orientation.
using Orientation = std::vector<bool>;

Orientation base_orientation(const PlanarDiagram& d);
/// The k-th of the 2^components orientation assignments (bit c flips component c).
Orientation orientation_from_bits(const PlanarDiagram& d, std::uint64_t bits);

/// Sign of crossing c under orientation o.
int crossing_sign(const PlanarDiagram& d, int c, const Orientation& o);
int writhe(const PlanarDiagram& d, const Orientation& o);
/// Symmetric, zero diagonal; lk(i,j) is half the signed count of crossings between i and j.
std::vector<std::vector<int>> linking_matrix(const PlanarDiagram& d, const Orientation& o);

/// A closed curve given as the ordered list of crossings it passes through.
struct Passage {
  int crossing = 0;
  bool over = false;
};

/// Builds a diagram from per-component passage sequences and the crossing
/// signs for that traversal direction. Each crossing must be passed exactly
/// once over and once under.
PlanarDiagram diagram_from_passages(const std::vector<std::vector<Passage>>& curves,
                                    const std::vector<int>& signs);

/// Projection convention: binding axis horizontal; page-2 arcs below the axis;
/// page-1 and page-3 arcs above it; page-3 arcs pass over page-1 arcs exactly
/// where their endpoints interleave. The base orientation of each component
/// follows the cycle order from components().
PlanarDiagram project(const ThreePagePresentation& p);

struct BraidWord;
/// Closure of a braid; sigma_i has strand i+1 crossing over strand i.
PlanarDiagram braid_closure_diagram(const BraidWord& w);

/// Disjoint union, second diagram's labels shifted.
PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b);

/// PD interchange text: `components=<k> crossings=<c>` header, then one
/// `X a b c d` line per crossing with 1-based edge labels.
std::string to_pd_text(const PlanarDiagram& d);

}  // namespace threepage
