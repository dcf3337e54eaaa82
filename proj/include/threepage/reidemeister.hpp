#pragma once
// Reidemeister moves on planar diagrams, used to perturb diagrams in
// invariance tests.
//
// Moves act on the per-component passage sequences of a diagram and rebuild
// it with diagram_from_passages(), so edge labels stay canonical: edges of a
// component are numbered consecutively along its base orientation, edge i
// leaving its i-th passage. Diagrams produced by project() and
// braid_closure_diagram() are canonical in this sense.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "threepage/diagram.hpp"

namespace threepage {

/// An edge traversed along (forward) or against its orientation.
struct Dart {
  int edge = 0;
  bool forward = true;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Faces of the diagram as cycles of darts, each face lying on the right of
/// its darts. Free loops contribute no darts.
std::vector<std::vector<Dart>> faces(const PlanarDiagram& d);

/// Inverse of diagram_from_passages() for canonically labelled diagrams.
struct PassageForm {
  std::vector<std::vector<Passage>> curves;
  std::vector<int> signs;
};
PassageForm to_passages(const PlanarDiagram& d);

enum class Move { R1Insert, R1Remove, R2Insert, R2Remove, R3 };

std::string to_string(Move m);

struct MoveSite {
  Move move = Move::R1Insert;
  // R1Insert: edge to kink (or -1 and `component` for a free loop); variant
  // bit 0 puts the under passage first, bit 1 makes the crossing negative.
  int edge = -1;
  int component = -1;
  int variant = 0;
  // R1Remove: crossing. R2Remove: crossing and crossing2.
  int crossing = -1;
  int crossing2 = -1;
  // R2Insert: x is pushed over y; both darts border the same face.
  Dart x;
  Dart y;
  // R3: the three edges of a triangular face.
  std::vector<int> triangle;
};

class InapplicableMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every site at which the move applies.
std::vector<MoveSite> sites(const PlanarDiagram& d, Move m);

/// The diagram after the move. New crossings are appended, so an R2 insertion
/// followed by the R2 removal of the same pair returns the original diagram.
PlanarDiagram reidemeister_perturb(const PlanarDiagram& d, const MoveSite& site);

struct Perturbation {
  PlanarDiagram diagram;
  std::vector<Move> moves;
  int r1_balance = 0;  // sum of kink signs inserted minus removed
};

/// `steps` random moves chosen uniformly among the moves that apply, never
/// exceeding max_crossings.
Perturbation random_perturbation(const PlanarDiagram& d, std::mt19937_64& rng, int steps,
                                 int max_crossings = 16);

}  // namespace threepage
