#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbpd/diagram.hpp"
#include "qbpd/permutation.hpp"

namespace qbpd {

enum class MoveKind { Droop, Lift };

/// A rectangle rewrite of one pipe, identified by its start row.
///
/// Droop: the pipe runs west along row r1 from (r1,c2) to an ES elbow at
/// (r1,c1), then south to (r2,c1); it is rerouted south along column c2 and
/// west along row r2.
///
/// Lift: the pipe runs west along row r2 from (r2,c2) to (r2,c1); it is
/// rerouted up column c2 to an SW elbow at (r1,c2), west along row r1 to an
/// ES elbow at (r1,c1), and back down column c1.
struct RectMove {
  MoveKind kind = MoveKind::Droop;
  int r1 = 0;
  int c1 = 0;
  int r2 = 0;
  int c2 = 0;
  int pipe = 0;
  friend bool operator==(const RectMove&, const RectMove&) = default;
};

/// Either the rewritten diagram or why the move does not apply.
struct MoveOutcome {
  std::optional<Diagram> diagram;
  std::string reason;
  explicit operator bool() const { return diagram.has_value(); }
};

/// Rewrites the pipe's segments and revalidates the whole diagram; the move
/// is rejected on a route mismatch, an illegal tile superposition, or an
/// invalid or non-reduced result. `d` must be unpaired.
MoveOutcome apply_droop(const Diagram& d, const RectMove& m);
MoveOutcome apply_lift(const Diagram& d, const RectMove& m);
MoveOutcome apply_move(const Diagram& d, const RectMove& m);

/// Rectangles worth attempting on d: droops anchored at an ES elbow of the
/// pipe, lifts anchored at the ends of a westward horizontal run.
std::vector<RectMove> candidate_moves(const Diagram& d);

enum class Frontier { BreadthFirst, DepthFirst };

/// Closure of the Rothe diagram of w under droop and lift moves, sorted by
/// canonical_key.
std::vector<Diagram> enumerate_unpaired(const Permutation& w, Frontier frontier = Frontier::BreadthFirst);

/// All QBPDs of w: every domino pairing of every unpaired QBPD, sorted by
/// canonical_key.
std::vector<Diagram> enumerate_qbpds(const Permutation& w);

inline constexpr int kBruteForceLimit = 5;

/// Independent enumeration by routing each pipe as a west/north/south lattice
/// path, followed by domino pairing. Sorted by canonical_key. Throws
/// SizeLimit for n > kBruteForceLimit.
std::vector<Diagram> brute_force_enumerate(const Permutation& w);

}  // namespace qbpd
