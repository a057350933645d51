#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbpd/permutation.hpp"

namespace qbpd {

/// Sides of a cell. A pipe segment joins two sides.
enum class Side : std::uint8_t { North, East, South, West };

Side opposite(Side s);

/// Cell contents, named by the sides the pipe segments connect.
///   ES = ┌, WN = ┘, SW = ┐, NE = └, EW = ─, NS = │, CROSS = ┼.
enum class TileKind : std::uint8_t { Blank, ES, WN, SW, NE, EW, NS, Cross };

/// A single pipe segment inside a cell (one of the six side pairs).
enum class Segment : std::uint8_t { ES, WN, SW, NE, EW, NS };

/// Segments carried by a tile: none, one, or {EW, NS} for a crossing.
std::vector<Segment> segments_of(TileKind t);
/// The tile holding exactly these segments, if legal.
std::optional<TileKind> tile_from_segments(const std::vector<Segment>& segs);
/// The segment joining two distinct sides.
Segment segment_joining(Side a, Side b);
bool segment_touches(Segment s, Side side);
Side other_side(Segment s, Side side);

char tile_code(TileKind t);
std::optional<TileKind> tile_from_code(char c);

struct Cell {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An n x n tiling. Dominoes are an overlay: each listed cell (r, c) pairs
/// the blank cells (r, c) and (r+1, c).
class Diagram {
 public:
  explicit Diagram(int n);
  Diagram(int n, std::vector<TileKind> tiles, std::vector<Cell> dominoes = {});

  int size() const { return n_; }
  TileKind at(int row, int col) const { return tiles_[index(row, col)]; }
  TileKind at(Cell c) const { return at(c.row, c.col); }
  void set(int row, int col, TileKind t) { tiles_[index(row, col)] = t; }
  const std::vector<TileKind>& tiles() const { return tiles_; }

  /// Upper cells of dominoes, kept sorted.
  const std::vector<Cell>& dominoes() const { return dominoes_; }
  void set_dominoes(std::vector<Cell> dominoes);
  bool has_dominoes() const { return !dominoes_.empty(); }
  bool in_domino(int row, int col) const;

  int count(TileKind t) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::size_t index(int row, int col) const;

  int n_;
  std::vector<TileKind> tiles_;
  std::vector<Cell> dominoes_;
};

/// One cell visit of a pipe: where it entered and where it left.
struct PipeStep {
  Cell cell;
  Side entry;
  Side exit;
  friend bool operator==(const PipeStep&, const PipeStep&) = default;
};

struct PipeTrace {
  int start_row = 0;
  std::vector<PipeStep> steps;
  int end_col = 0;
};

/// The Rothe diagram of w with its corners smoothed into ES elbows.
Diagram rothe_diagram(const Permutation& w);

/// Follows every pipe from the east edge. Throws TracingStuck when a pipe
/// meets no matching segment, leaves through the north, east or west
/// boundary, steps east, or revisits a cell.
std::vector<PipeTrace> trace_pipes(const Diagram& d);

struct Violation {
  enum class Kind {
    Stuck,           // no matching segment or left through a wrong edge
    MovesRightward,  // a pipe steps east
    SegmentUsage,    // a segment not traversed exactly once
    NotReduced,      // two pipes cross more than once
    BadDomino,       // overlay does not pair vertically adjacent blanks
  };
  Kind kind;
  std::vector<Cell> cells;
  std::string message;
};

/// All structural problems of d; empty means d is a valid reduced QBPD.
std::vector<Violation> validate(const Diagram& d);
/// Same verdict as validate(d).empty() without building diagnostics.
bool is_valid(const Diagram& d);

/// w(i) = column where pipe i exits. Throws InvalidDiagram.
Permutation extract_permutation(const Diagram& d);

/// One diagram per matching of the vertical adjacency graph on blank cells,
/// the empty matching included. Throws HasDominoes.
std::vector<Diagram> domino_pairings(const Diagram& d);

/// Adds row/column n+1: EW down the new column, NS along the new row, and
/// the ES elbow of pipe n+1 at the corner.
Diagram embed_diagram(const Diagram& d);
/// Inverse of embed_diagram. Throws NotRestrictable unless the diagram's
/// permutation fixes n and the border has the embedded form.
Diagram restrict_diagram(const Diagram& d);

/// Injective byte serialization; also the canonical ordering of diagrams.
std::string canonical_key(const Diagram& d);

/// True for a classical bumpless pipe dream: no SW, NE, dominoes, or upward
/// vertical passages. Requires a valid diagram.
bool is_classical_bpd(const Diagram& d);

/// Text form: n, then n rows of tile codes, then one "r,c" line per domino.
std::string to_text(const Diagram& d);
/// Parses one diagram from to_text output. Throws ParseError.
Diagram diagram_from_text(std::string_view text);
/// Diagrams separated by blank lines.
std::string to_text(const std::vector<Diagram>& ds);
std::vector<Diagram> diagrams_from_text(std::string_view text);

}  // namespace qbpd
