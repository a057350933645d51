#include "qbpd/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "qbpd/error.hpp"

namespace qbpd {

Side opposite(Side s) {
  switch (s) {
    case Side::North: return Side::South;
    case Side::South: return Side::North;
    case Side::East: return Side::West;
    case Side::West: return Side::East;
  }
  return s;
}

std::vector<Segment> segments_of(TileKind t) {
  switch (t) {
    case TileKind::Blank: return {};
    case TileKind::ES: return {Segment::ES};
    case TileKind::WN: return {Segment::WN};
    case TileKind::SW: return {Segment::SW};
    case TileKind::NE: return {Segment::NE};
    case TileKind::EW: return {Segment::EW};
    case TileKind::NS: return {Segment::NS};
    case TileKind::Cross: return {Segment::EW, Segment::NS};
  }
  return {};
}

std::optional<TileKind> tile_from_segments(const std::vector<Segment>& segs) {
  if (segs.empty()) return TileKind::Blank;
  if (segs.size() == 1) {
    switch (segs[0]) {
      case Segment::ES: return TileKind::ES;
      case Segment::WN: return TileKind::WN;
      case Segment::SW: return TileKind::SW;
      case Segment::NE: return TileKind::NE;
      case Segment::EW: return TileKind::EW;
      case Segment::NS: return TileKind::NS;
    }
  }
  if (segs.size() == 2) {
    const bool ew = segs[0] == Segment::EW || segs[1] == Segment::EW;
    const bool ns = segs[0] == Segment::NS || segs[1] == Segment::NS;
    if (ew && ns) return TileKind::Cross;
  }
  return std::nullopt;
}

namespace {

std::pair<Side, Side> sides_of(Segment s) {
  switch (s) {
    case Segment::ES: return {Side::East, Side::South};
    case Segment::WN: return {Side::West, Side::North};
    case Segment::SW: return {Side::South, Side::West};
    case Segment::NE: return {Side::North, Side::East};
    case Segment::EW: return {Side::East, Side::West};
    case Segment::NS: return {Side::North, Side::South};
  }
  return {Side::North, Side::South};
}

}  // namespace

Segment segment_joining(Side a, Side b) {
  for (Segment s : {Segment::ES, Segment::WN, Segment::SW, Segment::NE, Segment::EW, Segment::NS}) {
    auto [p, q] = sides_of(s);
    if ((p == a && q == b) || (p == b && q == a)) return s;
  }
  throw OutOfRange("no segment joins a side to itself");
}

bool segment_touches(Segment s, Side side) {
  auto [p, q] = sides_of(s);
  return p == side || q == side;
}

Side other_side(Segment s, Side side) {
  auto [p, q] = sides_of(s);
  return p == side ? q : p;
}

char tile_code(TileKind t) {
  switch (t) {
    case TileKind::Blank: return '.';
    case TileKind::WN: return 'J';
    case TileKind::ES: return 'R';
    case TileKind::Cross: return 'C';
    case TileKind::EW: return 'H';
    case TileKind::NS: return 'V';
    case TileKind::SW: return 'S';
    case TileKind::NE: return 'N';
  }
  return '?';
}

std::optional<TileKind> tile_from_code(char c) {
  switch (c) {
    case '.': return TileKind::Blank;
    case 'J': return TileKind::WN;
    case 'R': return TileKind::ES;
    case 'C': return TileKind::Cross;
    case 'H': return TileKind::EW;
    case 'V': return TileKind::NS;
    case 'S': return TileKind::SW;
    case 'N': return TileKind::NE;
    default: return std::nullopt;
  }
}

Diagram::Diagram(int n) : n_(n), tiles_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), TileKind::Blank) {
  if (n < 1) throw OutOfRange("diagram size must be >= 1");
}

Diagram::Diagram(int n, std::vector<TileKind> tiles, std::vector<Cell> dominoes) : n_(n), tiles_(std::move(tiles)) {
  if (n < 1) throw OutOfRange("diagram size must be >= 1");
  if (tiles_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw SizeMismatch("diagram needs n*n tiles");
  }
  set_dominoes(std::move(dominoes));
}

std::size_t Diagram::index(int row, int col) const {
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col - 1);
}

void Diagram::set_dominoes(std::vector<Cell> dominoes) {
  std::sort(dominoes.begin(), dominoes.end());
  dominoes_ = std::move(dominoes);
}

bool Diagram::in_domino(int row, int col) const {
  for (const Cell& d : dominoes_) {
    if (d.col == col && (d.row == row || d.row + 1 == row)) return true;
  }
  return false;
}

int Diagram::count(TileKind t) const {
  return static_cast<int>(std::count(tiles_.begin(), tiles_.end(), t));
}

Diagram rothe_diagram(const Permutation& w) {
  const int n = w.size();
  const Permutation inv = w.inverse();
  Diagram d(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const bool right = j > w(i);
      const bool below = inv(j) < i;
      TileKind t = TileKind::Blank;
      if (j == w(i)) t = TileKind::ES;
      else if (right && below) t = TileKind::Cross;
      else if (right) t = TileKind::EW;
      else if (below) t = TileKind::NS;
      d.set(i, j, t);
    }
  }
  return d;
}

namespace {

// Result of following one pipe without giving up at the first oddity.
struct RawTrace {
  PipeTrace trace;
  bool finished = false;  // exited through the south edge
  std::optional<Violation> failure;
  std::vector<Cell> rightward;
};

std::optional<Segment> segment_entered(TileKind t, Side entry) {
  for (Segment s : segments_of(t))
    if (segment_touches(s, entry)) return s;
  return std::nullopt;
}

std::string cell_text(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

RawTrace follow_pipe(const Diagram& d, int start_row) {
  const int n = d.size();
  RawTrace out;
  out.trace.start_row = start_row;
  Cell pos{start_row, n};
  Side entry = Side::East;
  std::set<Cell> visited;
  for (;;) {
    if (pos.row > n) {
      out.trace.end_col = pos.col;
      out.finished = true;
      return out;
    }
    if (pos.row < 1 || pos.col < 1 || pos.col > n) {
      const char* edge = pos.row < 1 ? "north" : (pos.col < 1 ? "west" : "east");
      out.failure = Violation{Violation::Kind::Stuck,
                              {out.trace.steps.back().cell},
                              "pipe " + std::to_string(start_row) + " leaves through the " + edge + " edge"};
      return out;
    }
    if (!visited.insert(pos).second) {
      out.failure = Violation{Violation::Kind::Stuck, {pos},
                              "pipe " + std::to_string(start_row) + " revisits cell " + cell_text(pos)};
      return out;
    }
    const auto seg = segment_entered(d.at(pos), entry);
    if (!seg) {
      out.failure = Violation{Violation::Kind::Stuck, {pos},
                              "pipe " + std::to_string(start_row) + " has no segment at " + cell_text(pos)};
      return out;
    }
    const Side exit = other_side(*seg, entry);
    out.trace.steps.push_back({pos, entry, exit});
    if (entry == Side::West) out.rightward.push_back(pos);
    if (exit == Side::East) out.rightward.push_back(pos);
    switch (exit) {
      case Side::North: --pos.row; break;
      case Side::South: ++pos.row; break;
      case Side::West: --pos.col; break;
      case Side::East: ++pos.col; break;
    }
    entry = opposite(exit);
  }
}

}  // namespace

std::vector<PipeTrace> trace_pipes(const Diagram& d) {
  std::vector<PipeTrace> traces;
  for (int r = 1; r <= d.size(); ++r) {
    RawTrace raw = follow_pipe(d, r);
    if (raw.failure) throw TracingStuck(raw.failure->message);
    if (!raw.rightward.empty()) {
      throw TracingStuck("pipe " + std::to_string(r) + " moves rightward at " + cell_text(raw.rightward.front()));
    }
    traces.push_back(std::move(raw.trace));
  }
  return traces;
}

std::vector<Violation> validate(const Diagram& d) {
  const int n = d.size();
  std::vector<Violation> out;
  // usage[cell][segment] -> pipes traversing it
  std::map<std::pair<Cell, Segment>, std::vector<int>> usage;
  for (int r = 1; r <= n; ++r) {
    RawTrace raw = follow_pipe(d, r);
    if (raw.failure) out.push_back(*raw.failure);
    if (!raw.rightward.empty()) {
      out.push_back({Violation::Kind::MovesRightward, raw.rightward,
                     "pipe " + std::to_string(r) + " moves rightward"});
    }
    for (const PipeStep& s : raw.trace.steps) {
      usage[{s.cell, segment_joining(s.entry, s.exit)}].push_back(r);
    }
  }

  std::map<std::pair<int, int>, std::vector<Cell>> crossings;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Cell c{i, j};
      for (Segment s : segments_of(d.at(c))) {
        auto it = usage.find({c, s});
        const std::size_t uses = it == usage.end() ? 0 : it->second.size();
        if (uses != 1) {
          out.push_back({Violation::Kind::SegmentUsage, {c},
                         "segment at " + cell_text(c) + " traversed " + std::to_string(uses) + " times"});
        }
      }
      if (d.at(c) == TileKind::Cross) {
        auto h = usage.find({c, Segment::EW});
        auto v = usage.find({c, Segment::NS});
        if (h != usage.end() && v != usage.end() && h->second.size() == 1 && v->second.size() == 1) {
          const int a = std::min(h->second[0], v->second[0]);
          const int b = std::max(h->second[0], v->second[0]);
          crossings[{a, b}].push_back(c);
        }
      }
    }
  }
  for (const auto& [pair, cells] : crossings) {
    if (cells.size() > 1) {
      out.push_back({Violation::Kind::NotReduced, cells,
                     "pipes " + std::to_string(pair.first) + " and " + std::to_string(pair.second) + " cross " +
                         std::to_string(cells.size()) + " times"});
    }
  }

  std::set<Cell> covered;
  for (const Cell& top : d.dominoes()) {
    const Cell bottom{top.row + 1, top.col};
    if (top.row < 1 || top.col < 1 || top.col > n || bottom.row > n) {
      out.push_back({Violation::Kind::BadDomino, {top}, "domino at " + cell_text(top) + " leaves the grid"});
      continue;
    }
    if (d.at(top) != TileKind::Blank || d.at(bottom) != TileKind::Blank) {
      out.push_back({Violation::Kind::BadDomino, {top, bottom}, "domino at " + cell_text(top) + " covers a pipe"});
    }
    if (!covered.insert(top).second || !covered.insert(bottom).second) {
      out.push_back({Violation::Kind::BadDomino, {top}, "domino at " + cell_text(top) + " overlaps another"});
    }
  }
  return out;
}

bool is_valid(const Diagram& d) {
  const int n = d.size();
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  // Slot 0 holds a tile's only segment (or EW of a crossing), slot 1 NS of a crossing.
  std::vector<std::uint8_t> used(2 * cells, 0);
  std::vector<std::uint8_t> horizontal(cells, 0), vertical(cells, 0);
  std::size_t traversed = 0;

  for (int r = 1; r <= n; ++r) {
    int row = r, col = n;
    Side entry = Side::East;
    while (row <= n) {
      if (row < 1 || col < 1 || col > n) return false;
      const std::size_t idx = static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(col - 1);
      const TileKind t = d.tiles()[idx];
      Side exit;
      std::size_t slot = 0;
      if (t == TileKind::Cross) {
        const bool horiz = entry == Side::East || entry == Side::West;
        slot = horiz ? 0 : 1;
        exit = opposite(entry);
        (horiz ? horizontal : vertical)[idx] = static_cast<std::uint8_t>(r);
      } else {
        const auto seg = segment_entered(t, entry);
        if (!seg) return false;
        exit = other_side(*seg, entry);
      }
      if (exit == Side::East || used[2 * idx + slot]) return false;
      used[2 * idx + slot] = 1;
      ++traversed;
      switch (exit) {
        case Side::North: --row; break;
        case Side::South: ++row; break;
        case Side::West: --col; break;
        case Side::East: ++col; break;
      }
      entry = opposite(exit);
    }
  }

  std::size_t segments = 0;
  std::vector<std::uint8_t> pair_count(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    const TileKind t = d.tiles()[idx];
    if (t == TileKind::Blank) continue;
    if (t != TileKind::Cross) {
      ++segments;
      continue;
    }
    segments += 2;
    const int a = std::min(horizontal[idx], vertical[idx]);
    const int b = std::max(horizontal[idx], vertical[idx]);
    if (a == 0) return false;
    if (++pair_count[static_cast<std::size_t>(a * (n + 1) + b)] > 1) return false;
  }
  if (segments != traversed) return false;

  std::vector<std::uint8_t> covered(cells, 0);
  for (const Cell& top : d.dominoes()) {
    if (top.row < 1 || top.col < 1 || top.col > n || top.row + 1 > n) return false;
    for (int row : {top.row, top.row + 1}) {
      const std::size_t idx = static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(top.col - 1);
      if (d.tiles()[idx] != TileKind::Blank || covered[idx]) return false;
      covered[idx] = 1;
    }
  }
  return true;
}

Permutation extract_permutation(const Diagram& d) {
  const auto problems = validate(d);
  if (!problems.empty()) throw InvalidDiagram(problems.front().message);
  std::vector<int> images;
  for (const PipeTrace& t : trace_pipes(d)) images.push_back(t.end_col);
  return Permutation(std::move(images));
}

std::vector<Diagram> domino_pairings(const Diagram& d) {
  if (d.has_dominoes()) throw HasDominoes("domino_pairings expects an unpaired diagram");
  const int n = d.size();
  std::vector<Cell> blanks;  // column-major so vertical neighbours are adjacent
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      if (d.at(i, j) == TileKind::Blank) blanks.push_back({i, j});

  std::vector<Diagram> out;
  std::vector<Cell> chosen;
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k >= blanks.size()) {
      Diagram p = d;
      p.set_dominoes(chosen);
      out.push_back(std::move(p));
      return;
    }
    self(self, k + 1);
    if (k + 1 < blanks.size() && blanks[k + 1].col == blanks[k].col && blanks[k + 1].row == blanks[k].row + 1) {
      chosen.push_back(blanks[k]);
      self(self, k + 2);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

Diagram embed_diagram(const Diagram& d) {
  const int n = d.size();
  Diagram out(n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.set(i, j, d.at(i, j));
  for (int i = 1; i <= n; ++i) out.set(i, n + 1, TileKind::EW);
  for (int j = 1; j <= n; ++j) out.set(n + 1, j, TileKind::NS);
  out.set(n + 1, n + 1, TileKind::ES);
  out.set_dominoes(d.dominoes());
  return out;
}

Diagram restrict_diagram(const Diagram& d) {
  const int n = d.size() - 1;
  if (n < 1) throw NotRestrictable("cannot restrict a 1x1 diagram");
  if (extract_permutation(d)(n + 1) != n + 1) throw NotRestrictable("permutation does not fix n");
  bool border_ok = d.at(n + 1, n + 1) == TileKind::ES;
  for (int i = 1; i <= n; ++i) border_ok = border_ok && d.at(i, n + 1) == TileKind::EW;
  for (int j = 1; j <= n; ++j) border_ok = border_ok && d.at(n + 1, j) == TileKind::NS;
  if (!border_ok) throw NotRestrictable("border does not have the embedded form");
  Diagram out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.set(i, j, d.at(i, j));
  out.set_dominoes(d.dominoes());
  return out;
}

std::string canonical_key(const Diagram& d) {
  std::string key;
  key.reserve(d.tiles().size() + 1 + 3 * d.dominoes().size());
  key.push_back(static_cast<char>(d.size()));
  for (TileKind t : d.tiles()) key.push_back(tile_code(t));
  for (const Cell& c : d.dominoes()) {
    key.push_back('|');
    key.push_back(static_cast<char>(c.row));
    key.push_back(static_cast<char>(c.col));
  }
  return key;
}

bool is_classical_bpd(const Diagram& d) {
  if (d.has_dominoes() || d.count(TileKind::SW) || d.count(TileKind::NE)) return false;
  for (const PipeTrace& t : trace_pipes(d))
    for (const PipeStep& s : t.steps)
      if (s.entry == Side::South && s.exit == Side::North) return false;
  return true;
}

std::string to_text(const Diagram& d) {
  std::string out = std::to_string(d.size()) + "\n";
  for (int i = 1; i <= d.size(); ++i) {
    for (int j = 1; j <= d.size(); ++j) out.push_back(tile_code(d.at(i, j)));
    out.push_back('\n');
  }
  for (const Cell& c : d.dominoes()) out += std::to_string(c.row) + "," + std::to_string(c.col) + "\n";
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

Diagram parse_block(const std::vector<std::string_view>& lines) {
  if (lines.empty()) throw ParseError("empty diagram");
  const int n = parse_int(lines[0]);
  if (n < 1) throw ParseError("diagram size must be >= 1");
  if (lines.size() < static_cast<std::size_t>(n) + 1) throw ParseError("diagram has fewer than n rows");
  std::vector<TileKind> tiles;
  for (int i = 1; i <= n; ++i) {
    const auto row = lines[static_cast<std::size_t>(i)];
    if (row.size() != static_cast<std::size_t>(n)) throw ParseError("row " + std::to_string(i) + " has wrong width");
    for (char ch : row) {
      auto t = tile_from_code(ch);
      if (!t) throw ParseError("unknown tile code '" + std::string(1, ch) + "'");
      tiles.push_back(*t);
    }
  }
  std::vector<Cell> dominoes;
  for (std::size_t k = static_cast<std::size_t>(n) + 1; k < lines.size(); ++k) {
    const auto line = lines[k];
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError("bad domino line '" + std::string(line) + "'");
    dominoes.push_back({parse_int(line.substr(0, comma)), parse_int(line.substr(comma + 1))});
  }
  return Diagram(n, std::move(tiles), std::move(dominoes));
}

}  // namespace

Diagram diagram_from_text(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (const auto& l : lines)
    if (l.empty()) throw ParseError("blank line inside a single diagram");
  return parse_block(lines);
}

std::string to_text(const std::vector<Diagram>& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out.push_back('\n');
    out += to_text(ds[i]);
  }
  return out;
}

std::vector<Diagram> diagrams_from_text(std::string_view text) {
  std::vector<Diagram> out;
  std::vector<std::string_view> block;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) {
      if (!block.empty()) out.push_back(parse_block(block));
      block.clear();
    } else {
      block.push_back(line);
    }
  }
  if (!block.empty()) out.push_back(parse_block(block));
  return out;
}

}  // namespace qbpd
