#include "qbpd/moves.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "qbpd/error.hpp"

namespace qbpd {

namespace {

// For each cell, the segment the given pipe uses there (if any).
class PipeRoute {
 public:
  PipeRoute(const PipeTrace& t, int n) : n_(n), segs_(static_cast<std::size_t>(n * n)) {
    for (const PipeStep& s : t.steps) segs_[idx(s.cell.row, s.cell.col)] = segment_joining(s.entry, s.exit);
  }
  std::optional<Segment> at(int r, int c) const {
    if (r < 1 || r > n_ || c < 1 || c > n_) return std::nullopt;
    return segs_[idx(r, c)];
  }

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>((r - 1) * n_ + (c - 1)); }
  int n_;
  std::vector<std::optional<Segment>> segs_;
};

struct Edit {
  int row;
  int col;
  std::optional<Segment> remove;
  std::optional<Segment> add;
};

MoveOutcome reject(std::string why) { return {std::nullopt, std::move(why)}; }

MoveOutcome apply_edits(const Diagram& d, const std::vector<Edit>& edits) {
  Diagram out = d;
  for (const Edit& e : edits) {
    auto segs = segments_of(out.at(e.row, e.col));
    if (e.remove) {
      auto it = std::find(segs.begin(), segs.end(), *e.remove);
      if (it == segs.end()) return reject("segment to remove is missing");
      segs.erase(it);
    }
    if (e.add) segs.push_back(*e.add);
    const auto tile = tile_from_segments(segs);
    if (!tile) {
      return reject("illegal tile superposition at (" + std::to_string(e.row) + "," + std::to_string(e.col) + ")");
    }
    out.set(e.row, e.col, *tile);
  }
  if (!is_valid(out)) return reject("result is not a valid reduced QBPD");
  return {std::move(out), {}};
}

bool rect_ok(const Diagram& d, const RectMove& m) {
  const int n = d.size();
  return m.r1 >= 1 && m.r1 < m.r2 && m.r2 <= n && m.c1 >= 1 && m.c1 < m.c2 && m.c2 <= n && m.pipe >= 1 &&
         m.pipe <= n;
}

MoveOutcome droop_with(const Diagram& d, const RectMove& m, const PipeRoute& p) {
  const auto entry = p.at(m.r1, m.c2);
  if (entry != Segment::EW && entry != Segment::WN) return reject("pipe does not enter the top edge");
  for (int j = m.c1 + 1; j < m.c2; ++j)
    if (p.at(m.r1, j) != Segment::EW) return reject("pipe leaves the top edge");
  if (p.at(m.r1, m.c1) != Segment::ES) return reject("no ES elbow at the top-left corner");
  for (int r = m.r1 + 1; r < m.r2; ++r)
    if (p.at(r, m.c1) != Segment::NS) return reject("pipe leaves the left edge");
  const auto exit = p.at(m.r2, m.c1);
  if (exit != Segment::NS && exit != Segment::WN) return reject("pipe does not exit the bottom-left corner");

  std::vector<Edit> edits;
  edits.push_back({m.r1, m.c2, entry, entry == Segment::EW ? Segment::ES : Segment::NS});
  for (int j = m.c1 + 1; j < m.c2; ++j) edits.push_back({m.r1, j, Segment::EW, std::nullopt});
  edits.push_back({m.r1, m.c1, Segment::ES, std::nullopt});
  for (int r = m.r1 + 1; r < m.r2; ++r) {
    edits.push_back({r, m.c1, Segment::NS, std::nullopt});
    edits.push_back({r, m.c2, std::nullopt, Segment::NS});
  }
  edits.push_back({m.r2, m.c2, std::nullopt, Segment::WN});
  for (int j = m.c1 + 1; j < m.c2; ++j) edits.push_back({m.r2, j, std::nullopt, Segment::EW});
  edits.push_back({m.r2, m.c1, exit, exit == Segment::NS ? Segment::ES : Segment::EW});
  return apply_edits(d, edits);
}

MoveOutcome lift_with(const Diagram& d, const RectMove& m, const PipeRoute& p) {
  const auto entry = p.at(m.r2, m.c2);
  if (entry != Segment::EW && entry != Segment::SW) return reject("pipe does not enter the bottom-right corner");
  for (int j = m.c1 + 1; j < m.c2; ++j)
    if (p.at(m.r2, j) != Segment::EW) return reject("pipe leaves the bottom edge");
  const auto exit = p.at(m.r2, m.c1);
  if (exit != Segment::EW && exit != Segment::ES) return reject("pipe does not exit the bottom-left corner");

  std::vector<Edit> edits;
  edits.push_back({m.r2, m.c2, entry, entry == Segment::EW ? Segment::NE : Segment::NS});
  for (int j = m.c1 + 1; j < m.c2; ++j) edits.push_back({m.r2, j, Segment::EW, std::nullopt});
  edits.push_back({m.r2, m.c1, exit, exit == Segment::EW ? Segment::WN : Segment::NS});
  for (int r = m.r1 + 1; r < m.r2; ++r) {
    edits.push_back({r, m.c2, std::nullopt, Segment::NS});
    edits.push_back({r, m.c1, std::nullopt, Segment::NS});
  }
  edits.push_back({m.r1, m.c2, std::nullopt, Segment::SW});
  for (int j = m.c1 + 1; j < m.c2; ++j) edits.push_back({m.r1, j, std::nullopt, Segment::EW});
  edits.push_back({m.r1, m.c1, std::nullopt, Segment::ES});
  return apply_edits(d, edits);
}

MoveOutcome apply_checked(const Diagram& d, const RectMove& m, MoveKind expected) {
  if (m.kind != expected) return reject("wrong move kind");
  if (d.has_dominoes()) throw HasDominoes("moves act on unpaired diagrams");
  if (!rect_ok(d, m)) return reject("rectangle needs r1 < r2 and c1 < c2 inside the grid");
  std::vector<PipeTrace> traces;
  try {
    traces = trace_pipes(d);
  } catch (const TracingStuck& e) {
    throw InvalidDiagram(e.what());
  }
  const PipeRoute route(traces[static_cast<std::size_t>(m.pipe - 1)], d.size());
  return expected == MoveKind::Droop ? droop_with(d, m, route) : lift_with(d, m, route);
}

// Candidates for one pipe, given its trace.
void pipe_candidates(const Diagram& d, const PipeTrace& t, std::vector<RectMove>& out) {
  const auto& steps = t.steps;
  auto seg = [&](std::size_t k) { return segment_joining(steps[k].entry, steps[k].exit); };

  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Cell corner = steps[k].cell;
    const Segment s = seg(k);

    if (s == Segment::ES) {
      // Droop: top edge walks back east, left edge walks forward south.
      std::vector<int> c2s, r2s;
      for (std::size_t b = k; b-- > 0;) {
        if (steps[b].cell.row != corner.row) break;
        const Segment sb = seg(b);
        if (sb != Segment::EW && sb != Segment::WN) break;
        c2s.push_back(steps[b].cell.col);
        if (sb == Segment::WN) break;
      }
      for (std::size_t f = k + 1; f < steps.size(); ++f) {
        if (steps[f].cell.col != corner.col) break;
        const Segment sf = seg(f);
        if (sf != Segment::NS && sf != Segment::WN) break;
        r2s.push_back(steps[f].cell.row);
        if (sf == Segment::WN) break;
      }
      for (int c2 : c2s)
        for (int r2 : r2s)
          if (d.at(r2, c2) == TileKind::Blank) out.push_back({MoveKind::Droop, corner.row, corner.col, r2, c2, t.start_row});
    }

    if ((s == Segment::EW || s == Segment::SW) && corner.row > 1) {
      // Lift: (r2, c2) = corner, run continues west.
      for (std::size_t f = k + 1; f < steps.size(); ++f) {
        if (steps[f].cell.row != corner.row) break;
        const Segment sf = seg(f);
        if (sf != Segment::EW && sf != Segment::ES) break;
        const int c1 = steps[f].cell.col;
        for (int r1 = 1; r1 < corner.row; ++r1) {
          if (d.at(r1, corner.col) == TileKind::Blank && d.at(r1, c1) == TileKind::Blank) {
            out.push_back({MoveKind::Lift, r1, c1, corner.row, corner.col, t.start_row});
          }
        }
        if (sf == Segment::ES) break;
      }
    }
  }
}

}  // namespace

MoveOutcome apply_droop(const Diagram& d, const RectMove& m) { return apply_checked(d, m, MoveKind::Droop); }

MoveOutcome apply_lift(const Diagram& d, const RectMove& m) { return apply_checked(d, m, MoveKind::Lift); }

MoveOutcome apply_move(const Diagram& d, const RectMove& m) {
  return m.kind == MoveKind::Droop ? apply_droop(d, m) : apply_lift(d, m);
}

std::vector<RectMove> candidate_moves(const Diagram& d) {
  std::vector<RectMove> out;
  for (const PipeTrace& t : trace_pipes(d)) pipe_candidates(d, t, out);
  return out;
}

namespace {

// Expands one diagram: every successful move, with traces computed once.
std::vector<Diagram> successors(const Diagram& d) {
  const auto traces = trace_pipes(d);
  std::vector<RectMove> moves;
  for (const PipeTrace& t : traces) pipe_candidates(d, t, moves);
  std::vector<Diagram> out;
  for (const RectMove& m : moves) {
    const PipeRoute route(traces[static_cast<std::size_t>(m.pipe - 1)], d.size());
    MoveOutcome r = m.kind == MoveKind::Droop ? droop_with(d, m, route) : lift_with(d, m, route);
    if (r) out.push_back(std::move(*r.diagram));
  }
  return out;
}

void sort_by_key(std::vector<Diagram>& ds) {
  std::vector<std::pair<std::string, Diagram>> keyed;
  keyed.reserve(ds.size());
  for (auto& d : ds) keyed.emplace_back(canonical_key(d), std::move(d));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ds.clear();
  for (auto& [k, d] : keyed) ds.push_back(std::move(d));
}

}  // namespace

std::vector<Diagram> enumerate_unpaired(const Permutation& w, Frontier frontier) {
  const Diagram start = rothe_diagram(w);
  std::unordered_set<std::string> seen{canonical_key(start)};
  std::vector<Diagram> found{start};
  std::deque<Diagram> pending{start};
  while (!pending.empty()) {
    const bool bfs = frontier == Frontier::BreadthFirst;
    Diagram d = std::move(bfs ? pending.front() : pending.back());
    if (bfs) {
      pending.pop_front();
    } else {
      pending.pop_back();
    }
    for (Diagram& next : successors(d)) {
      if (seen.insert(canonical_key(next)).second) {
        found.push_back(next);
        pending.push_back(std::move(next));
      }
    }
  }
  sort_by_key(found);
  return found;
}

std::vector<Diagram> enumerate_qbpds(const Permutation& w) {
  std::vector<Diagram> out;
  for (const Diagram& d : enumerate_unpaired(w)) {
    for (Diagram& p : domino_pairings(d)) out.push_back(std::move(p));
  }
  sort_by_key(out);
  return out;
}

namespace {

class PathRouter {
 public:
  explicit PathRouter(const Permutation& w)
      : w_(w), n_(w.size()), grid_(w.size()), owner_h_(cells(), 0), owner_v_(cells(), 0), crossings_(cells(), 0) {}

  std::vector<Diagram> run() {
    route_pipe(1);
    return std::move(found_);
  }

 private:
  std::size_t cells() const { return static_cast<std::size_t>(n_ * n_); }
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>((r - 1) * n_ + (c - 1)); }

  void route_pipe(int pipe) {
    if (pipe > n_) {
      if (!is_valid(grid_)) throw InvalidDiagram("brute force produced an invalid diagram");
      for (Diagram& p : domino_pairings(grid_)) found_.push_back(std::move(p));
      return;
    }
    step(pipe, pipe, n_, Side::East);
  }

  // The pipe has just entered (r, c) through `entry`.
  void step(int pipe, int r, int c, Side entry) {
    for (Side exit : {Side::West, Side::North, Side::South}) {
      if (exit == entry) continue;
      const Segment seg = segment_joining(entry, exit);
      const std::size_t k = idx(r, c);
      const TileKind before = grid_.at(r, c);
      int partner = 0;
      TileKind after;
      if (before == TileKind::Blank) {
        after = *tile_from_segments({seg});
      } else if (before == TileKind::EW && seg == Segment::NS) {
        after = TileKind::Cross;
        partner = owner_h_[k];
      } else if (before == TileKind::NS && seg == Segment::EW) {
        after = TileKind::Cross;
        partner = owner_v_[k];
      } else {
        continue;
      }
      if (partner == pipe) continue;
      std::size_t pair = 0;
      if (partner) {
        pair = idx(std::min(partner, pipe), std::max(partner, pipe));
        if (crossings_[pair] >= 1) continue;
        ++crossings_[pair];
      }
      grid_.set(r, c, after);
      if (seg == Segment::EW) owner_h_[k] = pipe;
      if (seg == Segment::NS) owner_v_[k] = pipe;

      if (exit == Side::West && c > 1) {
        step(pipe, r, c - 1, Side::East);
      } else if (exit == Side::North && r > 1) {
        step(pipe, r - 1, c, Side::South);
      } else if (exit == Side::South) {
        if (r < n_) {
          step(pipe, r + 1, c, Side::North);
        } else if (c == w_(pipe)) {
          route_pipe(pipe + 1);
        }
      }

      if (seg == Segment::EW) owner_h_[k] = 0;
      if (seg == Segment::NS) owner_v_[k] = 0;
      grid_.set(r, c, before);
      if (partner) --crossings_[pair];
    }
  }

  const Permutation& w_;
  int n_;
  Diagram grid_;
  std::vector<int> owner_h_;
  std::vector<int> owner_v_;
  std::vector<int> crossings_;
  std::vector<Diagram> found_;
};

}  // namespace

std::vector<Diagram> brute_force_enumerate(const Permutation& w) {
  if (w.size() > kBruteForceLimit) {
    throw SizeLimit("brute force enumeration is limited to n <= " + std::to_string(kBruteForceLimit));
  }
  PathRouter router(w);
  auto out = router.run();
  sort_by_key(out);
  return out;
}

}  // namespace qbpd
