#include <doctest.h>

#include <set>

#include "qbpd/error.hpp"
#include "qbpd/moves.hpp"
#include "support.hpp"

using namespace qbpd;
using qbpd::test::grid;
using qbpd::test::P;

namespace {

const Diagram kRothe4213 = grid({"...R", ".RHC", "RCHC", "VVRC"});
const Diagram kLifted4213 = grid({".RSR", ".VNC", "RCHC", "VVRC"});

std::vector<RectMove> every_rectangle(int n) {
  std::vector<RectMove> out;
  for (MoveKind kind : {MoveKind::Droop, MoveKind::Lift})
    for (int r1 = 1; r1 <= n; ++r1)
      for (int r2 = r1 + 1; r2 <= n; ++r2)
        for (int c1 = 1; c1 <= n; ++c1)
          for (int c2 = c1 + 1; c2 <= n; ++c2)
            for (int pipe = 1; pipe <= n; ++pipe) out.push_back({kind, r1, c1, r2, c2, pipe});
  return out;
}

}  // namespace

TEST_SUITE("moves") {
  TEST_CASE("a lift on the Rothe diagram of 4213") {
    const auto out = apply_lift(kRothe4213, {MoveKind::Lift, 1, 2, 2, 3, 2});
    REQUIRE(out);
    CHECK(*out.diagram == kLifted4213);
  }

  TEST_CASE("droops from Rothe diagrams") {
    // 132: the elbow of pipe 1 droops into the blank at (2,2)
    const auto out = apply_droop(rothe_diagram(P("132")), {MoveKind::Droop, 1, 1, 2, 2, 1});
    REQUIRE(out);
    CHECK(*out.diagram == grid({".RH", "RJR", "VRC"}));
    CHECK(is_classical_bpd(*out.diagram));

    // the Rothe diagram of 4213 has no blank south-east of an elbow
    int accepted = 0;
    for (const RectMove& m : every_rectangle(4))
      if (m.kind == MoveKind::Droop && apply_droop(rothe_diagram(P("4213")), m)) ++accepted;
    CHECK(accepted == 0);

    int total = 0;
    for (const auto& w : enumerate_symmetric_group(4)) {
      const auto unpaired = enumerate_unpaired(w);
      for (const RectMove& m : every_rectangle(4)) {
        if (m.kind != MoveKind::Droop) continue;
        const auto d = apply_droop(rothe_diagram(w), m);
        if (!d) continue;
        ++total;
        CHECK(std::find(unpaired.begin(), unpaired.end(), *d.diagram) != unpaired.end());
      }
    }
    CHECK(total > 0);
  }

  TEST_CASE("rejections") {
    CHECK_FALSE(apply_lift(kRothe4213, {MoveKind::Lift, 2, 2, 2, 3, 2}));
    CHECK_FALSE(apply_droop(kRothe4213, {MoveKind::Droop, 1, 1, 1, 3, 1}));
    CHECK_FALSE(apply_move(kRothe4213, {MoveKind::Lift, 1, 3, 2, 2, 2}));

    // the corner (3,2) already carries pipe 3's ES elbow
    const Diagram d = rothe_diagram(P("132"));
    const auto out = apply_droop(d, {MoveKind::Droop, 1, 1, 3, 2, 1});
    CHECK_FALSE(out);
    CHECK(out.reason.find("(3,2)") != std::string::npos);

    // the route does not match the stated pipe
    CHECK_FALSE(apply_lift(kRothe4213, {MoveKind::Lift, 1, 2, 2, 3, 3}));

    CHECK_THROWS_AS(apply_move(grid({"...R", ".RHC", "RCHC", "VVRC"}, {{1, 1}}), {MoveKind::Droop, 1, 1, 2, 2, 1}),
                    HasDominoes);
  }

  TEST_CASE("every accepted move preserves the permutation and stays in the closure") {
    const auto rects = every_rectangle(4);
    for (const auto& w : enumerate_symmetric_group(4)) {
      const auto closure = enumerate_unpaired(w);
      std::set<std::string> keys;
      for (const auto& d : closure) keys.insert(canonical_key(d));
      for (const auto& d : closure)
        for (const RectMove& m : rects) {
          const auto out = apply_move(d, m);
          if (!out) continue;
          CHECK(is_valid(*out.diagram));
          CHECK(extract_permutation(*out.diagram) == w);
          CHECK(keys.count(canonical_key(*out.diagram)) == 1);
        }
    }
  }

  TEST_CASE("candidate moves cover every applicable rectangle") {
    const auto rects = every_rectangle(4);
    for (const auto& w : enumerate_symmetric_group(4))
      for (const auto& d : enumerate_unpaired(w)) {
        std::set<std::string> via_candidates;
        for (const RectMove& m : candidate_moves(d))
          if (auto out = apply_move(d, m)) via_candidates.insert(canonical_key(*out.diagram));
        std::set<std::string> via_all;
        for (const RectMove& m : rects)
          if (auto out = apply_move(d, m)) via_all.insert(canonical_key(*out.diagram));
        CHECK(via_candidates == via_all);
      }
  }

  TEST_CASE("unpaired closure") {
    for (int n = 1; n <= 4; ++n) {
      const Permutation id = Permutation::identity(n);
      CHECK(enumerate_unpaired(id) == std::vector<Diagram>{rothe_diagram(id)});
    }
    const auto u = enumerate_unpaired(P("4213"));
    CHECK(u.size() == 3);
    for (const auto& d : u) CHECK_FALSE(d.has_dominoes());
    for (int n = 2; n <= 5; ++n) {
      const Permutation w0 = Permutation::longest(n);
      CHECK(enumerate_unpaired(w0) == std::vector<Diagram>{rothe_diagram(w0)});
    }
  }

  TEST_CASE("frontier order does not change the closure") {
    for (const auto& w : enumerate_symmetric_group(5))
      CHECK(enumerate_unpaired(w, Frontier::BreadthFirst) == enumerate_unpaired(w, Frontier::DepthFirst));
  }

  TEST_CASE("QBPD counts") {
    CHECK(enumerate_qbpds(P("4213")).size() == 5);
    CHECK(enumerate_qbpds(P("4132")).size() == 9);
    CHECK(enumerate_qbpds(P("615432")).size() == 1038);
    CHECK(enumerate_qbpds(P("1")).size() == 1);
    const auto all = enumerate_qbpds(P("4213"));
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const Diagram& a, const Diagram& b) { return canonical_key(a) < canonical_key(b); }));
    CHECK(all.front() == kRothe4213);
  }

  TEST_CASE("brute force agrees with the move closure") {
    CHECK(brute_force_enumerate(Permutation::identity(3)) == std::vector<Diagram>{rothe_diagram(Permutation::identity(3))});
    CHECK(brute_force_enumerate(P("4213")) == enumerate_qbpds(P("4213")));
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : enumerate_symmetric_group(n)) CHECK(brute_force_enumerate(w) == enumerate_qbpds(w));
    CHECK_THROWS_AS(brute_force_enumerate(Permutation::identity(6)), SizeLimit);
  }

  TEST_CASE("brute force agrees with the move closure on S5") {
    for (const auto& w : enumerate_symmetric_group(5)) CHECK(brute_force_enumerate(w) == enumerate_qbpds(w));
  }
}
