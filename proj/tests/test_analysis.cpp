#include <doctest.h>

#include "qbpd/analysis.hpp"
#include "qbpd/error.hpp"
#include "qbpd/moves.hpp"
#include "qbpd/oracle.hpp"
#include "support.hpp"

using namespace qbpd;
using qbpd::test::grid;
using qbpd::test::P;
using qbpd::test::same_poly;

namespace {

const test::Vars v4{4};

Poly expected_4213() {
  const auto& v = v4;
  return v.b(1, 1) * v.b(1, 2) * v.b(1, 3) * v.b(2, 1) + v.q(1) * v.b(1, 2) * v.b(1, 3) +
         v.b(1, 1) * v.b(2, 1) * (-v.q(1)) + v.q(1) * (-v.q(1)) + (-v.q(1)) * v.q(2);
}

template <class Pred>
bool any_diagram(const Permutation& w, Pred pred) {
  const auto ds = enumerate_qbpds(w);
  return std::any_of(ds.begin(), ds.end(), pred);
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("weight cells") {
    const auto rothe = weight_cells(rothe_diagram(P("4213")));
    CHECK(rothe.empty == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 1}});
    CHECK(rothe.quantum.empty());
    CHECK(rothe.negative_quantum.empty());

    const auto paired = weight_cells(grid({"...R", ".RHC", "RCHC", "VVRC"}, {{1, 1}}));
    CHECK(paired.quantum == std::vector<Cell>{{1, 1}});
    CHECK(paired.empty == std::vector<Cell>{{1, 2}, {1, 3}});
    CHECK(paired.negative_quantum.empty());

    CHECK(any_diagram(P("2143"), [](const Diagram& d) {
      const auto c = weight_cells(d);
      return c.empty.empty() && c.quantum.empty() && c.negative_quantum.size() == 1 &&
             c.negative_quantum[0].row == 1 && d.at(c.negative_quantum[0]) == TileKind::SW;
    }));

    CHECK_THROWS_AS(weight_cells(grid({"RH", "VN"})), InvalidDiagram);
  }

  TEST_CASE("binomial weights") {
    const auto& v = v4;
    CHECK(bwt(grid({".RSR", ".VNC", "RCHC", "VVRC"}, {{1, 1}})) == -(v.q(1) * v.q(1)));
    CHECK(bwt(grid({"RHSR", "VRCC", "VVNC", "VVRC"})) == -(v.q(1) * v.q(2)));
    CHECK(bwt(rothe_diagram(P("4213"))) == v.b(1, 1) * v.b(1, 2) * v.b(1, 3) * v.b(2, 1));
    CHECK(any_diagram(P("1432"), [&](const Diagram& d) { return bwt(d) == v.q(1) * v.b(1, 2); }));
    CHECK(bwt(rothe_diagram(P("21")), 4) == v.b(1, 1));
    CHECK_THROWS_AS(bwt(rothe_diagram(P("4213")), 3), SizeMismatch);
  }

  TEST_CASE("monomial weights") {
    const auto& v = v4;
    CHECK(wt(rothe_diagram(P("4213"))) == v.x(1) * v.x(1) * v.x(1) * v.x(2));
    const test::Vars v5{5};
    CHECK(any_diagram(P("12543"), [&](const Diagram& d) { return wt(d) == v5.x(3) * v5.q(1); }));
    CHECK(wt(rothe_diagram(Permutation::identity(3))) == Poly::constant(3, 1));
    for (const auto& w : enumerate_symmetric_group(4))
      for (const auto& d : enumerate_qbpds(w)) CHECK(wt(d) == specialize(bwt(d), true, false));
  }

  TEST_CASE("QBPD polynomials") {
    CHECK(qbpd_polynomial(Permutation::identity(3)) == Poly::constant(3, 1));
    CHECK(qbpd_polynomial(P("4213")) == expected_4213());
    const test::Vars v{3};
    CHECK(qbpd_polynomial(P("321")) == v.b(1, 1) * v.b(1, 2) * v.b(2, 1) + v.q(1) * v.b(1, 2));
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : enumerate_symmetric_group(n)) {
        CHECK(same_poly(qbpd_polynomial(w), quantum_double_schubert_defining(w)));
        CHECK(same_poly(qbpd_polynomial(w), quantum_double_schubert_transition(w)));
      }
  }

  TEST_CASE("classical diagrams give the classical polynomial") {
    for (const auto& w : enumerate_symmetric_group(4)) {
      std::vector<Diagram> classical;
      for (const auto& d : enumerate_qbpds(w))
        if (is_classical_bpd(d)) classical.push_back(d);
      const Poly classical_sum = weight_sum(classical, 4);
      CHECK(same_poly(classical_sum, double_schubert_defining(w)));
      CHECK(specialize(qbpd_polynomial(w), false, true) == classical_sum);
    }
  }

  TEST_CASE("quantum degree of every diagram is the length") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : enumerate_symmetric_group(n))
        for (const auto& d : enumerate_qbpds(w)) {
          CHECK(weight_cells(d).quantum_degree() == w.length());
          CHECK(is_homogeneous(bwt(d), w.length()));
        }
  }

  TEST_CASE("cancellation statistics") {
    struct Row {
      const char* perm;
      std::int64_t poly, qbpd, cancel, count;
    };
    for (const Row& r : {Row{"4132", 50, 54, 2, 9}, Row{"3142", 18, 20, 1, 4}, Row{"1432", 46, 48, 1, 9},
                         Row{"2143", 12, 14, 1, 5}, Row{"615432", 97032, 140052, 21510, 1038}}) {
      const auto s = cancellation_stats(P(r.perm));
      CHECK(s.poly_monomials == r.poly);
      CHECK(s.qbpd_monomials == r.qbpd);
      CHECK(s.cancellations == r.cancel);
      CHECK(s.qbpd_count == r.count);
    }
    const auto s = cancellation_stats(P("4132"));
    CHECK(s.distinct_terms == static_cast<std::int64_t>(counts(qbpd_polynomial(P("4132"))).distinct));
  }

  TEST_CASE("sweeps") {
    const auto s3 = sweep(3, 1);
    CHECK(s3.total == 0);
    CHECK(s3.rows.size() == 6);
    CHECK_FALSE(s3.argmax.has_value());

    const auto s4 = sweep(4, 1);
    CHECK(s4.total == 5);
    CHECK(s4.max == 2);
    CHECK(s4.argmax == P("4132"));
    int nonzero = 0;
    for (const auto& r : s4.rows) nonzero += r.cancellations > 0;
    CHECK(nonzero == 4);

    const auto s5 = sweep(5, 1);
    CHECK(s5.total == 1350);
    CHECK(s5.max == 153);
    CHECK(s5.argmax == P("51432"));
    for (const auto& r : s5.rows) {
      CHECK(r.qbpd_monomials >= r.poly_monomials);
      CHECK((r.qbpd_monomials - r.poly_monomials) % 2 == 0);
    }

    CHECK_THROWS_AS(sweep(7, 1), SizeLimit);
  }

  TEST_CASE("sweeps do not depend on the worker count") {
    const auto one = sweep(5, 1);
    const auto many = sweep(5, 4);
    CHECK(one.total == many.total);
    CHECK(one.argmax == many.argmax);
    REQUIRE(one.rows.size() == many.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
      CHECK(one.rows[i].perm == many.rows[i].perm);
      CHECK(one.rows[i].cancellations == many.rows[i].cancellations);
      CHECK(one.rows[i].poly_monomials == many.rows[i].poly_monomials);
    }
  }

  TEST_CASE("cancellation-free permutations") {
    CHECK(is_cancellation_free(Permutation::longest(5)));
    CHECK(is_cancellation_free(P("1342")));
    CHECK_FALSE(is_cancellation_free(P("4132")));
  }

  TEST_CASE("transition equation on QBPD sums") {
    CHECK(verify_transition(P("21")).is_zero());
    CHECK(verify_transition(P("3421")).is_zero());
    for (const auto& w : enumerate_symmetric_group(4))
      if (!w.is_identity()) CHECK(verify_transition(w).is_zero());
    CHECK_THROWS_AS(verify_transition(Permutation::identity(3)), IdentityPermutation);
  }

  TEST_CASE("parallel_for visits every index once and rethrows") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) { if (i == 7) throw OutOfRange("boom"); }), OutOfRange);
    CHECK(resolve_jobs(3) == 3);
    CHECK(resolve_jobs(0) >= 1);
  }
}
