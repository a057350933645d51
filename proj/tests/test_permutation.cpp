#include <doctest.h>

#include <set>

#include "qbpd/error.hpp"
#include "qbpd/permutation.hpp"
#include "support.hpp"

using namespace qbpd;
using qbpd::test::P;

TEST_SUITE("permutation") {
  TEST_CASE("parsing") {
    CHECK(Permutation::parse("[1]") == Permutation::identity(1));
    CHECK(Permutation::parse("[4,2,1,3]") == P("4213"));
    CHECK(P("4213").images() == std::vector<int>{4, 2, 1, 3});
    CHECK_THROWS_AS(Permutation::parse("[4,2,2,3]"), NotABijection);
    CHECK_THROWS_AS(Permutation::parse("4x13"), ParseError);
    CHECK_THROWS_AS(Permutation::parse(""), ParseError);
    CHECK(Permutation::parse("10,2,1,3,4,5,6,7,8,9").size() == 10);
  }

  TEST_CASE("length agrees with inversion counting") {
    CHECK(Permutation::identity(5).length() == 0);
    CHECK(P("4321").length() == 6);
    CHECK(P("4213").length() == 4);
    for (int n = 1; n <= 6; ++n)
      for (const auto& w : enumerate_symmetric_group(n)) CHECK(w.length() == test::brute_inversions(w));
  }

  TEST_CASE("right multiplication swaps positions") {
    CHECK(right_multiply_transposition(Permutation::identity(4), 1, 2) == P("2134"));
    CHECK(right_multiply_transposition(P("3421"), 2, 3) == P("3241"));
    CHECK_THROWS_AS(right_multiply_transposition(P("4213"), 2, 2), OutOfRange);
    CHECK_THROWS_AS(right_multiply_transposition(P("4213"), 0, 2), OutOfRange);
    CHECK_THROWS_AS(right_multiply_transposition(P("4213"), 3, 5), OutOfRange);
  }

  TEST_CASE("Bruhat covers match a length oracle") {
    CHECK(is_bruhat_cover(Permutation::identity(3), 1, 2));
    CHECK(is_bruhat_cover(P("2134"), 2, 3));
    CHECK_FALSE(is_bruhat_cover(P("2134"), 1, 2));
    for (const auto& s : enumerate_symmetric_group(5))
      for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
          const int gain = test::brute_inversions(s.times_transposition(a, b)) - test::brute_inversions(s);
          CHECK(is_bruhat_cover(s, a, b) == (gain == 1));
        }
  }

  TEST_CASE("quantum lowering matches a length oracle") {
    CHECK(is_quantum_lower(P("3241"), 1, 2));
    CHECK_FALSE(is_quantum_lower(Permutation::identity(2), 1, 2));
    CHECK(is_quantum_lower(P("321"), 1, 3));
    for (const auto& s : enumerate_symmetric_group(5))
      for (int c = 1; c <= 5; ++c)
        for (int d = c + 1; d <= 5; ++d) {
          const int drop = test::brute_inversions(s) - test::brute_inversions(s.times_transposition(c, d));
          CHECK(is_quantum_lower(s, c, d) == (drop == 2 * (d - c) - 1));
        }
  }

  TEST_CASE("transition setup") {
    const auto t = transition_setup(P("3421"));
    CHECK(t.n == 4);
    CHECK(t.a == 2);
    CHECK(t.b == 3);
    CHECK(t.m == 2);
    CHECK(t.sigma == P("3241"));
    CHECK(t.lower_left == std::vector<int>{1});
    CHECK(t.lower_left_values == std::vector<int>{2, 3});

    const auto u = transition_setup(P("21"));
    CHECK(u.n == 2);
    CHECK(u.a == 1);
    CHECK(u.b == 2);
    CHECK(u.m == 1);
    CHECK(u.sigma == P("12"));
    CHECK(u.lower_left.empty());

    CHECK_THROWS_AS(transition_setup(Permutation::identity(3)), IdentityPermutation);
  }

  TEST_CASE("transition setup lowers the permutation") {
    for (int n = 2; n <= 6; ++n)
      for (const auto& pi : enumerate_symmetric_group(n)) {
        if (pi.is_identity()) continue;
        const auto t = transition_setup(pi);
        CHECK(t.sigma.length() == pi.length() - 1);
        CHECK(pi(t.a) == t.n);
        for (int c : t.lower_left) CHECK(is_quantum_lower(t.sigma, c, t.a));
      }
  }

  TEST_CASE("embedding appends fixed points") {
    CHECK(embed(P("21"), 3) == P("213"));
    CHECK(embed(P("4213"), 4) == P("4213"));
    CHECK(embed(P("4213"), 6) == P("421356"));
    CHECK_THROWS_AS(embed(P("4213"), 3), OutOfRange);
  }

  TEST_CASE("enumeration is lexicographic and complete") {
    CHECK(enumerate_symmetric_group(1) == std::vector<Permutation>{Permutation::identity(1)});
    const auto s3 = enumerate_symmetric_group(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front() == P("123"));
    CHECK(s3.back() == P("321"));
    const auto s5 = enumerate_symmetric_group(5);
    CHECK(s5.size() == 120);
    CHECK(std::is_sorted(s5.begin(), s5.end()));
    CHECK(std::set<Permutation>(s5.begin(), s5.end()).size() == 120);
    CHECK(enumerate_symmetric_group(4).size() == 24);
  }

  TEST_CASE("inverse and composition") {
    for (const auto& w : enumerate_symmetric_group(4)) {
      CHECK((w * w.inverse()).is_identity());
      CHECK(w.inverse().length() == w.length());
    }
    CHECK(P("4213").to_bracket_string() == "[4,2,1,3]");
    CHECK(P("4213").to_string() == "4213");
  }
}
