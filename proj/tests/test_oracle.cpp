#include <doctest.h>

#include <map>
#include <numeric>

#include "qbpd/error.hpp"
#include "qbpd/oracle.hpp"
#include "schubert_oracle.hpp"
#include "support.hpp"

using namespace qbpd;
using qbpd::test::P;
using qbpd::test::same_poly;

namespace {

// det(1 + lambda G_k) by Leibniz expansion, as coefficients of lambda.
std::vector<Poly> leibniz_char_poly(int n, const std::vector<Poly>& z) {
  const int k = static_cast<int>(z.size());
  using LPoly = std::vector<Poly>;  // index = power of lambda
  auto entry = [&](int i, int j) -> LPoly {
    LPoly e(static_cast<std::size_t>(k + 1), Poly(n));
    if (i == j) {
      e[0] = Poly::constant(n, 1);
      e[1] = z[static_cast<std::size_t>(i)];
    } else if (j == i + 1) {
      e[1] = Poly::q(n, i + 1);
    } else if (j == i - 1) {
      e[1] = Poly::constant(n, -1);
    }
    return e;
  };
  auto mul = [&](const LPoly& a, const LPoly& b) {
    LPoly c(static_cast<std::size_t>(k + 1), Poly(n));
    for (int i = 0; i <= k; ++i)
      for (int j = 0; i + j <= k; ++j) c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return c;
  };
  LPoly det(static_cast<std::size_t>(k + 1), Poly(n));
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    LPoly term(static_cast<std::size_t>(k + 1), Poly(n));
    term[0] = Poly::constant(n, inv % 2 ? -1 : 1);
    for (int i = 0; i < k; ++i) term = mul(term, entry(i, perm[static_cast<std::size_t>(i)]));
    for (int i = 0; i <= k; ++i) det[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("quantum elementary polynomials") {
    const test::Vars v{3};
    const std::vector<Poly> z{v.x(1), v.x(2)};
    CHECK(quantum_e(0, 2, z) == v.c(1));
    CHECK(quantum_e(1, 2, z) == v.x(1) + v.x(2));
    CHECK(quantum_e(2, 2, z) == v.x(1) * v.x(2) + v.q(1));
    CHECK_THROWS_AS(quantum_e(1, 3, z), SizeMismatch);
    CHECK_THROWS_AS(quantum_e(3, 2, z), OutOfRange);
  }

  TEST_CASE("continuant agrees with the Leibniz determinant") {
    const int n = 5;
    const test::Vars v{n};
    for (int k = 1; k <= 4; ++k) {
      std::vector<Poly> z;
      for (int i = 1; i <= k; ++i) z.push_back(v.b(i, 5 - i));
      const auto det = leibniz_char_poly(n, z);
      for (int i = 0; i <= k; ++i) CHECK(quantum_e(i, k, z) == det[static_cast<std::size_t>(i)]);
    }
  }

  TEST_CASE("defining formula on small cases") {
    const test::Vars v2{2};
    CHECK(same_poly(quantum_double_schubert_defining(P("21")), v2.b(1, 1)));
    const test::Vars v3{3};
    CHECK(same_poly(quantum_double_schubert_defining(P("321")), v3.b(1, 2) * (v3.b(1, 1) * v3.b(2, 1) + v3.q(1))));
    const test::Vars v{4};
    const Poly expected = v.b(1, 1) * v.b(1, 2) * v.b(1, 3) * v.b(2, 1) + v.q(1) * v.b(1, 2) * v.b(1, 3) -
                          v.b(1, 1) * v.b(2, 1) * v.q(1) - v.q(1) * v.q(1) - v.q(1) * v.q(2);
    CHECK(same_poly(quantum_double_schubert_defining(P("4213")), expected));
    CHECK(same_poly(quantum_double_schubert_defining(Permutation::identity(4)), v.c(1)));
  }

  TEST_CASE("classical double Schubert polynomials") {
    const test::Vars v3{3};
    CHECK(same_poly(double_schubert_defining(Permutation::identity(3)), v3.c(1)));
    CHECK(same_poly(double_schubert_defining(P("321")), v3.b(1, 1) * v3.b(1, 2) * v3.b(2, 1)));
    const test::Vars v{4};
    CHECK(same_poly(double_schubert_defining(P("4213")), v.b(1, 1) * v.b(1, 2) * v.b(1, 3) * v.b(2, 1)));
  }

  TEST_CASE("q intervals") {
    const test::Vars v{4};
    CHECK(q_interval(4, 1, 2) == v.q(1));
    CHECK(q_interval(4, 1, 3) == v.q(1) * v.q(2));
    CHECK_THROWS_AS(q_interval(4, 2, 2), OutOfRange);
  }

  TEST_CASE("reduced words") {
    for (const auto& u : enumerate_symmetric_group(5)) {
      for (auto strategy : {WordStrategy::FirstDescent, WordStrategy::LastDescent}) {
        const auto word = reduced_word(u, strategy);
        CHECK(static_cast<int>(word.size()) == u.length());
        Permutation p = Permutation::identity(5);
        for (int s : word) p = p.times_transposition(s, s + 1);
        CHECK(p == u);
      }
    }
  }

  TEST_CASE("word independence") {
    for (const auto& w : enumerate_symmetric_group(4)) {
      CHECK(quantum_double_schubert_defining(w, WordStrategy::FirstDescent) ==
            quantum_double_schubert_defining(w, WordStrategy::LastDescent));
      CHECK(double_schubert_defining(w, WordStrategy::FirstDescent) ==
            double_schubert_defining(w, WordStrategy::LastDescent));
    }
  }

  TEST_CASE("transition recursion") {
    CHECK(same_poly(quantum_double_schubert_transition(Permutation::identity(3)), Poly::constant(1, 1)));
    CHECK(same_poly(quantum_double_schubert_transition(P("21")), Poly::binomial(2, 1, 1)));
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : enumerate_symmetric_group(n))
        CHECK(same_poly(quantum_double_schubert_transition(w), quantum_double_schubert_defining(w)));
  }

  TEST_CASE("transition recursion on random permutations of S5") {
    std::mt19937_64 rng(2024);
    auto s5 = enumerate_symmetric_group(5);
    std::shuffle(s5.begin(), s5.end(), rng);
    for (int i = 0; i < 20; ++i)
      CHECK(same_poly(quantum_double_schubert_transition(s5[static_cast<std::size_t>(i)]),
                      quantum_double_schubert_defining(s5[static_cast<std::size_t>(i)])));
  }

  TEST_CASE("specialization chain") {
    for (const auto& w : enumerate_symmetric_group(4)) {
      const Poly quantum = embed_poly(quantum_double_schubert_defining(w), 4);
      const Poly classical = embed_poly(double_schubert_defining(w), 4);
      CHECK(specialize(quantum, false, true) == classical);
      CHECK(specialize(quantum, true, true) == test::to_poly(4, test::single_schubert(w)));
    }
  }

  TEST_CASE("homogeneity in quantum degree") {
    for (const auto& w : enumerate_symmetric_group(5))
      CHECK(is_homogeneous(quantum_double_schubert_transition(w), w.length()));
  }

  TEST_CASE("stability under appending fixed points") {
    for (const auto& w : enumerate_symmetric_group(3))
      CHECK(embed_poly(quantum_double_schubert_defining(w), 5) ==
            embed_poly(quantum_double_schubert_defining(embed(w, 5)), 5));
  }

  TEST_CASE("Monk's rule") {
    CHECK(monk_residual(1, Permutation::identity(2)).is_zero());
    CHECK(monk_residual(1, P("213")).is_zero());
    for (const auto& w : enumerate_symmetric_group(4))
      for (int k = 1; k <= 3; ++k) CHECK(monk_residual(k, w).is_zero());
  }
}
