#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "qbpd/diagram.hpp"
#include "qbpd/permutation.hpp"
#include "qbpd/poly.hpp"

namespace qbpd::test {

inline Permutation P(const char* s) { return Permutation::parse(s); }

/// Grid from tile-code rows; dominoes given by their upper cells.
inline Diagram grid(std::initializer_list<const char*> rows, std::vector<Cell> dominoes = {}) {
  std::string text = std::to_string(rows.size()) + "\n";
  for (const char* r : rows) text += std::string(r) + "\n";
  for (const Cell& c : dominoes) text += std::to_string(c.row) + "," + std::to_string(c.col) + "\n";
  return diagram_from_text(text);
}

/// Equality after moving both sides into the larger ambient ring.
inline bool same_poly(const Poly& f, const Poly& g) {
  const int n = std::max(f.ambient(), g.ambient());
  return embed_poly(f, n) == embed_poly(g, n);
}

struct Vars {
  int n;
  Poly x(int i) const { return Poly::x(n, i); }
  Poly y(int j) const { return Poly::y(n, j); }
  Poly q(int i) const { return Poly::q(n, i); }
  Poly b(int i, int j) const { return Poly::binomial(n, i, j); }
  Poly c(long v) const { return Poly::constant(n, v); }
};

/// Random polynomial with small coefficients in x, y, q of ambient n.
inline Poly random_poly(std::mt19937_64& rng, int n, int max_terms = 6, int max_exp = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> block(0, 2);
  std::vector<Poly::Term> ts;
  const int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m;
    for (int v = 0; v < 3; ++v) {
      const int b = block(rng);
      if (b == 0) m.set_x(std::uniform_int_distribution<int>(1, n)(rng), expo(rng));
      if (b == 1) m.set_y(std::uniform_int_distribution<int>(1, n)(rng), expo(rng));
      if (b == 2 && n > 1) m.set_q(std::uniform_int_distribution<int>(1, n - 1)(rng), expo(rng));
    }
    ts.push_back({m, coeff(rng)});
  }
  return Poly::from_terms(n, std::move(ts));
}

inline int brute_inversions(const Permutation& w) {
  int c = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++c;
  return c;
}

}  // namespace qbpd::test
