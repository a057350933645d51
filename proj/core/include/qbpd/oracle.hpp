#pragma once

#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "qbpd/permutation.hpp"
#include "qbpd/poly.hpp"

namespace qbpd {

/// Coefficient of lambda^i in det(1 + lambda G_k), where G_k is tridiagonal
/// with diagonal z_1..z_k, superdiagonal q_1..q_{k-1} and subdiagonal -1.
/// Uses the continuant D_j = (1 + lambda z_j) D_{j-1} + lambda^2 q_{j-1} D_{j-2}.
/// Throws SizeMismatch unless |z| = k, and OutOfRange unless 0 <= i <= k.
Poly quantum_e(int i, int k, std::span<const Poly> z);

enum class WordStrategy { FirstDescent, LastDescent };

/// A reduced word a_1..a_l with u = s_{a_1} ... s_{a_l}, built by peeling
/// descents off the right end of u.
std::vector<int> reduced_word(const Permutation& u, WordStrategy strategy = WordStrategy::FirstDescent);

/// d_{a_1} ... d_{a_l} f for the word a_1..a_l (rightmost operator first).
Poly apply_divided_differences(Poly f, std::span<const int> word);

/// prod_{k=1}^{n-1} E_k^k(x_1 - y_{n-k}, ..., x_k - y_{n-k}).
Poly quantum_double_schubert_longest(int n);

/// (-1)^{l(w0) - l(w)} d^y_{w w0} applied to the longest-element polynomial.
Poly quantum_double_schubert_defining(const Permutation& w,
                                      WordStrategy strategy = WordStrategy::FirstDescent);

/// Classical double Schubert polynomial from prod_{i+j<=n} (x_i - y_j).
Poly double_schubert_defining(const Permutation& w,
                              WordStrategy strategy = WordStrategy::FirstDescent);

/// q_c q_{c+1} ... q_{d-1} in ambient n. Throws OutOfRange unless c < d.
Poly q_interval(int n, int c, int d);

/// LHS - RHS of the quantum Monk rule for S_{s_k} * S_w, every polynomial
/// taken from quantum_double_schubert_defining. For w in S_n the rule is
/// evaluated in S_{n+1} (ambient n+1 in the result), which contains every
/// cover w t_ab with a <= k < b.
Poly monk_residual(int k, const Permutation& w);

/// Quantum double Schubert polynomials from the transition recursion with
/// base case 1 at the identity. Every permutation met during the recursion
/// lives in S_N for the N of the first query; results are memoized by the
/// one-line notation with trailing fixed points removed. Safe to share
/// between threads.
class TransitionOracle {
 public:
  explicit TransitionOracle(int ambient) : ambient_(ambient) {}
  int ambient() const { return ambient_; }
  /// Throws SizeMismatch if w.size() > ambient.
  Poly operator()(const Permutation& w);

 private:
  Poly compute(const Permutation& w);

  int ambient_;
  std::mutex mutex_;
  std::unordered_map<std::string, Poly> memo_;
};

Poly quantum_double_schubert_transition(const Permutation& w);

}  // namespace qbpd
