#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qbpd/diagram.hpp"
#include "qbpd/permutation.hpp"
#include "qbpd/poly.hpp"

namespace qbpd {

/// Cells of a QBPD that contribute to its weight.
///   empty:            single blank cells, factor (x_i - y_j)
///   quantum:          upper cells of dominoes and crossings whose vertical
///                     strand moves up, factor q_i
///   negative_quantum: SW elbows and vertical tiles whose strand moves up,
///                     factor -q_i
struct WeightCells {
  std::vector<Cell> empty;
  std::vector<Cell> quantum;
  std::vector<Cell> negative_quantum;

  /// |E| + 2|Q| + 2|NQ|
  int quantum_degree() const;
};

/// Throws InvalidDiagram unless d validates.
WeightCells weight_cells(const Diagram& d);

/// Binomial weight (-1)^{|NQ|} prod_E (x_i - y_j) prod_{Q u NQ} q_i, in the
/// ambient ring of size `ambient` (0 means d.size()).
Poly bwt(const Diagram& d, int ambient = 0);

/// Monomial weight prod_E x_i prod_Q q_i prod_NQ (-q_i).
Poly wt(const Diagram& d, int ambient = 0);

/// Sum of bwt over the given diagrams.
Poly weight_sum(std::span<const Diagram> ds, int ambient);

/// Sum of binomial weights over all QBPDs of w.
Poly qbpd_polynomial(const Permutation& w);

struct CancellationStats {
  Permutation perm = Permutation::identity(1);
  std::int64_t poly_monomials = 0;  // sum of |coefficients| of the polynomial
  std::int64_t qbpd_monomials = 0;  // sum over QBPDs of 2^{|E|}
  std::int64_t cancellations = 0;   // (qbpd_monomials - poly_monomials) / 2
  std::int64_t qbpd_count = 0;
  std::int64_t distinct_terms = 0;  // number of distinct monomials, for reference
};

/// Throws Error if the monomial difference is odd or negative.
CancellationStats cancellation_stats(const Permutation& w);

inline constexpr int kSweepLimit = 6;

struct SweepSummary {
  int n = 0;
  std::int64_t total = 0;
  double average = 0.0;
  /// Largest cancellation count; ties go to the lexicographically smallest
  /// permutation. Empty when no permutation cancels.
  std::optional<Permutation> argmax;
  std::int64_t max = 0;
  std::vector<CancellationStats> rows;  // lexicographic order
};

/// Cancellation statistics over S_n with `jobs` workers (0 = hardware
/// concurrency). Throws SizeLimit for n > kSweepLimit unless allow_large.
SweepSummary sweep(int n, int jobs = 0, bool allow_large = false);

bool is_cancellation_free(const Permutation& w);

/// LHS - RHS of the transition recursion for pi with every polynomial
/// replaced by its QBPD weight sum. Throws IdentityPermutation.
Poly verify_transition(const Permutation& pi);

/// Runs fn(i) for 0 <= i < count on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// Worker count from an explicit request, else QBPD_JOBS, else hardware.
int resolve_jobs(int requested);

}  // namespace qbpd
