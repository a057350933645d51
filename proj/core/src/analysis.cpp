#include "qbpd/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "qbpd/error.hpp"
#include "qbpd/moves.hpp"
#include "qbpd/oracle.hpp"

namespace qbpd {

int WeightCells::quantum_degree() const {
  return static_cast<int>(empty.size() + 2 * quantum.size() + 2 * negative_quantum.size());
}

WeightCells weight_cells(const Diagram& d) {
  if (!is_valid(d)) {
    const auto problems = validate(d);
    throw InvalidDiagram(problems.empty() ? "invalid diagram" : problems.front().message);
  }
  WeightCells w;
  for (int i = 1; i <= d.size(); ++i)
    for (int j = 1; j <= d.size(); ++j)
      if (d.at(i, j) == TileKind::Blank && !d.in_domino(i, j)) w.empty.push_back({i, j});
  for (const Cell& top : d.dominoes()) w.quantum.push_back(top);

  for (const PipeTrace& t : trace_pipes(d)) {
    for (const PipeStep& s : t.steps) {
      const TileKind tile = d.at(s.cell);
      const bool upward = s.entry == Side::South && s.exit == Side::North;
      if (tile == TileKind::SW) {
        w.negative_quantum.push_back(s.cell);
      } else if (tile == TileKind::NS && upward) {
        w.negative_quantum.push_back(s.cell);
      } else if (tile == TileKind::Cross && upward) {
        w.quantum.push_back(s.cell);
      }
    }
  }
  std::sort(w.quantum.begin(), w.quantum.end());
  std::sort(w.negative_quantum.begin(), w.negative_quantum.end());
  return w;
}

namespace {

Monomial q_monomial(const WeightCells& w) {
  Monomial m;
  for (const Cell& c : w.quantum) m.set_q(c.row, m.q(c.row) + 1);
  for (const Cell& c : w.negative_quantum) m.set_q(c.row, m.q(c.row) + 1);
  return m;
}

int resolve_ambient(const Diagram& d, int ambient) {
  if (ambient == 0) return d.size();
  if (ambient < d.size()) throw SizeMismatch("ambient smaller than the diagram");
  return ambient;
}

}  // namespace

Poly bwt(const Diagram& d, int ambient) {
  const int n = resolve_ambient(d, ambient);
  const WeightCells w = weight_cells(d);
  const BigInt sign = w.negative_quantum.size() % 2 ? -1 : 1;
  Poly out = Poly::from_terms(n, {{q_monomial(w), sign}});
  for (const Cell& c : w.empty) out = out * Poly::binomial(n, c.row, c.col);
  return out;
}

Poly wt(const Diagram& d, int ambient) {
  const int n = resolve_ambient(d, ambient);
  const WeightCells w = weight_cells(d);
  Monomial m = q_monomial(w);
  for (const Cell& c : w.empty) m.set_x(c.row, m.x(c.row) + 1);
  const BigInt sign = w.negative_quantum.size() % 2 ? -1 : 1;
  return Poly::from_terms(n, {{m, sign}});
}

Poly weight_sum(std::span<const Diagram> ds, int ambient) {
  PolyAccumulator acc(ambient);
  for (const Diagram& d : ds) acc.add(bwt(d, ambient));
  return acc.take();
}

Poly qbpd_polynomial(const Permutation& w) {
  const auto ds = enumerate_qbpds(w);
  return weight_sum(ds, w.size());
}

CancellationStats cancellation_stats(const Permutation& w) {
  const auto ds = enumerate_qbpds(w);
  CancellationStats s;
  s.perm = w;
  s.qbpd_count = static_cast<std::int64_t>(ds.size());
  for (const Diagram& d : ds) {
    const auto cells = weight_cells(d);
    s.qbpd_monomials += std::int64_t{1} << cells.empty.size();
  }
  const Poly f = weight_sum(ds, w.size());
  const TermCounts c = counts(f);
  if (c.weighted > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw OutOfRange("monomial count exceeds 64 bits");
  }
  s.poly_monomials = static_cast<std::int64_t>(c.weighted);
  s.distinct_terms = static_cast<std::int64_t>(c.distinct);
  const std::int64_t diff = s.qbpd_monomials - s.poly_monomials;
  if (diff < 0 || diff % 2 != 0) {
    throw Error("inconsistent monomial counts for " + w.to_bracket_string() + ": QBPD " +
                std::to_string(s.qbpd_monomials) + " vs polynomial " + std::to_string(s.poly_monomials));
  }
  s.cancellations = diff / 2;
  return s;
}

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QBPD_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

SweepSummary sweep(int n, int jobs, bool allow_large) {
  if (n < 1) throw OutOfRange("sweep size must be >= 1");
  if (n > kSweepLimit && !allow_large) {
    throw SizeLimit("sweeps above S_" + std::to_string(kSweepLimit) + " need an explicit override");
  }
  const auto perms = enumerate_symmetric_group(n);
  SweepSummary out;
  out.n = n;
  out.rows.resize(perms.size());
  parallel_for(perms.size(), jobs, [&](std::size_t i) { out.rows[i] = cancellation_stats(perms[i]); });

  for (const auto& row : out.rows) {
    out.total += row.cancellations;
    // rows are in lexicographic order, so strict > keeps the smallest on ties
    if (row.cancellations > out.max) {
      out.max = row.cancellations;
      out.argmax = row.perm;
    }
  }
  out.average = static_cast<double>(out.total) / static_cast<double>(perms.size());
  return out;
}

bool is_cancellation_free(const Permutation& w) { return cancellation_stats(w).cancellations == 0; }

Poly verify_transition(const Permutation& pi) {
  const TransitionData t = transition_setup(pi);
  const int N = pi.size();
  std::map<Permutation, Poly> memo;
  auto T = [&](const Permutation& u) -> const Poly& {
    auto it = memo.find(u);
    if (it == memo.end()) it = memo.emplace(u, qbpd_polynomial(u)).first;
    return it->second;
  };
  const Permutation& sigma = t.sigma;

  PolyAccumulator rhs(N);
  rhs.add(Poly::binomial(N, t.a, sigma(t.a)) * T(sigma));
  for (int c = 1; c < t.a; ++c) {
    if (is_bruhat_cover(sigma, c, t.a)) rhs.add(T(sigma.times_transposition(c, t.a)));
    if (is_quantum_lower(sigma, c, t.a)) rhs.add(q_interval(N, c, t.a) * T(sigma.times_transposition(c, t.a)));
  }
  for (int c = t.a + 1; c <= N; ++c) {
    if (is_quantum_lower(sigma, t.a, c)) {
      rhs.add_scaled(q_interval(N, t.a, c) * T(sigma.times_transposition(t.a, c)), -1);
    }
  }
  return T(pi) - rhs.take();
}

}  // namespace qbpd
