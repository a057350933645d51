#include "qbpd/oracle.hpp"

#include <algorithm>
#include <map>

#include "qbpd/error.hpp"

namespace qbpd {

Poly quantum_e(int i, int k, std::span<const Poly> z) {
  if (k < 0 || static_cast<std::size_t>(k) != z.size()) {
    throw SizeMismatch("quantum_e needs exactly k = " + std::to_string(k) + " diagonal entries");
  }
  if (i < 0 || i > k) throw OutOfRange("quantum_e degree out of range");
  if (k == 0) return Poly::constant(kMaxAmbient, 1);  // only i = 0 reaches here
  const int n = z.front().ambient();
  if (k - 1 > n - 1) throw SizeMismatch("G_k needs q_1..q_{k-1} in the ambient ring");

  // Coefficient lists in lambda: prev2 = D_{j-2}, prev = D_{j-1}.
  std::vector<Poly> prev2{Poly::constant(n, 1)};
  std::vector<Poly> prev{Poly::constant(n, 1), z[0]};
  for (int j = 2; j <= k; ++j) {
    std::vector<Poly> next(static_cast<std::size_t>(j + 1), Poly(n));
    const Poly& zj = z[static_cast<std::size_t>(j - 1)];
    const Poly qj = Poly::q(n, j - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d] += prev[d];
      next[d + 1] += zj * prev[d];
    }
    for (std::size_t d = 0; d < prev2.size(); ++d) next[d + 2] += qj * prev2[d];
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev[static_cast<std::size_t>(i)];
}

std::vector<int> reduced_word(const Permutation& u, WordStrategy strategy) {
  std::vector<int> images = u.images();
  const int n = u.size();
  std::vector<int> peeled;
  for (;;) {
    int descent = 0;
    if (strategy == WordStrategy::FirstDescent) {
      for (int i = 1; i < n && !descent; ++i)
        if (images[static_cast<std::size_t>(i - 1)] > images[static_cast<std::size_t>(i)]) descent = i;
    } else {
      for (int i = n - 1; i >= 1 && !descent; --i)
        if (images[static_cast<std::size_t>(i - 1)] > images[static_cast<std::size_t>(i)]) descent = i;
    }
    if (!descent) break;
    std::swap(images[static_cast<std::size_t>(descent - 1)], images[static_cast<std::size_t>(descent)]);
    peeled.push_back(descent);
  }
  // u = v s_i was peeled right to left.
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

Poly apply_divided_differences(Poly f, std::span<const int> word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference_y(f, *it);
  return f;
}

namespace {

// w0 polynomials are reused across every permutation of the same size.
template <typename Build>
const Poly& cached_top(std::map<int, Poly>& cache, std::mutex& mutex, int n, Build build) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly p = build(n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(p)).first->second;
}

Poly signed_descent(const Poly& top, const Permutation& w, WordStrategy strategy) {
  const int n = w.size();
  const Permutation u = w * Permutation::longest(n);
  const auto word = reduced_word(u, strategy);
  Poly f = apply_divided_differences(top, word);
  const int sign_exp = Permutation::longest(n).length() - w.length();
  return sign_exp % 2 ? -f : f;
}

std::map<int, Poly> g_quantum_top;
std::map<int, Poly> g_classical_top;
std::mutex g_top_mutex;

}  // namespace

Poly quantum_double_schubert_longest(int n) {
  Poly result = Poly::constant(n, 1);
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<Poly> z;
    for (int i = 1; i <= k; ++i) z.push_back(Poly::binomial(n, i, n - k));
    result *= quantum_e(k, k, z);
  }
  return result;
}

Poly quantum_double_schubert_defining(const Permutation& w, WordStrategy strategy) {
  const Poly& top = cached_top(g_quantum_top, g_top_mutex, w.size(), quantum_double_schubert_longest);
  return signed_descent(top, w, strategy);
}

Poly double_schubert_defining(const Permutation& w, WordStrategy strategy) {
  const Poly& top = cached_top(g_classical_top, g_top_mutex, w.size(), [](int n) {
    Poly p = Poly::constant(n, 1);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; i + j <= n; ++j) p *= Poly::binomial(n, i, j);
    return p;
  });
  return signed_descent(top, w, strategy);
}

Poly q_interval(int n, int c, int d) {
  if (!(1 <= c && c < d && d <= n)) {
    throw OutOfRange("q interval (" + std::to_string(c) + "," + std::to_string(d) + ") needs 1 <= c < d <= n");
  }
  Monomial m;
  for (int i = c; i < d; ++i) m.set_q(i, 1);
  return Poly::from_terms(n, {{m, 1}});
}

Poly monk_residual(int k, const Permutation& w_in) {
  if (k < 1 || k > w_in.size() - 1) throw OutOfRange("Monk index k must satisfy 1 <= k <= n-1");
  // A cover w t_{a,n+1} can exist for w in S_n, so the identity is only
  // exact once w sits in S_{n+1}; beyond that no new terms appear.
  const Permutation w = embed(w_in, w_in.size() + 1);
  const int n = w.size();
  auto S = [](const Permutation& u) { return quantum_double_schubert_defining(u); };
  const Poly Sw = S(w);

  Poly lhs = S(Permutation::identity(n).times_transposition(k, k + 1)) * Sw;
  PolyAccumulator rhs(n);
  for (int a = 1; a <= k; ++a) {
    for (int b = k + 1; b <= n; ++b) {
      const Permutation wt = w.times_transposition(a, b);
      if (wt.length() == w.length() + 1) rhs.add(S(wt));
      if (wt.length() == w.length() - (2 * (b - a) - 1)) rhs.add(q_interval(n, a, b) * S(wt));
    }
  }
  Poly ysum(n);
  for (int i = 1; i <= k; ++i) ysum += Poly::y(n, w(i)) - Poly::y(n, i);
  rhs.add(ysum * Sw);
  return lhs - rhs.take();
}

Poly TransitionOracle::operator()(const Permutation& w) {
  if (w.size() > ambient_) {
    throw SizeMismatch("permutation of size " + std::to_string(w.size()) + " exceeds ambient " +
                       std::to_string(ambient_));
  }
  const Permutation full = embed(w, ambient_);
  const auto trimmed = full.trimmed();
  const std::string key = Permutation(trimmed.empty() ? std::vector<int>{1} : trimmed).to_bracket_string();
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  Poly value = compute(full);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

Poly TransitionOracle::compute(const Permutation& pi) {
  const int N = ambient_;
  if (pi.is_identity()) return Poly::constant(N, 1);
  const TransitionData t = transition_setup(pi);
  const Permutation& sigma = t.sigma;

  PolyAccumulator acc(N);
  acc.add(Poly::binomial(N, t.a, sigma(t.a)) * (*this)(sigma));
  for (int c = 1; c < t.a; ++c) {
    if (is_bruhat_cover(sigma, c, t.a)) acc.add((*this)(sigma.times_transposition(c, t.a)));
    if (is_quantum_lower(sigma, c, t.a)) {
      acc.add(q_interval(N, c, t.a) * (*this)(sigma.times_transposition(c, t.a)));
    }
  }
  for (int c = t.a + 1; c <= N; ++c) {
    if (is_quantum_lower(sigma, t.a, c)) {
      acc.add_scaled(q_interval(N, t.a, c) * (*this)(sigma.times_transposition(t.a, c)), -1);
    }
  }
  return acc.take();
}

Poly quantum_double_schubert_transition(const Permutation& w) {
  TransitionOracle oracle(w.size());
  return oracle(w);
}

}  // namespace qbpd
