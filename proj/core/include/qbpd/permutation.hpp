#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qbpd {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-based; transpositions act on the right, so w * t_ab swaps the images at
/// positions a and b.
class Permutation {
 public:
  /// Validates that `images` is a bijection of {1..n}. Throws NotABijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation longest(int n);  // w0 = n n-1 ... 1

  /// Accepts "4213" (digit string, n <= 9) or "10,2,1,...".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  int length() const;
  bool is_identity() const;
  Permutation inverse() const;

  /// w * t_ab. Requires 1 <= a < b <= n.
  Permutation times_transposition(int a, int b) const;
  /// Right multiplication by another permutation: (w * u)(i) = w(u(i)).
  Permutation operator*(const Permutation& u) const;

  /// One-line images with trailing fixed points removed ("" for identity).
  std::vector<int> trimmed() const;

  /// Digit string for n <= 9, comma separated otherwise.
  std::string to_string() const;
  /// Always "[a,b,c]".
  std::string to_bracket_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// w * t_ab; throws OutOfRange unless 1 <= a < b <= n.
Permutation right_multiply_transposition(const Permutation& w, int a, int b);

/// sigma * t_ab covers sigma in Bruhat order: l(sigma t_ab) = l(sigma) + 1.
bool is_bruhat_cover(const Permutation& sigma, int a, int b);

/// l(sigma t_cd) = l(sigma) - l(t_cd), with l(t_cd) = 2(d - c) - 1.
bool is_quantum_lower(const Permutation& sigma, int c, int d);

/// Appends fixed points n+1..N. Throws OutOfRange if N < n.
Permutation embed(const Permutation& w, int N);

/// Data driving the transition recursion for pi: n is the largest
/// non-fixed point, a = pi^{-1}(n), b maximizes pi over (a, n],
/// sigma = pi t_ab, m = sigma(a). `lower_left` lists the positions c < a with
/// sigma t_ca quantum-lower than sigma in descending order, and
/// `lower_left_values[i] = sigma(a_i)` with index 0 holding m.
struct TransitionData {
  int n = 0;
  int a = 0;
  int b = 0;
  int m = 0;
  Permutation sigma = Permutation::identity(1);
  std::vector<int> lower_left;
  std::vector<int> lower_left_values;
};

/// Throws IdentityPermutation for the identity.
TransitionData transition_setup(const Permutation& pi);

/// Every permutation of S_n in lexicographic one-line order.
std::vector<Permutation> enumerate_symmetric_group(int n);

/// Streams S_n in lexicographic order; stops early when `visit` returns false.
void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit);

}  // namespace qbpd

template <>
struct std::hash<qbpd::Permutation> {
  std::size_t operator()(const qbpd::Permutation& w) const noexcept;
};
