#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace qbpd {

using BigInt = boost::multiprecision::cpp_int;

/// Largest ambient n supported by the packed monomial layout.
inline constexpr int kMaxAmbient = 12;

/// Exponents of x_1..x_n, y_1..y_n, q_1..q_{n-1}. The layout is fixed
/// (x block, then y block, then q block, each kMaxAmbient wide), so the
/// default lexicographic comparison coincides with lex order on the
/// concatenated vector (xexp, yexp, qexp) for every ambient n.
class Monomial {
 public:
  int x(int i) const { return e_[idx(0, i)]; }
  int y(int j) const { return e_[idx(1, j)]; }
  int q(int i) const { return e_[idx(2, i)]; }
  void set_x(int i, int e) { e_[idx(0, i)] = narrow(e); }
  void set_y(int j, int e) { e_[idx(1, j)] = narrow(e); }
  void set_q(int i, int e) { e_[idx(2, i)] = narrow(e); }

  bool has_y() const;
  bool has_q() const;
  /// deg x_i = deg y_j = 1, deg q_i = 2.
  int quantum_degree() const;

  Monomial operator*(const Monomial& other) const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static std::size_t idx(int block, int i) {
    return static_cast<std::size_t>(block * kMaxAmbient + i - 1);
  }
  static std::uint8_t narrow(int e);

  std::array<std::uint8_t, 3 * kMaxAmbient> e_{};
};

/// Exact sparse polynomial in Z[x_1..x_n, y_1..y_n, q_1..q_{n-1}] for a fixed
/// ambient n. Terms are kept sorted in descending monomial order with no zero
/// coefficients, so equality is structural.
class Poly {
 public:
  struct Term {
    Monomial mono;
    BigInt coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Poly(int n);

  static Poly constant(int n, const BigInt& c);
  static Poly x(int n, int i);
  static Poly y(int n, int j);
  static Poly q(int n, int i);
  /// x_i - y_j
  static Poly binomial(int n, int i, int j);
  /// Sums like terms and drops zeros.
  static Poly from_terms(int n, std::vector<Term> terms);

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  Poly scaled(const BigInt& c) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void check_same_ambient(const Poly& g) const;

  int n_;
  std::vector<Term> terms_;
};

/// Collects terms from many polynomials and normalizes once.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(int n) : n_(n) {}
  void add(const Poly& f);
  void add_scaled(const Poly& f, const BigInt& c);
  Poly take();

 private:
  int n_;
  std::vector<Poly::Term> pending_;
};

/// Sets the y and/or q variables to zero.
Poly specialize(const Poly& f, bool zero_y, bool zero_q);

/// s_i f: exchanges y_i and y_{i+1}. Requires 1 <= i <= n-1.
Poly swap_y(const Poly& f, int i);

/// (f - s_i f) / (y_i - y_{i+1}) by exact long division along y_i.
/// Throws InexactDivision if a remainder survives.
Poly divided_difference_y(const Poly& f, int i);

/// Exact division of f by (y_i - y_{i+1}); the building block of
/// divided_difference_y, exposed for testing the remainder check.
Poly divide_by_y_difference(const Poly& f, int i);

/// Reinterprets f in a larger ambient ring (N >= n).
Poly embed_poly(const Poly& f, int N);

struct TermCounts {
  std::size_t distinct = 0;
  BigInt weighted = 0;  // sum of |coefficients|
};
TermCounts counts(const Poly& f);

/// True when every term has quantum degree `degree`.
bool is_homogeneous(const Poly& f, int degree);

/// Terms in descending lex order on (xexp, yexp, qexp), e.g. "x1 - y1".
std::string canonical_text(const Poly& f);

/// {"n": n, "terms": [{"c": "...", "x": [...], "y": [...], "q": [...]}, ...]}
nlohmann::json to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace qbpd

template <>
struct std::hash<qbpd::Monomial> {
  std::size_t operator()(const qbpd::Monomial& m) const noexcept { return m.hash(); }
};
