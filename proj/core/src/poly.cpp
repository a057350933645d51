#include "qbpd/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "qbpd/error.hpp"

namespace qbpd {

namespace {

void check_ambient(int n) {
  if (n < 1 || n > kMaxAmbient) {
    throw SizeLimit("ambient n must lie in 1.." + std::to_string(kMaxAmbient) + ", got " + std::to_string(n));
  }
}

// Sort descending, merge like terms, drop zeros.
void normalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return b.mono < a.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    BigInt c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c += terms[j].coeff;
      ++j;
    }
    if (!c.is_zero()) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

std::uint8_t Monomial::narrow(int e) {
  if (e < 0 || e > 255) throw OutOfRange("exponent out of range: " + std::to_string(e));
  return static_cast<std::uint8_t>(e);
}

bool Monomial::has_y() const {
  for (int j = 1; j <= kMaxAmbient; ++j)
    if (y(j)) return true;
  return false;
}

bool Monomial::has_q() const {
  for (int i = 1; i <= kMaxAmbient; ++i)
    if (q(i)) return true;
  return false;
}

int Monomial::quantum_degree() const {
  int d = 0;
  for (int i = 1; i <= kMaxAmbient; ++i) d += x(i) + y(i) + 2 * q(i);
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t k = 0; k < e_.size(); ++k) {
    const int s = e_[k] + other.e_[k];
    if (s > 255) throw OutOfRange("exponent overflow in monomial product");
    out.e_[k] = static_cast<std::uint8_t>(s);
  }
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto b : e_) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Poly::Poly(int n) : n_(n) { check_ambient(n); }

Poly Poly::constant(int n, const BigInt& c) {
  Poly p(n);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::x(int n, int i) {
  if (i < 1 || i > n) throw OutOfRange("x index " + std::to_string(i));
  Poly p(n);
  Monomial m;
  m.set_x(i, 1);
  p.terms_.push_back({m, 1});
  return p;
}

Poly Poly::y(int n, int j) {
  if (j < 1 || j > n) throw OutOfRange("y index " + std::to_string(j));
  Poly p(n);
  Monomial m;
  m.set_y(j, 1);
  p.terms_.push_back({m, 1});
  return p;
}

Poly Poly::q(int n, int i) {
  if (i < 1 || i > n - 1) throw OutOfRange("q index " + std::to_string(i));
  Poly p(n);
  Monomial m;
  m.set_q(i, 1);
  p.terms_.push_back({m, 1});
  return p;
}

Poly Poly::binomial(int n, int i, int j) { return x(n, i) - y(n, j); }

Poly Poly::from_terms(int n, std::vector<Term> terms) {
  Poly p(n);
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

void Poly::check_same_ambient(const Poly& g) const {
  if (g.n_ != n_) {
    throw AmbientMismatch("ambient sizes differ: " + std::to_string(n_) + " vs " + std::to_string(g.n_));
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& g) {
  check_same_ambient(g);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.end() && b->mono < a->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || a->mono < b->mono) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& g) { return *this += -g; }

Poly& Poly::operator*=(const Poly& g) {
  *this = *this * g;
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  f.check_same_ambient(g);
  std::vector<Poly::Term> out;
  out.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& s : f.terms_)
    for (const auto& t : g.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(f.n_, std::move(out));
}

Poly Poly::scaled(const BigInt& c) const {
  if (c.is_zero()) return Poly(n_);
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

void PolyAccumulator::add(const Poly& f) {
  if (f.ambient() != n_) throw AmbientMismatch("accumulator ambient mismatch");
  pending_.insert(pending_.end(), f.terms().begin(), f.terms().end());
}

void PolyAccumulator::add_scaled(const Poly& f, const BigInt& c) {
  if (f.ambient() != n_) throw AmbientMismatch("accumulator ambient mismatch");
  for (const auto& t : f.terms()) pending_.push_back({t.mono, t.coeff * c});
}

Poly PolyAccumulator::take() {
  Poly out = Poly::from_terms(n_, std::move(pending_));
  pending_.clear();
  return out;
}

Poly specialize(const Poly& f, bool zero_y, bool zero_q) {
  std::vector<Poly::Term> kept;
  for (const auto& t : f.terms()) {
    if (zero_y && t.mono.has_y()) continue;
    if (zero_q && t.mono.has_q()) continue;
    kept.push_back(t);
  }
  // Dropping terms preserves order and normal form.
  return Poly::from_terms(f.ambient(), std::move(kept));
}

namespace {

void check_y_index(const Poly& f, int i) {
  if (i < 1 || i > f.ambient() - 1) {
    throw OutOfRange("y index " + std::to_string(i) + " needs 1 <= i <= " + std::to_string(f.ambient() - 1));
  }
}

}  // namespace

Poly swap_y(const Poly& f, int i) {
  check_y_index(f, i);
  std::vector<Poly::Term> out(f.terms().begin(), f.terms().end());
  for (auto& t : out) {
    const int a = t.mono.y(i);
    t.mono.set_y(i, t.mono.y(i + 1));
    t.mono.set_y(i + 1, a);
  }
  return Poly::from_terms(f.ambient(), std::move(out));
}

Poly divide_by_y_difference(const Poly& f, int i) {
  check_y_index(f, i);
  // Bucket terms by their y_i exponent and sweep from the top: each term
  // c*m with y_i^k moves c*m/y_i into the quotient and leaves the carry
  // c*m*y_{i+1}/y_i at level k-1. Whatever survives at level 0 is the
  // remainder.
  std::map<int, std::vector<Poly::Term>, std::greater<>> levels;
  for (const auto& t : f.terms()) levels[t.mono.y(i)].push_back(t);

  std::vector<Poly::Term> quotient;
  while (!levels.empty()) {
    auto top = levels.begin();
    const int k = top->first;
    std::vector<Poly::Term> bucket = std::move(top->second);
    levels.erase(top);
    normalize(bucket);
    if (bucket.empty()) continue;
    if (k == 0) {
      throw InexactDivision("nonzero remainder dividing by (y" + std::to_string(i) + " - y" +
                            std::to_string(i + 1) + ")");
    }
    auto& below = levels[k - 1];
    for (auto& t : bucket) {
      Monomial q = t.mono;
      q.set_y(i, k - 1);
      Monomial carry = q;
      carry.set_y(i + 1, carry.y(i + 1) + 1);
      quotient.push_back({q, t.coeff});
      below.push_back({carry, std::move(t.coeff)});
    }
  }
  return Poly::from_terms(f.ambient(), std::move(quotient));
}

Poly divided_difference_y(const Poly& f, int i) {
  check_y_index(f, i);
  return divide_by_y_difference(f - swap_y(f, i), i);
}

Poly embed_poly(const Poly& f, int N) {
  if (N < f.ambient()) {
    throw OutOfRange("cannot embed ambient " + std::to_string(f.ambient()) + " into " + std::to_string(N));
  }
  std::vector<Poly::Term> terms(f.terms().begin(), f.terms().end());
  return Poly::from_terms(N, std::move(terms));
}

TermCounts counts(const Poly& f) {
  TermCounts c;
  c.distinct = f.size();
  for (const auto& t : f.terms()) c.weighted += abs(t.coeff);
  return c;
}

bool is_homogeneous(const Poly& f, int degree) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Poly::Term& t) { return t.mono.quantum_degree() == degree; });
}

namespace {

void append_factor(std::string& out, bool& first, char var, int index, int e) {
  if (e == 0) return;
  if (!first) out.push_back('*');
  first = false;
  out.push_back(var);
  out += std::to_string(index);
  if (e > 1) {
    out.push_back('^');
    out += std::to_string(e);
  }
}

}  // namespace

std::string canonical_text(const Poly& f) {
  if (f.is_zero()) return "0";
  const int n = f.ambient();
  std::string out;
  bool leading = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff < 0;
    if (leading) {
      if (negative) out.push_back('-');
    } else {
      out += negative ? " - " : " + ";
    }
    leading = false;

    std::string vars;
    bool first = true;
    for (int i = 1; i <= n; ++i) append_factor(vars, first, 'x', i, t.mono.x(i));
    for (int j = 1; j <= n; ++j) append_factor(vars, first, 'y', j, t.mono.y(j));
    for (int i = 1; i <= n - 1; ++i) append_factor(vars, first, 'q', i, t.mono.q(i));

    const BigInt mag = abs(t.coeff);
    if (vars.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += vars;
    } else {
      out += mag.str();
      out.push_back('*');
      out += vars;
    }
  }
  return out;
}

nlohmann::json to_json(const Poly& f) {
  const int n = f.ambient();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    std::vector<int> xs, ys, qs;
    for (int i = 1; i <= n; ++i) xs.push_back(t.mono.x(i));
    for (int j = 1; j <= n; ++j) ys.push_back(t.mono.y(j));
    for (int i = 1; i <= n - 1; ++i) qs.push_back(t.mono.q(i));
    terms.push_back({{"c", t.coeff.str()}, {"x", xs}, {"y", ys}, {"q", qs}});
  }
  return {{"n", n}, {"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Poly::Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto xs = t.at("x").get<std::vector<int>>();
      const auto ys = t.at("y").get<std::vector<int>>();
      const auto qs = t.at("q").get<std::vector<int>>();
      if (xs.size() != static_cast<std::size_t>(n) || ys.size() != static_cast<std::size_t>(n) ||
          qs.size() != static_cast<std::size_t>(n - 1)) {
        throw ParseError("exponent vector lengths must be n, n, n-1");
      }
      Monomial m;
      for (int i = 1; i <= n; ++i) m.set_x(i, xs[static_cast<std::size_t>(i - 1)]);
      for (int i = 1; i <= n; ++i) m.set_y(i, ys[static_cast<std::size_t>(i - 1)]);
      for (int i = 1; i <= n - 1; ++i) m.set_q(i, qs[static_cast<std::size_t>(i - 1)]);
      terms.push_back({m, BigInt(t.at("c").get<std::string>())});
    }
    return Poly::from_terms(n, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

}  // namespace qbpd
