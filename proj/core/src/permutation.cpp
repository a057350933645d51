#include "qbpd/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "qbpd/error.hpp"

namespace qbpd {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw NotABijection("permutation must be nonempty");
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n) {
      throw NotABijection("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw NotABijection("value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw OutOfRange("permutation size must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw OutOfRange("permutation size must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '[' && text.back() == ']') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw ParseError("empty permutation");

  std::vector<int> images;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError("bad permutation character '" + std::string(1, ch) + "'");
      images.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto field = trim(text.substr(pos, next - pos));
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("bad permutation entry '" + std::string(field) + "'");
      }
      images.push_back(value);
      pos = next + 1;
    }
  }
  return Permutation(std::move(images));
}

int Permutation::length() const {
  int inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::times_transposition(int a, int b) const {
  return right_multiply_transposition(*this, a, b);
}

Permutation Permutation::operator*(const Permutation& u) const {
  if (u.size() != size()) throw SizeMismatch("permutation sizes differ");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(u(i));
  return Permutation(std::move(out));
}

std::vector<int> Permutation::trimmed() const {
  std::vector<int> out = images_;
  while (!out.empty() && out.back() == static_cast<int>(out.size())) out.pop_back();
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 9) {
    for (int v : images_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(images_[i]);
  }
  return out;
}

std::string Permutation::to_bracket_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(images_[i]);
  }
  out.push_back(']');
  return out;
}

Permutation right_multiply_transposition(const Permutation& w, int a, int b) {
  if (!(1 <= a && a < b && b <= w.size())) {
    throw OutOfRange("transposition (" + std::to_string(a) + "," + std::to_string(b) +
                     ") needs 1 <= a < b <= " + std::to_string(w.size()));
  }
  std::vector<int> images = w.images();
  std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(images));
}

namespace {

void check_pair(const Permutation& w, int a, int b) {
  if (!(1 <= a && a < b && b <= w.size())) {
    throw OutOfRange("positions (" + std::to_string(a) + "," + std::to_string(b) +
                     ") need 1 <= a < b <= " + std::to_string(w.size()));
  }
}

}  // namespace

bool is_bruhat_cover(const Permutation& sigma, int a, int b) {
  check_pair(sigma, a, b);
  const int lo = sigma(a);
  const int hi = sigma(b);
  if (lo > hi) return false;
  for (int k = a + 1; k < b; ++k) {
    if (sigma(k) > lo && sigma(k) < hi) return false;
  }
  return true;
}

bool is_quantum_lower(const Permutation& sigma, int c, int d) {
  check_pair(sigma, c, d);
  const int hi = sigma(c);
  const int lo = sigma(d);
  if (hi < lo) return false;
  for (int k = c + 1; k < d; ++k) {
    if (!(sigma(k) < hi && sigma(k) > lo)) return false;
  }
  return true;
}

Permutation embed(const Permutation& w, int N) {
  if (N < w.size()) {
    throw OutOfRange("cannot embed S_" + std::to_string(w.size()) + " into S_" + std::to_string(N));
  }
  std::vector<int> images = w.images();
  for (int v = w.size() + 1; v <= N; ++v) images.push_back(v);
  return Permutation(std::move(images));
}

TransitionData transition_setup(const Permutation& pi) {
  if (pi.is_identity()) throw IdentityPermutation("transition setup needs a non-identity permutation");
  TransitionData t;
  t.n = pi.size();
  while (pi(t.n) == t.n) --t.n;
  for (int i = 1; i <= t.n; ++i)
    if (pi(i) == t.n) t.a = i;
  t.b = t.a + 1;
  for (int i = t.a + 1; i <= t.n; ++i)
    if (pi(i) > pi(t.b)) t.b = i;
  t.sigma = pi.times_transposition(t.a, t.b);
  t.m = t.sigma(t.a);
  t.lower_left_values.push_back(t.m);
  for (int c = t.a - 1; c >= 1; --c) {
    if (is_quantum_lower(t.sigma, c, t.a)) {
      t.lower_left.push_back(c);
      t.lower_left_values.push_back(t.sigma(c));
    }
  }
  return t;
}

std::vector<Permutation> enumerate_symmetric_group(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit) {
  if (n < 1) throw OutOfRange("permutation size must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    if (!visit(Permutation(images))) return;
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace qbpd

std::size_t std::hash<qbpd::Permutation>::operator()(const qbpd::Permutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : w.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}
