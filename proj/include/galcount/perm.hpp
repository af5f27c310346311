#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace galcount {

using Point = std::uint32_t;

/// Raised for malformed cycle notation.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when permutations of different degrees are combined.
class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A permutation of the points {0, ..., degree-1}, stored as its image list.
 *
 * Points are 0-based here and 1-based in every textual form. Composition
 * follows the function convention: (p * q)(i) = p(q(i)), so q acts first.
 */
class Perm {
 public:
  /// Takes ownership of an image list; throws std::invalid_argument unless it is a bijection.
  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("permutation of degree 0");
    std::vector<bool> hit(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || hit[p]) throw std::invalid_argument("image list is not a bijection");
      hit[p] = true;
    }
  }

  static Perm identity(std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("permutation of degree 0");
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Perm(std::move(images), Unchecked{});
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return Perm(std::move(inv), Unchecked{});
  }

  /// Cycle lengths, fixed points included, in order of smallest element.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    return lengths;
  }

  /// Nontrivial cycles, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<Point> cyc;
      for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// 1-based cycle notation; the identity prints as "()".
  std::string to_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string s;
    for (const auto& c : cyc) {
      s += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(c[k] + 1);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                  b.images_.begin(), b.images_.end());
  }

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Perm compose(const Perm& p, const Perm& q);

  std::vector<Point> images_;
};

/// (p * q)(i) = p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  return Perm(std::move(out), Perm::Unchecked{});
}

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    // FNV-1a over the image list
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Degree minus the number of cycles (fixed points count as cycles).
inline std::size_t ind(const Perm& p) { return p.degree() - p.cycle_type().size(); }

/// Least common multiple of the cycle lengths.
inline std::uint64_t element_order(const Perm& p) {
  std::uint64_t order = 1;
  for (std::size_t len : p.cycle_type()) order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

/**
 * Parses 1-based disjoint cycle notation such as "(1 2 3)(4 5)" or "()".
 *
 * Points inside a cycle are separated by whitespace; whitespace between
 * cycles is optional. Unmentioned points are fixed.
 */
inline Perm parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " in cycle expression '" + std::string(text) + "'");
  };
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };

  skip_ws();
  if (pos == text.size()) throw fail("empty expression");
  bool saw_empty = false;
  std::size_t n_cycles = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    skip_ws();
    std::vector<Point> cycle;
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] < '0' || text[pos] > '9') throw fail("expected a point");
      std::uint64_t value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree + 1ull) value = degree + 1ull;  // clamp; reported as out of range below
        ++pos;
      }
      if (value == 0 || value > degree)
        throw fail("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
      Point p = static_cast<Point>(value - 1);
      if (used[p]) throw fail("point " + std::to_string(value) + " repeated");
      used[p] = true;
      cycle.push_back(p);
      if (pos < text.size() && text[pos] != ')' && !is_space(text[pos])) throw fail("expected whitespace");
      skip_ws();
    }
    if (pos == text.size()) throw fail("unterminated cycle");
    ++pos;  // ')'
    ++n_cycles;
    if (cycle.empty()) {
      saw_empty = true;
    } else {
      for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  if (saw_empty && n_cycles > 1) throw fail("'()' must stand alone");
  return Perm(std::move(images));
}

}  // namespace galcount
