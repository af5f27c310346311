#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace galcount {

/// Exact nonnegative-denominator rational in lowest terms.
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("fraction with zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Fraction reciprocal() const { return Fraction(den_, num_); }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Fraction((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.reciprocal(); }
  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    std::int64_t l = std::lcm(a.den_, b.den_);
    return Fraction(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return a + Fraction(-b.num_, b.den_);
  }

  friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    // denominators are positive, so cross-multiplication preserves order
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  /// "p/q", or just "p" when q = 1.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Parses "p", "p/q" (optionally signed). Throws std::invalid_argument.
inline Fraction parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Fraction(v);
    }
    std::string a = text.substr(0, slash);
    std::string b = text.substr(slash + 1);
    std::int64_t p = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    std::int64_t q = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return Fraction(p, q);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a fraction: '" + text + "'");
  }
}

}  // namespace galcount
