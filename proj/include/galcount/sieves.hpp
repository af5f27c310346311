#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace galcount {

enum class SieveKind { Squarefree, Powerful };

/// Indicator table over 1..limit; entry 0 is unused and false.
struct SieveTable {
  SieveKind kind;
  unsigned k;  // powerfulness exponent; 1 for squarefree tables
  std::uint64_t limit;
  std::vector<bool> flags;

  bool operator[](std::uint64_t n) const { return flags[n]; }
  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) c += flags[n];
    return c;
  }
};

/// Exact floor(x^(1/k)).
inline std::uint64_t integer_root(std::uint64_t x, unsigned k) {
  if (k == 0) throw std::invalid_argument("root of order 0");
  if (k == 1 || x < 2) return x;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(x), 1.0L / k));
  auto pow_le = [&](std::uint64_t base) {  // base^k <= x, overflow-safe
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= base;
      if (acc > x) return false;
    }
    return true;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

/// Primes up to `limit` by the sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

/// flags[n] iff no prime square divides n; strikes multiples of p^2.
inline SieveTable squarefree_sieve(std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("sieve limit must be at least 1");
  SieveTable t{SieveKind::Squarefree, 1, limit, std::vector<bool>(limit + 1, true)};
  t.flags[0] = false;
  for (std::uint64_t p : primes_up_to(integer_root(limit, 2))) {
    std::uint64_t sq = p * p;
    for (std::uint64_t m = sq; m <= limit; m += sq) t.flags[m] = false;
  }
  return t;
}

/// flags[n] iff every prime dividing n does so to at least the k-th power.
inline SieveTable powerful_sieve(unsigned k, std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("sieve limit must be at least 1");
  if (k < 1) throw std::invalid_argument("powerfulness exponent must be at least 1");
  SieveTable t{SieveKind::Powerful, k, limit, std::vector<bool>(limit + 1, true)};
  t.flags[0] = false;
  if (k == 1) return t;
  // n fails iff some prime p has v_p(n) in [1, k-1]
  for (std::uint64_t p : primes_up_to(limit)) {
    unsigned __int128 pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    for (std::uint64_t m = p; m <= limit; m += p)
      if (pk > limit || m % static_cast<std::uint64_t>(pk) != 0) t.flags[m] = false;
  }
  return t;
}

/**
 * Number of k-powerful n <= x.
 *
 * Every k-powerful n factors uniquely as a^k * b, where b is a product of
 * distinct prime powers p^e with k < e < 2k. The count is therefore the sum
 * of floor((x/b)^(1/k)) over those b <= x, enumerated depth-first over primes.
 */
inline std::uint64_t powerful_count(unsigned k, std::uint64_t x) {
  if (k < 1) throw std::invalid_argument("powerfulness exponent must be at least 1");
  if (x == 0) return 0;
  if (k == 1) return x;
  std::vector<std::uint64_t> primes = primes_up_to(integer_root(x, k + 1));
  std::uint64_t total = 0;
  // recursive walk over b built from primes[start..]
  auto walk = [&](auto&& self, std::size_t start, std::uint64_t b) -> void {
    total += integer_root(x / b, k);
    for (std::size_t i = start; i < primes.size(); ++i) {
      std::uint64_t p = primes[i];
      unsigned __int128 pe = 1;
      for (unsigned j = 0; j < k + 1; ++j) pe *= p;
      if (pe * b > x) break;
      for (unsigned e = k + 1; e < 2 * k && pe * b <= x; ++e) {
        self(self, i + 1, static_cast<std::uint64_t>(pe * b));
        pe *= p;
      }
    }
  };
  walk(walk, 0, 1);
  return total;
}

/// t(n) for n = 1..limit by a linear sieve; entry 0 is 0.
inline std::vector<std::uint32_t> divisor_counts(std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("sieve limit must be at least 1");
  std::vector<std::uint32_t> t(limit + 1, 0);
  std::vector<std::uint32_t> small_exp(limit + 1, 0);  // exponent of the least prime factor
  std::vector<std::uint64_t> primes;
  t[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (t[i] == 0) {
      primes.push_back(i);
      t[i] = 2;
      small_exp[i] = 1;
    }
    for (std::uint64_t p : primes) {
      if (p * i > limit) break;
      if (i % p == 0) {
        small_exp[p * i] = small_exp[i] + 1;
        t[p * i] = t[i] / (small_exp[i] + 1) * (small_exp[i] + 2);
        break;
      }
      small_exp[p * i] = 1;
      t[p * i] = t[i] * 2;
    }
  }
  return t;
}

struct DivisorBoundReport {
  double max_ratio;      // max t(n) / n^eps
  std::uint64_t argmax;  // first n attaining it
  double bound;          // exp(2^(1/eps) / (eps log 2)); may be +inf
  double log_bound;
  bool holds;
};

/// Scans t(n)/n^eps over n <= limit against the explicit constant for t(n) <= c n^eps.
inline DivisorBoundReport divisor_bound_check(std::uint64_t limit, double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  auto t = divisor_counts(limit);
  DivisorBoundReport r{0.0, 1, 0.0, 0.0, false};
  for (std::uint64_t n = 1; n <= limit; ++n) {
    double ratio = t[n] / std::pow(static_cast<double>(n), epsilon);
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.argmax = n;
    }
  }
  r.log_bound = std::pow(2.0, 1.0 / epsilon) / (epsilon * std::log(2.0));
  r.bound = std::exp(r.log_bound);
  r.holds = std::log(r.max_ratio) <= r.log_bound;
  return r;
}

struct TailReport {
  std::vector<std::uint64_t> cutoffs;
  std::vector<double> partial_sums;  // sum_{n <= cutoff} a_n / n^s
  std::vector<double> increments;    // partial_sums[i] - partial_sums[i-1], i >= 1
  double max_increment;
  double growth_constant;            // max_n A(n) / n^r with A the summatory function
  bool increments_decreasing;
};

/**
 * Numeric probe of the Dirichlet series sum a_n n^-s at the given cutoffs.
 * coeffs[i] holds a_{i+1}. Requires s > r; a sanity probe, not a proof.
 */
inline TailReport dirichlet_tail_probe(std::span<const double> coeffs, double r, double s,
                                       std::span<const std::uint64_t> grid) {
  if (!(s > r)) throw std::domain_error("tail probe needs s > r");
  if (grid.empty()) throw std::invalid_argument("empty cutoff grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1 || grid[i] > coeffs.size()) throw std::invalid_argument("cutoff outside coefficient range");
    if (i && grid[i] <= grid[i - 1]) throw std::invalid_argument("cutoffs must increase strictly");
  }
  TailReport rep{{grid.begin(), grid.end()}, {}, {}, 0.0, 0.0, true};
  double summatory = 0.0, series = 0.0;
  std::size_t next = 0;
  for (std::size_t n = 1; n <= grid.back(); ++n) {
    double a = coeffs[n - 1];
    if (a < 0) throw std::invalid_argument("coefficients must be nonnegative");
    summatory += a;
    series += a / std::pow(static_cast<double>(n), s);
    rep.growth_constant = std::max(rep.growth_constant, summatory / std::pow(static_cast<double>(n), r));
    if (n == grid[next]) {
      rep.partial_sums.push_back(series);
      ++next;
    }
  }
  for (std::size_t i = 1; i < rep.partial_sums.size(); ++i) {
    double inc = rep.partial_sums[i] - rep.partial_sums[i - 1];
    if (!rep.increments.empty() && inc > rep.increments.back()) rep.increments_decreasing = false;
    rep.increments.push_back(inc);
    rep.max_increment = std::max(rep.max_increment, inc);
  }
  return rep;
}

}  // namespace galcount
