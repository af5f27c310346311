#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galcount/sieves.hpp"

namespace galcount {

// ---------------------------------------------------------------------------
// Tallies

/// Cumulative discriminant counts for one group label: sorted (|disc|, multiplicity) pairs.
class DiscriminantTally {
 public:
  DiscriminantTally() = default;

  /// Builds from arbitrary (abs_disc, multiplicity) pairs, merging repeats.
  DiscriminantTally(std::string label, std::vector<std::pair<std::uint64_t, std::uint64_t>> entries)
      : label_(std::move(label)) {
    std::sort(entries.begin(), entries.end());
    for (const auto& [d, m] : entries) {
      if (d < 1) throw std::invalid_argument("abs_disc must be positive");
      if (m < 1) throw std::invalid_argument("multiplicity must be positive");
      if (!entries_.empty() && entries_.back().first == d)
        entries_.back().second += m;
      else
        entries_.emplace_back(d, m);
    }
    cumulative_.reserve(entries_.size());
    std::uint64_t run = 0;
    for (const auto& e : entries_) cumulative_.push_back(run += e.second);
  }

  const std::string& label() const { return label_; }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& entries() const { return entries_; }

  /// Z(x) = sum of multiplicities with abs_disc <= x.
  std::uint64_t count_upto(std::uint64_t x) const {
    auto it = std::upper_bound(entries_.begin(), entries_.end(), x,
                               [](std::uint64_t v, const auto& e) { return v < e.first; });
    if (it == entries_.begin()) return 0;
    return cumulative_[static_cast<std::size_t>(it - entries_.begin()) - 1];
  }

  std::uint64_t total() const { return cumulative_.empty() ? 0 : cumulative_.back(); }

 private:
  std::string label_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries_;
  std::vector<std::uint64_t> cumulative_;
};

struct Sample {
  std::uint64_t x;
  std::uint64_t count;
  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Z(x) at each grid point; the grid must be ascending (repeats allowed).
inline std::vector<Sample> tally_samples(const DiscriminantTally& tally, std::span<const std::uint64_t> grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("sample grid must be ascending");
  std::vector<Sample> out;
  out.reserve(grid.size());
  for (std::uint64_t x : grid) out.push_back({x, tally.count_upto(x)});
  return out;
}

/// Raised for malformed `x,count` sample streams.
class SampleFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void write_samples(std::ostream& os, std::span<const Sample> samples) {
  os << "x,count\n";
  for (const auto& s : samples) os << s.x << ',' << s.count << '\n';
}

namespace detail {

inline std::string chomp(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  return line;
}

/// Strict base-10 parse of a nonnegative integer token.
inline bool parse_u64(const std::string& tok, std::uint64_t& out) {
  if (tok.empty() || tok.size() > 19) return false;
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = v;
  return true;
}

inline std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace detail

inline std::vector<Sample> read_samples(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) return {};
  if (detail::chomp(line) != "x,count") throw SampleFormatError("line 1: expected header 'x,count'");
  std::vector<Sample> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    line = detail::chomp(line);
    if (line.empty()) continue;
    auto f = detail::split_commas(line);
    Sample s{};
    if (f.size() != 2 || !detail::parse_u64(f[0], s.x) || !detail::parse_u64(f[1], s.count))
      throw SampleFormatError("line " + std::to_string(lineno) + ": expected 'x,count' integers");
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic fields

/// Floor-mod into [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

/// d != 1 with d = 1 (mod 4) squarefree, or d = 4m with m = 2, 3 (mod 4) squarefree.
inline bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  std::int64_t r = mod_floor(d, 4);
  if (r == 1) return is_squarefree(static_cast<std::uint64_t>(d < 0 ? -d : d));
  if (r != 0) return false;
  std::int64_t m = d / 4;
  std::int64_t rm = mod_floor(m, 4);
  return (rm == 2 || rm == 3) && is_squarefree(static_cast<std::uint64_t>(m < 0 ? -m : m));
}

/// Sort key: by |d|, negative before positive.
inline bool disc_less(std::int64_t a, std::int64_t b) {
  std::int64_t aa = a < 0 ? -a : a;
  std::int64_t bb = b < 0 ? -b : b;
  if (aa != bb) return aa < bb;
  return a < b;
}

namespace detail {

/// sign_mask[a] bit 0: -a is a fundamental discriminant, bit 1: +a is. Sieve-based.
inline std::vector<std::uint8_t> fundamental_sign_masks(std::uint64_t x) {
  std::vector<std::uint8_t> mask(x + 1, 0);
  if (x < 3) return mask;
  SieveTable sf = squarefree_sieve(x);
  for (std::uint64_t a = 3; a <= x; ++a) {
    if (a % 4 == 1 || a % 4 == 3) {
      if (!sf[a]) continue;
      // +a needs a = 1 mod 4, -a needs a = 3 mod 4
      mask[a] = (a % 4 == 1) ? 2 : 1;
    } else if (a % 4 == 0) {
      std::uint64_t m = a / 4;
      if (!sf[m]) continue;
      // +4m needs m = 2,3 mod 4; -4m needs -m = 2,3 mod 4, i.e. m = 1,2 mod 4
      std::uint8_t bits = 0;
      if (m % 4 == 2 || m % 4 == 3) bits |= 2;
      if (m % 4 == 1 || m % 4 == 2) bits |= 1;
      mask[a] = bits;
    }
  }
  return mask;
}

}  // namespace detail

/// All fundamental discriminants with |d| <= x, ordered by |d| then sign.
inline std::vector<std::int64_t> fundamental_discriminants(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("x must be at least 1");
  auto mask = detail::fundamental_sign_masks(x);
  std::vector<std::int64_t> out;
  for (std::uint64_t a = 3; a <= x; ++a) {
    if (mask[a] & 1) out.push_back(-static_cast<std::int64_t>(a));
    if (mask[a] & 2) out.push_back(static_cast<std::int64_t>(a));
  }
  return out;
}

/// Quadratic fields by |disc|, real and imaginary merged.
inline DiscriminantTally quadratic_tally(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("x must be at least 1");
  auto mask = detail::fundamental_sign_masks(x);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
  for (std::uint64_t a = 3; a <= x; ++a) {
    std::uint64_t m = (mask[a] & 1u) + ((mask[a] >> 1) & 1u);
    if (m) entries.emplace_back(a, m);
  }
  return DiscriminantTally("C2", std::move(entries));
}

inline std::uint64_t count_quadratic(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("x must be at least 1");
  auto mask = detail::fundamental_sign_masks(x);
  std::uint64_t c = 0;
  for (std::uint8_t m : mask) c += (m & 1u) + ((m >> 1) & 1u);
  return c;
}

// ---------------------------------------------------------------------------
// Cyclic fields of odd prime degree

struct ConductorEntry {
  std::uint64_t f;             // conductor
  unsigned t;                  // ramified primes, the wild prime counted once
  std::uint64_t multiplicity;  // (l-1)^(t-1) cyclic degree-l fields of conductor f
  std::uint64_t disc;          // f^(l-1)
};

namespace detail {

inline unsigned __int128 checked_pow(std::uint64_t base, unsigned e) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    acc *= base;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("power exceeds 64 bits");
  }
  return acc;
}

inline void require_odd_prime(std::uint64_t ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("l must be an odd prime");
  for (std::uint64_t d = 3; d * d <= ell; d += 2)
    if (ell % d == 0) throw std::invalid_argument("l must be an odd prime");
}

}  // namespace detail

/**
 * Conductors f <= fmax of cyclic degree-l fields: products of distinct
 * primes p = 1 (mod l), optionally times l^2. Sorted by f.
 */
inline std::vector<ConductorEntry> cyclic_conductors(std::uint64_t ell, std::uint64_t fmax) {
  detail::require_odd_prime(ell);
  (void)detail::checked_pow(fmax, static_cast<unsigned>(ell - 1));
  std::vector<std::uint64_t> split;
  for (std::uint64_t p : primes_up_to(fmax))
    if (p % ell == 1) split.push_back(p);

  std::vector<ConductorEntry> out;
  auto power = [](std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
  };
  auto emit = [&](std::uint64_t f, unsigned t) {
    if (t == 0) return;
    out.push_back({f, t, power(ell - 1, t - 1), power(f, static_cast<unsigned>(ell - 1))});
  };
  auto walk = [&](auto&& self, std::size_t start, std::uint64_t f, unsigned t) -> void {
    emit(f, t);
    for (std::size_t i = start; i < split.size(); ++i) {
      if (split[i] > fmax / f) break;
      self(self, i + 1, f * split[i], t + 1);
    }
  };
  walk(walk, 0, 1, 0);
  if (ell * ell <= fmax) walk(walk, 0, ell * ell, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.f < b.f; });
  return out;
}

inline DiscriminantTally cyclic_tally(std::uint64_t ell, std::uint64_t x) {
  detail::require_odd_prime(ell);
  std::uint64_t fmax = integer_root(x, static_cast<unsigned>(ell - 1));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
  for (const auto& c : cyclic_conductors(ell, fmax)) entries.emplace_back(c.disc, c.multiplicity);
  return DiscriminantTally("C" + std::to_string(ell), std::move(entries));
}

/// Cyclic degree-l fields with discriminant f^(l-1) <= x.
inline std::uint64_t count_cyclic_ell(std::uint64_t ell, std::uint64_t x) {
  detail::require_odd_prime(ell);
  if (x == 0) return 0;
  std::uint64_t fmax = integer_root(x, static_cast<unsigned>(ell - 1));
  std::uint64_t c = 0;
  for (const auto& e : cyclic_conductors(ell, fmax)) c += e.multiplicity;
  return c;
}

// ---------------------------------------------------------------------------
// Biquadratic fields

/// Squarefree m with Q(sqrt m) of discriminant d.
inline std::int64_t radicand_of(std::int64_t d) { return mod_floor(d, 4) == 1 ? d : d / 4; }

/// Discriminant of Q(sqrt m) for squarefree m != 1.
inline std::int64_t discriminant_of(std::int64_t m) { return mod_floor(m, 4) == 1 ? m : 4 * m; }

/// Third quadratic subfield of Q(sqrt d1, sqrt d2).
inline std::int64_t third_discriminant(std::int64_t d1, std::int64_t d2) {
  std::int64_t m1 = radicand_of(d1);
  std::int64_t m2 = radicand_of(d2);
  std::int64_t g = std::gcd(m1, m2);
  return discriminant_of((m1 / g) * (m2 / g));
}

/**
 * Biquadratic fields with |d1 d2 d3| <= x, as triples of quadratic
 * discriminants ordered by disc_less. The conductor-discriminant formula
 * makes |d1 d2 d3| the field discriminant.
 */
inline std::vector<std::array<std::int64_t, 3>> biquadratic_triples(std::uint64_t x) {
  std::vector<std::array<std::int64_t, 3>> out;
  if (x < 1) throw std::invalid_argument("x must be at least 1");
  // |d1| <= |d2| <= |d3| forces |d1| |d2|^2 <= x and |d1| >= 3
  std::uint64_t dmax = integer_root(x / 3, 2);
  if (dmax < 3) return out;
  auto discs = fundamental_discriminants(dmax);
  auto absval = [](std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); };
  for (std::size_t i = 0; i < discs.size(); ++i) {
    std::uint64_t a1 = absval(discs[i]);
    if (static_cast<unsigned __int128>(a1) * a1 * a1 > x) break;
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      std::uint64_t a2 = absval(discs[j]);
      if (static_cast<unsigned __int128>(a1) * a2 * a2 > x) break;
      std::int64_t d3 = third_discriminant(discs[i], discs[j]);
      if (!disc_less(discs[j], d3)) continue;
      if (static_cast<unsigned __int128>(a1) * a2 * absval(d3) > x) continue;
      out.push_back({discs[i], discs[j], d3});
    }
  }
  auto product = [&](const std::array<std::int64_t, 3>& t) { return absval(t[0]) * absval(t[1]) * absval(t[2]); };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    auto pa = product(a), pb = product(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

inline DiscriminantTally biquadratic_tally(std::uint64_t x) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
  for (const auto& t : biquadratic_triples(x)) {
    std::uint64_t p = 1;
    for (auto d : t) p *= static_cast<std::uint64_t>(d < 0 ? -d : d);
    entries.emplace_back(p, 1);
  }
  return DiscriminantTally("V4", std::move(entries));
}

inline std::uint64_t count_biquadratic(std::uint64_t x) { return biquadratic_triples(x).size(); }

// ---------------------------------------------------------------------------
// External census data

struct CensusRecord {
  std::uint64_t degree;
  std::string group_label;
  std::uint64_t abs_disc;
};

/// Malformed census input; line() is 1-based.
class CensusError : public std::runtime_error {
 public:
  CensusError(std::size_t line, const std::string& what)
      : std::runtime_error("census line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline CensusRecord parse_census_line(const std::string& line, std::size_t lineno) {
  auto f = detail::split_commas(line);
  if (f.size() != 3) throw CensusError(lineno, "expected 3 comma-separated fields");
  CensusRecord r{};
  if (!detail::parse_u64(f[0], r.degree) || r.degree < 1) throw CensusError(lineno, "degree is not a positive integer");
  if (f[1].empty()) throw CensusError(lineno, "empty group label");
  r.group_label = f[1];
  if (!detail::parse_u64(f[2], r.abs_disc)) throw CensusError(lineno, "abs_disc is not an integer");
  if (r.abs_disc < 1) throw CensusError(lineno, "abs_disc must be at least 1");
  return r;
}

/// Groups `degree,group,abs_disc` records by label; repeated discriminants accumulate.
inline std::map<std::string, DiscriminantTally> ingest_census(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || detail::chomp(line) != "degree,group,abs_disc")
    throw CensusError(1, "expected header 'degree,group,abs_disc'");
  std::map<std::string, std::map<std::uint64_t, std::uint64_t>> grouped;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    line = detail::chomp(line);
    if (line.empty()) continue;
    auto rec = parse_census_line(line, lineno);
    ++grouped[rec.group_label][rec.abs_disc];
  }
  std::map<std::string, DiscriminantTally> out;
  for (auto& [label, counts] : grouped)
    out.emplace(label, DiscriminantTally(label, {counts.begin(), counts.end()}));
  return out;
}

}  // namespace galcount
