#pragma once

// Brute-force reference computations. Each one takes a different route from
// the library code it is compared against and must stay that way.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Images = std::vector<std::uint32_t>;

inline Images compose(const Images& p, const Images& q) {
  Images r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Images inverse(const Images& p) {
  Images r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

/**
 * Group order by orbit-stabilizer recursion: |G| = |b^G| |G_b| where G_b is
 * generated by the Schreier generators of the orbit. Generator sets are
 * deduplicated at each level; fine for orders up to ~10^4.
 */
inline std::uint64_t schreier_order(std::vector<Images> gens, std::size_t degree) {
  Images id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::uint64_t order = 1;
  for (std::uint32_t base = 0; base < degree; ++base) {
    std::erase_if(gens, [&](const Images& g) { return g == id; });
    if (gens.empty()) break;
    // orbit of `base` with transversal
    std::map<std::uint32_t, Images> transversal{{base, id}};
    std::vector<std::uint32_t> queue{base};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& g : gens) {
        std::uint32_t q = g[queue[h]];
        if (!transversal.contains(q)) {
          transversal.emplace(q, compose(g, transversal[queue[h]]));
          queue.push_back(q);
        }
      }
    order *= transversal.size();
    std::set<Images> schreier;
    for (const auto& [pt, u] : transversal)
      for (const auto& g : gens) {
        Images s = compose(inverse(transversal.at(g[pt])), compose(g, u));
        if (s != id) schreier.insert(std::move(s));
      }
    gens.assign(schreier.begin(), schreier.end());
  }
  return order;
}

/// Exponent vector of n by trial division.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline bool squarefree_by_factoring(std::uint64_t n) {
  for (auto [p, e] : factor(n))
    if (e > 1) return false;
  return n != 0;
}

/// Fundamental discriminant test straight from the two-case definition.
inline bool fundamental(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  std::int64_t r = ((d % 4) + 4) % 4;
  auto a = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (r == 1) return squarefree_by_factoring(a);
  if (r == 0) {
    std::int64_t m = d / 4;
    std::int64_t rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree_by_factoring(a / 4);
  }
  return false;
}

/// Multiplicity of each |d| <= x over fundamental discriminants d, scanning -x..x.
inline std::map<std::uint64_t, std::uint64_t> quadratic_scan(std::int64_t x) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::int64_t d = -x; d <= x; ++d)
    if (fundamental(d)) ++out[static_cast<std::uint64_t>(d < 0 ? -d : d)];
  return out;
}

inline std::int64_t mobius(std::uint64_t n) {
  std::int64_t mu = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

/// #{u mod d : gcd(u, d) = 1, u^ell = 1 mod d} = #Hom((Z/d)^*, C_ell).
inline std::uint64_t ell_torsion(std::uint64_t d, std::uint64_t ell) {
  if (d == 1) return 1;
  std::uint64_t c = 0;
  for (std::uint64_t u = 1; u < d; ++u) {
    if (std::gcd(u, d) != 1) continue;
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < ell; ++i) acc = acc * u % d;
    c += acc == 1;
  }
  return c;
}

/**
 * Cyclic degree-ell fields of conductor exactly f: characters of order ell
 * with conductor exactly f, by Moebius inversion of the Hom counts over
 * divisors, divided by the ell-1 characters generating the same field.
 */
inline std::uint64_t cyclic_fields_with_conductor(std::uint64_t f, std::uint64_t ell) {
  if (f == 1) return 0;
  std::int64_t primitive = 0;
  for (std::uint64_t d = 1; d <= f; ++d)
    if (f % d == 0) primitive += mobius(f / d) * static_cast<std::int64_t>(ell_torsion(d, ell));
  return static_cast<std::uint64_t>(primitive) / (ell - 1);
}

/// Multiplicity per discriminant f^(ell-1) <= x from the character oracle.
inline std::map<std::uint64_t, std::uint64_t> cyclic_by_characters(std::uint64_t ell, std::uint64_t x) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t f = 2;; ++f) {
    std::uint64_t disc = 1;
    for (std::uint64_t i = 0; i + 1 < ell; ++i) disc *= f;
    if (disc > x) break;
    if (auto m = cyclic_fields_with_conductor(f, ell)) out[disc] += m;
  }
  return out;
}

inline bool is_perfect_square(std::int64_t v) {
  if (v < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
    if (c * c == v) return true;
  return false;
}

/**
 * Biquadratic fields by pair enumeration: for fundamental d1, d2 the third
 * subfield is the fundamental d3 with d1 d2 d3 a square. Each field is
 * found once per pair of its subfields and deduplicated as a sorted triple.
 */
inline std::map<std::uint64_t, std::uint64_t> biquadratic_pairs(std::int64_t x) {
  std::vector<std::int64_t> discs;
  for (std::int64_t d = -x; d <= x; ++d)
    if (fundamental(d)) discs.push_back(d);
  auto absv = [](std::int64_t v) { return v < 0 ? -v : v; };
  std::stable_sort(discs.begin(), discs.end(), [&](auto a, auto b) { return absv(a) < absv(b); });
  std::set<std::array<std::int64_t, 3>> triples;
  for (std::size_t i = 0; i < discs.size(); ++i)
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      std::int64_t p = absv(discs[i]) * absv(discs[j]);
      if (3 * p > x) break;
      for (std::int64_t d3 : discs) {
        if (absv(d3) * p > x) break;
        if (d3 == discs[i] || d3 == discs[j]) continue;
        if (!is_perfect_square(discs[i] * discs[j] * d3)) continue;
        std::array<std::int64_t, 3> t{discs[i], discs[j], d3};
        std::sort(t.begin(), t.end());
        triples.insert(t);
      }
    }
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& t : triples)
    ++out[static_cast<std::uint64_t>(absv(t[0]) * absv(t[1]) * absv(t[2]))];
  return out;
}

/// k-powerful indicator for 1..limit by factoring each n.
inline std::vector<bool> powerful_by_factoring(unsigned k, std::uint64_t limit) {
  std::vector<bool> out(limit + 1, false);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    bool ok = true;
    for (auto [p, e] : factor(n))
      if (e < k) {
        ok = false;
        break;
      }
    out[n] = ok;
  }
  return out;
}

}  // namespace oracle
