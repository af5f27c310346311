#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "galcount/fraction.hpp"
#include "galcount/group.hpp"
#include "galcount/perm.hpp"

namespace galcount {

// ---------------------------------------------------------------------------
// Natural actions

/// The trivial group on one point.
inline PermGroup trivial_group() { return PermGroup(1, {Perm::identity(1)}); }

/// C_n generated by the n-cycle (1 2 ... n).
inline PermGroup natural_cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(std::move(img))});
}

/// S_n generated by (1 2) and (1 2 ... n).
inline PermGroup natural_symmetric(std::size_t n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  if (n <= 2) return natural_cyclic(n);
  std::vector<Point> swap(n);
  for (std::size_t i = 0; i < n; ++i) swap[i] = static_cast<Point>(i);
  std::swap(swap[0], swap[1]);
  return PermGroup(n, {Perm(std::move(swap)), natural_cyclic(n).generators()[0]});
}

/// A_n generated by (1 2 3) and an even long cycle; trivial for n <= 2.
inline PermGroup natural_alternating(std::size_t n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  if (n <= 2) return PermGroup(n, {Perm::identity(n)});
  if (n == 3) return natural_cyclic(3);
  std::vector<Point> three(n);
  for (std::size_t i = 0; i < n; ++i) three[i] = static_cast<Point>(i);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
  // (1 2 ... n) for odd n, (2 3 ... n) for even n
  std::size_t start = (n % 2 == 1) ? 0 : 1;
  for (std::size_t i = start; i < n; ++i) cyc[i] = static_cast<Point>(i + 1 < n ? i + 1 : start);
  return PermGroup(n, {Perm(std::move(three)), Perm(std::move(cyc))});
}

/// Dihedral group of order 2n acting on the vertices of an n-gon (n >= 3).
inline PermGroup natural_dihedral(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral action needs at least 3 points");
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {natural_cyclic(n).generators()[0], Perm(std::move(refl))});
}

// ---------------------------------------------------------------------------
// Derived representations

/**
 * Left-regular representation on the enumerated element list: generator g
 * sends point k to the position of g * elements[k].
 */
inline PermGroup regular_rep(const PermGroup& group, std::size_t cap = kDefaultCap) {
  const auto& elems = enumerate(group, cap);
  std::size_t order = elems.size();
  std::vector<Perm> gens;
  gens.reserve(group.generators().size());
  for (const auto& g : group.generators()) {
    std::vector<Point> img(order);
    for (std::size_t k = 0; k < order; ++k) img[k] = static_cast<Point>(*group.index_of(g * elems[k], cap));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(order, std::move(gens));
}

struct CosetAction {
  PermGroup group;
  bool faithful;
};

/**
 * Action by left translation on the left cosets gH of the subgroup H
 * generated by `subgroup_gens`. Cosets are numbered in order of first
 * appearance while scanning the elements of `group`, so the trivial
 * subgroup reproduces regular_rep exactly.
 */
inline CosetAction coset_action(const PermGroup& group, const std::vector<Perm>& subgroup_gens,
                                std::size_t cap = kDefaultCap) {
  for (const auto& h : subgroup_gens)
    if (!group.contains(h, cap))
      throw std::invalid_argument("subgroup generator " + h.to_string() + " is not in the group");
  std::vector<Perm> hgens = subgroup_gens;
  if (hgens.empty()) hgens.push_back(Perm::identity(group.degree()));
  PermGroup sub(group.degree(), std::move(hgens));
  const auto& h_elems = enumerate(sub, cap);
  const auto& g_elems = enumerate(group, cap);

  auto coset_key = [&](const Perm& g) {
    Perm best = g * h_elems[0];
    for (std::size_t i = 1; i < h_elems.size(); ++i) {
      Perm cand = g * h_elems[i];
      if (cand < best) best = std::move(cand);
    }
    return best;
  };

  std::unordered_map<Perm, std::size_t, PermHash> coset_of_key;
  std::vector<std::size_t> coset_of_elem(g_elems.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < g_elems.size(); ++i) {
    auto [it, fresh] = coset_of_key.emplace(coset_key(g_elems[i]), reps.size());
    if (fresh) reps.push_back(i);
    coset_of_elem[i] = it->second;
  }

  std::size_t degree = reps.size();
  std::vector<Perm> gens;
  for (const auto& s : group.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t c = 0; c < degree; ++c)
      img[c] = static_cast<Point>(coset_of_elem[*group.index_of(s * g_elems[reps[c]], cap)]);
    gens.emplace_back(std::move(img));
  }
  PermGroup image(degree, std::move(gens));
  bool faithful = image.order(cap) == g_elems.size();
  return {std::move(image), faithful};
}

/// H x Z on the grid (i, j) -> i*m + j; H's generators first, then Z's.
inline PermGroup direct_product(const PermGroup& left, const PermGroup& right) {
  std::size_t n = left.degree();
  std::size_t m = right.degree();
  std::vector<Perm> gens;
  for (const auto& h : left.generators()) {
    std::vector<Point> img(n * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) img[i * m + j] = static_cast<Point>(h(static_cast<Point>(i)) * m + j);
    gens.emplace_back(std::move(img));
  }
  for (const auto& z : right.generators()) {
    std::vector<Point> img(n * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) img[i * m + j] = static_cast<Point>(i * m + z(static_cast<Point>(j)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n * m, std::move(gens));
}

/**
 * Imprimitive wreath product A wr H on a*n points, block b holding points
 * b*a .. b*a + a-1. A's generators act inside the first block of each
 * H-orbit on blocks (block 0 when H is transitive); H's generators permute
 * blocks rigidly. The enumerated order is checked against |A|^n |H|.
 */
inline PermGroup wreath(const PermGroup& base, const PermGroup& top, std::size_t cap = kDefaultCap) {
  std::size_t a = base.degree();
  std::size_t n = top.degree();

  std::vector<bool> block_seen(n, false);
  std::vector<std::size_t> orbit_reps;
  for (std::size_t b = 0; b < n; ++b) {
    if (block_seen[b]) continue;
    orbit_reps.push_back(b);
    std::vector<Point> queue{static_cast<Point>(b)};
    block_seen[b] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& h : top.generators()) {
        Point q = h(queue[head]);
        if (!block_seen[q]) {
          block_seen[q] = true;
          queue.push_back(q);
        }
      }
  }

  std::vector<Perm> gens;
  for (std::size_t rep : orbit_reps) {
    for (const auto& g : base.generators()) {
      std::vector<Point> img(a * n);
      for (std::size_t p = 0; p < a * n; ++p) img[p] = static_cast<Point>(p);
      for (std::size_t i = 0; i < a; ++i) img[rep * a + i] = static_cast<Point>(rep * a + g(static_cast<Point>(i)));
      gens.emplace_back(std::move(img));
    }
  }
  for (const auto& h : top.generators()) {
    std::vector<Point> img(a * n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < a; ++i) img[b * a + i] = static_cast<Point>(h(static_cast<Point>(b)) * a + i);
    gens.emplace_back(std::move(img));
  }
  PermGroup result(a * n, std::move(gens));

  std::size_t base_order = base.order(cap);
  std::size_t top_order = top.order(cap);
  unsigned __int128 expected = top_order;
  for (std::size_t b = 0; b < n; ++b) {
    expected *= base_order;
    if (expected > cap) throw CapExceeded(cap);
  }
  if (result.order(cap) != static_cast<std::size_t>(expected))
    throw std::logic_error("wreath product order mismatch");
  return result;
}

// ---------------------------------------------------------------------------
// Specific groups

inline bool is_prime_small(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/**
 * SL_2(p) acting on the p^2 - 1 nonzero column vectors of F_p^2, generated
 * by [[1,1],[0,1]] and [[1,0],[1,1]]. Vector (x, y) is point x*p + y - 1.
 */
inline PermGroup sl2_natural(std::uint64_t p) {
  if (!is_prime_small(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > 97) throw std::invalid_argument("sl2_natural supports p <= 97");
  std::size_t degree = p * p - 1;
  auto point = [p](std::uint64_t x, std::uint64_t y) { return static_cast<Point>(x * p + y - 1); };
  std::vector<Point> upper(degree), lower(degree);
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      upper[point(x, y)] = point((x + y) % p, y);
      lower[point(x, y)] = point(x, (x + y) % p);
    }
  return PermGroup(degree, {Perm(std::move(upper)), Perm(std::move(lower))});
}

/**
 * The nonabelian group of order 27 and exponent 3 (upper unitriangular
 * 3x3 matrices over F_3), acting on the 9 cosets of the non-central
 * subgroup generated by its first generator. The first generator therefore
 * fixes three points.
 */
inline PermGroup heisenberg_mod3() {
  // (a, b, c) stands for [[1,a,c],[0,1,b],[0,0,1]]; index a*9 + b*3 + c.
  auto index = [](int a, int b, int c) { return static_cast<Point>(a * 9 + b * 3 + c); };
  auto left_mult = [&](int a1, int b1, int c1) {
    std::vector<Point> img(27);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) img[index(a, b, c)] = index((a1 + a) % 3, (b1 + b) % 3, (c1 + c + a1 * b) % 3);
    return Perm(std::move(img));
  };
  PermGroup abstract(27, {left_mult(1, 0, 0), left_mult(0, 1, 0)});
  auto act = coset_action(abstract, {abstract.generators()[0]});
  const PermGroup& g = act.group;

  bool ok = act.faithful && g.degree() == 9 && g.order() == 27 && is_transitive(g);
  for (const auto& e : g.elements())
    if (!e.is_identity() && element_order(e) != 3) ok = false;
  const auto& gens = g.generators();
  if (gens[0] * gens[1] == gens[1] * gens[0]) ok = false;
  if (!ok) throw std::logic_error("heisenberg_mod3 failed its self-check");
  return g;
}

/// The two faithful degree-6 actions of S_4 and the one used for the degree-6 table row.
struct S4Degree6Actions {
  PermGroup on_cyclic4;  // cosets of <(1 2 3 4)>
  PermGroup on_klein;    // cosets of <(1 2), (3 4)>
  Fraction a_cyclic4;
  Fraction a_klein;
  /// First of the two (cyclic first) whose a-value is 1/2.
  const PermGroup& selected() const { return a_cyclic4 == Fraction(1, 2) ? on_cyclic4 : on_klein; }
};

inline S4Degree6Actions s4_degree6_actions() {
  PermGroup s4 = natural_symmetric(4);
  auto c4 = coset_action(s4, {parse_cycles("(1 2 3 4)", 4)});
  auto v4 = coset_action(s4, {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)});
  if (!c4.faithful || !v4.faithful || c4.group.degree() != 6 || v4.group.degree() != 6)
    throw std::logic_error("S4 degree-6 actions are not faithful of degree 6");
  Fraction a1 = a_invariant(c4.group);
  Fraction a2 = a_invariant(v4.group);
  return {std::move(c4.group), std::move(v4.group), a1, a2};
}

// ---------------------------------------------------------------------------
// Comparing two representations of one group

/// Raised when paired generator lists do not define one abstract group.
class InconsistentRepresentation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One abstract group in two permutation degrees; gens1[i] and gens2[i] are images of one generator.
struct DualRep {
  std::vector<Perm> gens1;
  std::vector<Perm> gens2;
};

struct DominationWitness {
  /// Generator indices (0-based); the element is gens[word[0]] * gens[word[1]] * ...
  std::vector<std::size_t> word;
  Perm image1;
  Perm image2;
  std::size_t ind1;
  std::size_t ind2;
  Fraction a1;
  Fraction a2;
};

struct DominationReport {
  bool holds;
  Fraction a1;
  Fraction a2;
  std::size_t order;
  std::optional<DominationWitness> witness;
};

/// Pairs the left-regular representation (first) with the given action (second).
inline DualRep regular_vs(const PermGroup& group, std::size_t cap = kDefaultCap) {
  return {regular_rep(group, cap).generators(), group.generators()};
}

/// Heisenberg(27) x C2: regular on 54 points against the product action on 18 points.
inline DualRep heisenberg_c2_dual() { return regular_vs(direct_product(heisenberg_mod3(), natural_cyclic(2))); }

/// "g2*g1" style rendering (1-based); the empty word is "1".
inline std::string word_to_string(const std::vector<std::size_t>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += '*';
    s += 'g' + std::to_string(word[i] + 1);
  }
  return s;
}

/**
 * Checks a2 * ind2(s) >= a1 * ind1(s) for every element s, enumerating the
 * abstract group once as pairs of images. A word that is trivial in one
 * representation but not in the other raises InconsistentRepresentation.
 * On failure the first violating element in breadth-first order is returned.
 */
inline DominationReport check_index_domination(const DualRep& dual, std::size_t cap = kDefaultCap) {
  if (dual.gens1.empty() || dual.gens1.size() != dual.gens2.size())
    throw InconsistentRepresentation("paired generator lists must be nonempty and of equal length (" +
                                     std::to_string(dual.gens1.size()) + " vs " +
                                     std::to_string(dual.gens2.size()) + ")");
  std::size_t n1 = dual.gens1[0].degree();
  std::size_t n2 = dual.gens2[0].degree();
  for (const auto& g : dual.gens1)
    if (g.degree() != n1) throw InconsistentRepresentation("first representation mixes degrees");
  for (const auto& g : dual.gens2)
    if (g.degree() != n2) throw InconsistentRepresentation("second representation mixes degrees");

  struct Node {
    Perm p1;
    Perm p2;
    std::size_t parent;
    std::size_t gen;
  };
  std::vector<Node> nodes;
  std::unordered_map<Perm, std::size_t, PermHash> seen1, seen2;
  nodes.push_back({Perm::identity(n1), Perm::identity(n2), 0, 0});
  seen1.emplace(nodes[0].p1, 0);
  seen2.emplace(nodes[0].p2, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t k = 0; k < dual.gens1.size(); ++k) {
      Perm q1 = dual.gens1[k] * nodes[i].p1;
      Perm q2 = dual.gens2[k] * nodes[i].p2;
      auto it1 = seen1.find(q1);
      auto it2 = seen2.find(q2);
      if (it1 != seen1.end() || it2 != seen2.end()) {
        if (it1 == seen1.end() || it2 == seen2.end() || it1->second != it2->second)
          throw InconsistentRepresentation("generator images do not define isomorphic groups: element " +
                                           q1.to_string() + " vs " + q2.to_string());
        continue;
      }
      if (nodes.size() >= cap) throw CapExceeded(cap);
      seen1.emplace(q1, nodes.size());
      seen2.emplace(q2, nodes.size());
      nodes.push_back({std::move(q1), std::move(q2), i, k});
    }
  }

  DominationReport report{true, Fraction(0), Fraction(0), nodes.size(), std::nullopt};
  if (nodes.size() == 1) return report;
  std::size_t min1 = n1, min2 = n2;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    min1 = std::min(min1, ind(nodes[i].p1));
    min2 = std::min(min2, ind(nodes[i].p2));
  }
  report.a1 = Fraction(1, static_cast<std::int64_t>(min1));
  report.a2 = Fraction(1, static_cast<std::int64_t>(min2));
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    std::size_t i1 = ind(nodes[i].p1);
    std::size_t i2 = ind(nodes[i].p2);
    if (report.a2 * Fraction(static_cast<std::int64_t>(i2)) < report.a1 * Fraction(static_cast<std::int64_t>(i1))) {
      std::vector<std::size_t> word;
      for (std::size_t j = i; j != 0; j = nodes[j].parent) word.push_back(nodes[j].gen);
      report.holds = false;
      report.witness = DominationWitness{std::move(word), nodes[i].p1, nodes[i].p2, i1, i2, report.a1, report.a2};
      break;
    }
  }
  return report;
}

}  // namespace galcount
