#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "galcount/fraction.hpp"
#include "galcount/perm.hpp"

namespace galcount {

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// The group is too large for exhaustive element enumeration.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("group order exceeds cap of " + std::to_string(cap) + " elements"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/**
 * A permutation group given by generators.
 *
 * The element list is filled on first request and shared between copies;
 * concurrent readers see a single fill. Elements are listed breadth-first
 * by word length, starting with the identity; each new element is g * e for
 * an earlier element e, scanned in list order and then by generator index.
 */
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators)
      : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (degree_ == 0) throw std::invalid_argument("group degree must be positive");
    if (generators_.empty()) throw std::invalid_argument("group needs at least one generator");
    for (const auto& g : generators_)
      if (g.degree() != degree_)
        throw DegreeMismatch("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                             ", expected " + std::to_string(degree_));
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  /// All elements; throws CapExceeded if the closure passes `cap`.
  const std::vector<Perm>& elements(std::size_t cap = kDefaultCap) const {
    const Cache& c = filled(cap);
    return c.elements;
  }

  std::size_t order(std::size_t cap = kDefaultCap) const { return elements(cap).size(); }

  /// Position of `p` in elements(), if it belongs to the group.
  std::optional<std::size_t> index_of(const Perm& p, std::size_t cap = kDefaultCap) const {
    const Cache& c = filled(cap);
    auto it = c.index.find(p);
    if (it == c.index.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Perm& p, std::size_t cap = kDefaultCap) const { return index_of(p, cap).has_value(); }

 private:
  struct Cache {
    std::mutex mutex;
    bool ready = false;
    std::vector<Perm> elements;
    std::unordered_map<Perm, std::size_t, PermHash> index;
  };

  const Cache& filled(std::size_t cap) const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->ready) {
      std::vector<Perm> elems;
      std::unordered_map<Perm, std::size_t, PermHash> index;
      elems.push_back(Perm::identity(degree_));
      index.emplace(elems.back(), 0);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : generators_) {
          Perm next = g * elems[i];
          if (index.contains(next)) continue;
          if (elems.size() >= cap) throw CapExceeded(cap);
          index.emplace(next, elems.size());
          elems.push_back(std::move(next));
        }
      }
      cache_->elements = std::move(elems);
      cache_->index = std::move(index);
      cache_->ready = true;
    }
    if (cache_->elements.size() > cap) throw CapExceeded(cap);
    return *cache_;
  }

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Full element list, identity first, in breadth-first word order.
inline const std::vector<Perm>& enumerate(const PermGroup& group, std::size_t cap = kDefaultCap) {
  if (cap == 0) throw std::invalid_argument("enumeration cap must be at least 1");
  return group.elements(cap);
}

/// Orbit of point 0 under the generators covers every point. No enumeration.
inline bool is_transitive(const PermGroup& group) {
  std::vector<bool> seen(group.degree(), false);
  std::vector<Point> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : group.generators()) {
      Point q = g(queue[head]);
      if (!seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  }
  return queue.size() == group.degree();
}

struct IndexWitness {
  Perm element;
  std::size_t index;
};

/// First element (in enumeration order) of minimal index among non-identity elements.
inline IndexWitness min_index_witness(const PermGroup& group, std::size_t cap = kDefaultCap) {
  const auto& elems = enumerate(group, cap);
  if (elems.size() == 1) throw std::invalid_argument("trivial group has no non-identity element");
  std::size_t best = 1;
  std::size_t best_ind = ind(elems[1]);
  for (std::size_t i = 2; i < elems.size() && best_ind > 1; ++i) {
    std::size_t v = ind(elems[i]);
    if (v < best_ind) {
      best = i;
      best_ind = v;
    }
  }
  return {elems[best], best_ind};
}

/// a(G) = 1 / min{ind(g) : g != 1}, and 0 for the trivial group.
inline Fraction a_invariant(const PermGroup& group, std::size_t cap = kDefaultCap) {
  if (enumerate(group, cap).size() == 1) return Fraction(0);
  return Fraction(1, static_cast<std::int64_t>(min_index_witness(group, cap).index));
}

}  // namespace galcount
