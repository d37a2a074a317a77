#pragma once

// Finite posets, finite topological spaces, the Alexandroff topology and the
// specialization order.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "flowinv/error.hpp"

namespace flowinv {

/// A partial order on the elements 0..size()-1. Elements carry display names.
class FinPoset {
 public:
  FinPoset() = default;

  /// `pairs` lists (lesser, greater); reflexive pairs are implied. The relation
  /// must already be transitive and antisymmetric.
  FinPoset(std::vector<std::string> names, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
      : names_(std::move(names)), leq_(names_.size() * names_.size(), 0) {
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i) set(i, i);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw Error(ErrorKind::NotPartialOrder, "pair references unknown element");
      set(a, b);
    }
    check_order();
  }

  /// Builds the reflexive-transitive closure of `pairs`, then checks antisymmetry.
  static FinPoset closure_of(std::vector<std::string> names,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    FinPoset p;
    p.names_ = std::move(names);
    const std::size_t n = p.names_.size();
    p.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) p.set(i, i);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw Error(ErrorKind::NotPartialOrder, "pair references unknown element");
      p.set(a, b);
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (p.leq(i, k))
          for (std::size_t j = 0; j < n; ++j)
            if (p.leq(k, j)) p.set(i, j);
    p.check_order();
    return p;
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  std::vector<std::size_t> downset(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y)
      if (leq(y, x)) out.push_back(y);
    return out;
  }

  std::vector<std::size_t> upset(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y)
      if (leq(x, y)) out.push_back(y);
    return out;
  }

  /// Length of the longest chain ending at x (a minimal element has height 0).
  int height(std::size_t x) const { return heights().at(x); }

  /// Height of the poset; the empty poset has undefined height.
  std::optional<int> height() const {
    if (empty()) return std::nullopt;
    auto h = heights();
    return *std::max_element(h.begin(), h.end());
  }

  std::vector<int> heights() const {
    const std::size_t n = size();
    // Sorting by downset size is a linear extension.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> down(n, 0);
    for (std::size_t x = 0; x < n; ++x) down[x] = downset(x).size();
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return down[a] < down[b]; });
    std::vector<int> h(n, 0);
    for (std::size_t x : order)
      for (std::size_t y = 0; y < n; ++y)
        if (less(y, x)) h[x] = std::max(h[x], h[y] + 1);
    return h;
  }

  /// Elements of height exactly k.
  std::vector<std::size_t> level(int k) const {
    auto h = heights();
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
      if (h[x] == k) out.push_back(x);
    return out;
  }

  friend bool operator==(const FinPoset&, const FinPoset&) = default;

 private:
  void set(std::size_t a, std::size_t b) { leq_[a * size() + b] = 1; }

  void check_order() const {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq(a, b) && leq(b, a))
          throw Error(ErrorKind::NotPartialOrder, "not antisymmetric at " + names_[a] + ", " + names_[b]);
        if (!leq(a, b)) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (leq(b, c) && !leq(a, c))
            throw Error(ErrorKind::NotPartialOrder,
                        "not transitive at " + names_[a] + " <= " + names_[b] + " <= " + names_[c]);
      }
  }

  std::vector<std::string> names_;
  std::vector<char> leq_;
};

/// A topology on at most 64 points; each open set is a bitmask over point indices.
class FinSpace {
 public:
  using Mask = std::uint64_t;
  static constexpr std::size_t max_points = 64;

  FinSpace() : opens_{0} {}

  FinSpace(std::vector<std::string> points, std::vector<Mask> opens) : points_(std::move(points)) {
    if (points_.size() > max_points) throw Error(ErrorKind::NotTopology, "too many points");
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    opens_ = std::move(opens);
    verify();
  }

  std::size_t size() const { return points_.size(); }
  const std::string& point(std::size_t i) const { return points_.at(i); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Mask>& opens() const { return opens_; }

  Mask full() const { return size() == 64 ? ~Mask{0} : ((Mask{1} << size()) - 1); }

  bool is_open(Mask m) const { return std::binary_search(opens_.begin(), opens_.end(), m); }

  /// Smallest closed set containing point x.
  Mask closure(std::size_t x) const {
    Mask outside = 0;
    for (Mask u : opens_)
      if (!(u >> x & 1)) outside |= u;
    return full() & ~outside;
  }

  /// Smallest open set containing point x.
  Mask minimal_neighborhood(std::size_t x) const {
    Mask m = full();
    for (Mask u : opens_)
      if (u >> x & 1) m &= u;
    return m;
  }

  friend bool operator==(const FinSpace&, const FinSpace&) = default;

 private:
  void verify() const {
    if (!is_open(0) || !is_open(full())) throw Error(ErrorKind::NotTopology, "missing empty set or whole space");
    for (Mask u : opens_) {
      if (u & ~full()) throw Error(ErrorKind::NotTopology, "open set mentions unknown point");
      for (Mask v : opens_)
        if (!is_open(u | v) || !is_open(u & v))
          throw Error(ErrorKind::NotTopology, "opens not closed under union/intersection");
    }
  }

  std::vector<std::string> points_;
  std::vector<Mask> opens_;
};

struct SeparationFlags {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
  friend bool operator==(const SeparationFlags&, const SeparationFlags&) = default;
};

struct MultigraphLikeCheck {
  bool ok = true;
  std::optional<std::size_t> witness;
};

/// x <= y iff x lies in the closure of {y}. Throws NotT0 when two points share a closure.
inline FinPoset specialization_order(const FinSpace& space) {
  const std::size_t n = space.size();
  std::vector<FinSpace::Mask> cl(n);
  for (std::size_t x = 0; x < n; ++x) cl[x] = space.closure(x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (cl[x] == cl[y])
        throw Error(ErrorKind::NotT0, "points " + space.point(x) + " and " + space.point(y) + " have equal closures");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (x != y && (cl[y] >> x & 1)) pairs.emplace_back(x, y);
  return FinPoset(space.points(), pairs);
}

/// The space whose opens are the upsets of `poset`.
inline FinSpace alexandroff_space(const FinPoset& poset) {
  const std::size_t n = poset.size();
  if (n > FinSpace::max_points) throw Error(ErrorKind::NotTopology, "too many points");
  std::vector<FinSpace::Mask> principal(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : poset.upset(x)) principal[x] |= FinSpace::Mask{1} << y;
  // Every upset is a union of principal upsets.
  std::unordered_set<FinSpace::Mask> opens{0};
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<FinSpace::Mask> current(opens.begin(), opens.end());
    for (auto u : current) opens.insert(u | principal[x]);
  }
  return FinSpace(poset.names(), {opens.begin(), opens.end()});
}

inline SeparationFlags separation_axioms(const FinSpace& space) {
  const std::size_t n = space.size();
  SeparationFlags f{true, true, true};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto ux = space.minimal_neighborhood(x);
      const auto uy = space.minimal_neighborhood(y);
      if (ux == uy) f.t0 = false;
      if (ux >> y & 1) f.t1 = false;
      if (ux & uy) f.t2 = false;
    }
  return f;
}

/// Height <= 1 and every principal downset has at most 3 elements.
inline MultigraphLikeCheck is_multigraph_like(const FinPoset& poset) {
  const auto h = poset.heights();
  for (std::size_t x = 0; x < poset.size(); ++x)
    if (h[x] > 1 || poset.downset(x).size() > 3) return {false, x};
  return {true, std::nullopt};
}

/// Connectivity of the comparability graph; the empty poset is disconnected.
inline bool is_connected_poset(const FinPoset& poset) {
  const std::size_t n = poset.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y)
      if (!seen[y] && poset.comparable(x, y)) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == n;
}

}  // namespace flowinv
