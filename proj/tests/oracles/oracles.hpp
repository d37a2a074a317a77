#pragma once

// Independent reference implementations used to derive and freeze expected values.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "flowinv/flowinv.hpp"

namespace flowinv::oracle {

// ---------------------------------------------------------------- posets

/// Number of upward-closed subsets, by testing every subset.
inline std::size_t count_upsets(const FinPoset& p) {
  const std::size_t n = p.size();
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool up = true;
    for (std::size_t x = 0; x < n && up; ++x)
      if (m >> x & 1)
        for (std::size_t y = 0; y < n && up; ++y)
          if (p.leq(x, y) && !(m >> y & 1)) up = false;
    count += up;
  }
  return count;
}

/// Longest chain ending at each element, by testing every subset for being a chain.
inline std::vector<int> chain_heights(const FinPoset& p) {
  const std::size_t n = p.size();
  std::vector<int> h(n, 0);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    bool chain = true;
    std::size_t top = n;
    int size = 0;
    for (std::size_t x = 0; x < n && chain; ++x) {
      if (!(m >> x & 1)) continue;
      ++size;
      for (std::size_t y = 0; y < n && chain; ++y)
        if ((m >> y & 1) && !p.comparable(x, y)) chain = false;
      if (top == n || p.leq(top, x)) top = x;
    }
    if (chain) h[top] = std::max(h[top], size - 1);
  }
  return h;
}

/// One representative of every poset on n points: closures of all relations
/// compatible with the natural order 0 < 1 < ... < n-1.
inline std::vector<FinPoset> all_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::set<std::vector<bool>> seen;
  std::vector<FinPoset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (m >> k & 1) pairs.push_back(slots[k]);
    auto p = FinPoset::closure_of(names, pairs);
    std::vector<bool> key;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) key.push_back(p.leq(i, j));
    if (seen.insert(key).second) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------- multigraphs

/// Every connected multigraph (labeled, loops and parallel edges allowed) with
/// at least one edge and |V| + |E| <= max_cells.
inline std::vector<Multigraph> connected_multigraphs(std::size_t max_cells) {
  std::vector<Multigraph> out;
  for (std::size_t v = 1; v < max_cells; ++v) {
    std::vector<std::pair<std::size_t, std::size_t>> kinds;
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a; b < v; ++b) kinds.emplace_back(a, b);
    for (std::size_t e = 1; v + e <= max_cells; ++e) {
      // multisets of size e over kinds, as non-decreasing index sequences
      std::vector<std::size_t> pick(e, 0);
      while (true) {
        Multigraph g;
        g.vertex_count = v;
        for (auto k : pick) g.edges.push_back(kinds[k]);
        if (g.connected()) out.push_back(std::move(g));
        std::size_t i = e;
        while (i > 0 && pick[i - 1] == kinds.size() - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < e; ++j) pick[j] = pick[i - 1];
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- pairs

/// Random renaming and reindexing of every entity, with every rotation word
/// cyclically shifted. Face references are carried along by dart names.
inline InvariantPair relabel(const InvariantPair& p, std::mt19937_64& rng) {
  auto perm = [&](std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
  };
  const auto& d = p.diagram;
  const auto sp = perm(d.saddles.size()), ep = perm(d.separatrices.size());
  const auto vp = perm(p.vertices.size()), ap = perm(p.annuli.size());
  const std::string tag = std::to_string(rng() % 1000);

  InvariantPair q;
  q.tori = p.tori;
  q.diagram.saddles.resize(d.saddles.size());
  q.diagram.separatrices.resize(d.separatrices.size());
  for (std::size_t s = 0; s < d.saddles.size(); ++s) {
    Saddle sd = d.saddles[s];
    sd.id = "S" + tag + "_" + std::to_string(sp[s]);
    for (auto& dt : sd.rotation) dt.separatrix = ep[dt.separatrix];
    if (!sd.rotation.empty())
      std::rotate(sd.rotation.begin(), sd.rotation.begin() + static_cast<long>(rng() % sd.rotation.size()),
                  sd.rotation.end());
    q.diagram.saddles[sp[s]] = std::move(sd);
  }
  for (std::size_t e = 0; e < d.separatrices.size(); ++e)
    q.diagram.separatrices[ep[e]] = {"E" + tag + "_" + std::to_string(ep[e]), sp[d.separatrices[e].source],
                                     sp[d.separatrices[e].target], d.separatrices[e].twisted};

  const detail::RibbonIndex before(d), after(q.diagram);
  q.vertices.resize(p.vertices.size());
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    VertexNode node = p.vertices[v];
    node.id = "V" + tag + "_" + std::to_string(vp[v]);
    if (node.label == VertexLabel::Diagram)
      node.component = after.component_of_saddle(sp[before.components()[node.component].saddles.front()]);
    else
      node.component = 0;
    q.vertices[vp[v]] = std::move(node);
  }
  auto carry = [&](const Attachment& at) {
    Attachment out{vp[at.vertex], std::nullopt};
    if (at.face) {
      const auto g = before.global_face(p.vertices[at.vertex].component, *at.face);
      const auto dt = before.faces()[g].sides.front();
      out.face = after.local_face(after.face_of(Dart{ep[dt.separatrix], dt.end}.index()));
    }
    return out;
  };
  q.annuli.resize(p.annuli.size());
  for (std::size_t a = 0; a < p.annuli.size(); ++a)
    q.annuli[ap[a]] = {"A" + tag + "_" + std::to_string(ap[a]), carry(p.annuli[a].neg), carry(p.annuli[a].pos)};
  return q;
}

/// The counts that pair_isomorphic compares before any search; pairs that
/// differ here are rejected by the oracle without backtracking.
inline std::vector<std::size_t> count_signature(const InvariantPair& p) {
  std::vector<std::size_t> key{p.diagram.saddles.size(), p.diagram.separatrices.size(), p.vertices.size(),
                               p.annuli.size(),          p.tori,
                               p.count(VertexLabel::C),   p.count(VertexLabel::N),
                               p.count(VertexLabel::B),   detail::RibbonIndex(p.diagram).faces().size()};
  std::vector<std::size_t> degrees;
  for (const auto& s : p.diagram.saddles) degrees.push_back(static_cast<std::size_t>(saddle_degree(s)));
  std::sort(degrees.begin(), degrees.end());
  key.insert(key.end(), degrees.begin(), degrees.end());
  return key;
}

// ---------------------------------------------------------------- brute-force enumeration

/// Exact size of a connected model: saddle multiplicities and leaf, annulus and torus counts.
struct ExactShape {
  std::vector<int> ks;  // sorted
  std::size_t c = 0, n = 0, b = 0, annuli = 0, tori = 0;
  friend auto operator<=>(const ExactShape&, const ExactShape&) = default;
};

/// Generates every labeled candidate without symmetry reduction and deduplicates
/// with the backtracking oracle. Results are cached per exact shape and mode.
class BruteForce {
 public:
  /// Classes of diagrams with exactly these saddle multiplicities (any order)
  /// and exactly `faces` faces.
  const std::vector<SaddleDiagram>& diagram_classes(const std::vector<int>& sorted_ks, std::size_t faces,
                                                    bool reversal) {
    auto key = std::make_tuple(sorted_ks, faces, reversal);
    if (auto it = diagram_cache_.find(key); it != diagram_cache_.end()) return it->second;
    std::vector<SaddleDiagram> classes;
    auto ks = sorted_ks;
    do {
      for_each_raw_diagram(ks, [&](const SaddleDiagram& d) {
        if (detail::RibbonIndex(d).faces().size() != faces) return;
        for (const auto& c : classes)
          if (diagrams_isomorphic(c, d, IsoMode{reversal})) return;
        classes.push_back(d);
      });
    } while (std::next_permutation(ks.begin(), ks.end()));
    return diagram_cache_.emplace(key, std::move(classes)).first->second;
  }

  /// Connected pair classes of exactly this shape.
  const std::vector<InvariantPair>& pair_classes(const ExactShape& shape, bool reversal) {
    auto key = std::make_pair(shape, reversal);
    if (auto it = pair_cache_.find(key); it != pair_cache_.end()) return it->second;
    std::vector<InvariantPair> classes;
    const IsoMode mode{reversal};
    auto offer = [&](const InvariantPair& p) {
      if (!validate_pair(p).empty() || assembly_components(p).size() != 1) return;
      for (const auto& c : classes)
        if (pair_isomorphic(c, p, mode)) return;
      classes.push_back(p);
    };
    const bool bare = shape.ks.empty() && shape.c + shape.n + shape.b + shape.annuli == 0;
    if (shape.tori > 0) {
      if (bare) {
        InvariantPair t;
        t.tori = shape.tori;
        offer(t);
      }
    } else if (!bare) {
      const std::size_t leaves = shape.c + shape.n + shape.b;
      // A diagram with darts has at least one face.
      const bool feasible = 2 * shape.annuli >= leaves + (shape.ks.empty() ? 0 : 1);
      if (feasible) {
        const std::size_t faces = 2 * shape.annuli - leaves;
        const auto& diagrams = shape.ks.empty() ? (faces == 0 ? empty_diagram_ : no_diagrams_)
                                                : diagram_classes(shape.ks, faces, reversal);
        for (const auto& d : diagrams) for_each_matching(d, detail::RibbonIndex(d), shape, offer);
      }
    }
    return pair_cache_.emplace(key, std::move(classes)).first->second;
  }

  /// Union of the classes of every exact shape within the bounds.
  std::vector<InvariantPair> classes_within(const EnumBounds& b) {
    std::vector<InvariantPair> out;
    const std::size_t nmax = b.orientable_only ? 0 : b.max_n;
    const std::size_t bmax = b.closed_only ? 0 : b.max_b;
    for (const auto& ks : k_multisets(b.max_saddles, b.max_k_sum))
      for (std::size_t c = 0; c <= b.max_centers; ++c)
        for (std::size_t n = 0; n <= nmax; ++n)
          for (std::size_t bb = 0; bb <= bmax; ++bb)
            for (std::size_t a = 0; a <= b.max_annuli; ++a)
              for (std::size_t t = 0; t <= b.max_tori; ++t) {
                const auto& cls = pair_classes({ks, c, n, bb, a, t}, b.mode.allow_reversal);
                out.insert(out.end(), cls.begin(), cls.end());
              }
    return out;
  }

 private:
  static std::vector<std::vector<int>> k_multisets(std::size_t max_saddles, std::size_t max_sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo, std::size_t left) -> void {
      out.push_back(cur);
      if (cur.size() == max_saddles) return;
      for (int k = lo; static_cast<std::size_t>(k) <= left; ++k) {
        cur.push_back(k);
        self(self, k, left - static_cast<std::size_t>(k));
        cur.pop_back();
      }
    };
    rec(rec, 0, max_sum);
    return out;
  }

  /// Every assignment of alternating end patterns to the saddles and every
  /// bijection from outgoing to incoming slots.
  template <class F>
  static void for_each_raw_diagram(const std::vector<int>& ks, F&& f) {
    const std::size_t n = ks.size();
    for (std::uint64_t phase = 0; phase < (std::uint64_t{1} << n); ++phase) {
      std::vector<std::pair<std::size_t, std::size_t>> outs, ins;
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t slot = 0; slot < static_cast<std::size_t>(2 * ks[s] + 2); ++slot)
          ((slot + (phase >> s & 1)) % 2 == 0 ? outs : ins).emplace_back(s, slot);
      std::vector<std::size_t> perm(ins.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        SaddleDiagram d;
        for (std::size_t s = 0; s < n; ++s)
          d.saddles.push_back({"s" + std::to_string(s), SaddleKind::Interior, ks[s],
                               std::vector<Dart>(static_cast<std::size_t>(2 * ks[s] + 2))});
        for (std::size_t e = 0; e < outs.size(); ++e) {
          d.separatrices.push_back({"e" + std::to_string(e), outs[e].first, ins[perm[e]].first, false});
          d.saddles[outs[e].first].rotation[outs[e].second] = {e, End::Out};
          d.saddles[ins[perm[e]].first].rotation[ins[perm[e]].second] = {e, End::In};
        }
        if (validate_diagram(d).empty()) f(d);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  /// Every perfect matching of the attachment points (faces and labeled leaves)
  /// with both orientations of each annulus.
  template <class F>
  static void for_each_matching(const SaddleDiagram& d, const detail::RibbonIndex& idx, const ExactShape& shape,
                                F&& offer) {
    InvariantPair base;
    base.diagram = d;
    for (std::size_t c = 0; c < idx.components().size(); ++c)
      base.vertices.push_back({"p" + std::to_string(c), VertexLabel::Diagram, c});
    std::vector<Attachment> points;
    for (std::size_t f = 0; f < idx.faces().size(); ++f) points.push_back({idx.faces()[f].component, idx.local_face(f)});
    auto add_leaves = [&](VertexLabel l, std::size_t count) {
      for (std::size_t i = 0; i < count; ++i) {
        points.push_back({base.vertices.size(), std::nullopt});
        base.vertices.push_back({std::string(to_string(l)) + std::to_string(i), l, 0});
      }
    };
    add_leaves(VertexLabel::C, shape.c);
    add_leaves(VertexLabel::N, shape.n);
    add_leaves(VertexLabel::B, shape.b);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<char> used(points.size(), 0);
    auto rec = [&](auto&& self) -> void {
      std::size_t i = 0;
      while (i < points.size() && used[i]) ++i;
      if (i == points.size()) {
        for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << pairs.size()); ++flips) {
          InvariantPair p = base;
          for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [x, y] = pairs[k];
            if (flips >> k & 1) std::swap(x, y);
            p.annuli.push_back({"a" + std::to_string(k), points[x], points[y]});
          }
          offer(p);
        }
        return;
      }
      used[i] = 1;
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        pairs.emplace_back(i, j);
        self(self);
        pairs.pop_back();
        used[j] = 0;
      }
      used[i] = 0;
    };
    rec(rec);
  }

  std::vector<SaddleDiagram> empty_diagram_{SaddleDiagram{}};
  std::vector<SaddleDiagram> no_diagrams_;
  std::map<std::tuple<std::vector<int>, std::size_t, bool>, std::vector<SaddleDiagram>> diagram_cache_;
  std::map<std::pair<ExactShape, bool>, std::vector<InvariantPair>> pair_cache_;
};

}  // namespace flowinv::oracle
