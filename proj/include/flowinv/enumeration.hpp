#pragma once

// Enumeration of invariant pairs (connected models) up to isomorphism within
// size bounds, and class counting by surface type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "flowinv/flow_graph.hpp"
#include "flowinv/isomorphism.hpp"
#include "flowinv/saddle_diagram.hpp"
#include "flowinv/surface.hpp"

namespace flowinv {

struct EnumBounds {
  std::size_t max_saddles = 0;
  std::size_t max_k_sum = 0;
  std::size_t max_centers = 0;
  std::size_t max_n = 0;
  std::size_t max_b = 0;
  std::size_t max_annuli = 0;
  std::size_t max_tori = 0;
  bool closed_only = false;
  bool orientable_only = false;
  IsoMode mode{};
};

struct EnumOptions {
  /// Permutes internal generation order; results must not change.
  std::optional<std::uint64_t> shuffle_seed;
  /// Called with every generated candidate before deduplication.
  std::function<void(const InvariantPair&, const CanonicalForm&)> observer;
};

struct EnumeratedPair {
  InvariantPair pair;
  CanonicalForm form;
};

struct ClassKey {
  bool orientable = true;
  long genus = 0;
  long boundary = 0;
  std::size_t saddles = 0;

  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

struct ClassCount {
  std::size_t count = 0;
  /// Least canonical form among the counted classes.
  CanonicalForm representative;
};

using ClassTable = std::map<ClassKey, ClassCount>;

namespace detail {

/// Structural sort key used to pick one representative per class independent of generation order.
inline std::vector<std::size_t> structure_key(const InvariantPair& p) {
  std::vector<std::size_t> key;
  for (const auto& s : p.diagram.saddles) {
    key.push_back(static_cast<std::size_t>(s.k));
    for (auto dt : s.rotation) key.push_back(dt.index());
  }
  for (const auto& e : p.diagram.separatrices) {
    key.push_back(e.source);
    key.push_back(e.target);
  }
  for (const auto& v : p.vertices) {
    key.push_back(static_cast<std::size_t>(v.label));
    key.push_back(v.component);
  }
  for (const auto& a : p.annuli)
    for (const auto* at : {&a.neg, &a.pos}) {
      key.push_back(at->vertex);
      key.push_back(at->face ? *at->face + 1 : 0);
    }
  key.push_back(p.tori);
  return key;
}

template <class T>
void maybe_shuffle(std::vector<T>& v, const EnumOptions& opt, std::uint64_t salt) {
  if (!opt.shuffle_seed) return;
  std::mt19937_64 rng(*opt.shuffle_seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  std::shuffle(v.begin(), v.end(), rng);
}

/// Non-decreasing k-vectors of length n with sum <= max_sum.
inline void k_vectors(std::size_t n, std::size_t max_sum, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  const int lo = cur.empty() ? 0 : cur.back();
  const auto used = static_cast<std::size_t>(std::accumulate(cur.begin(), cur.end(), 0));
  for (int k = lo; used + static_cast<std::size_t>(k) * (n - cur.size()) <= max_sum; ++k) {
    cur.push_back(k);
    k_vectors(n, max_sum, cur, out);
    cur.pop_back();
  }
}

/// All diagrams on the given saddles with outgoing darts at even slots.
inline std::vector<SaddleDiagram> diagrams_for(const std::vector<int>& ks) {
  std::vector<std::pair<std::size_t, std::size_t>> out_slots, in_slots;
  for (std::size_t s = 0; s < ks.size(); ++s)
    for (std::size_t slot = 0; slot < static_cast<std::size_t>(2 * ks[s] + 2); ++slot)
      (slot % 2 == 0 ? out_slots : in_slots).emplace_back(s, slot);
  const std::size_t edges = out_slots.size();
  std::vector<std::size_t> perm(edges);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SaddleDiagram> out;
  do {
    SaddleDiagram d;
    for (std::size_t s = 0; s < ks.size(); ++s)
      d.saddles.push_back({"s" + std::to_string(s), SaddleKind::Interior, ks[s],
                           std::vector<Dart>(static_cast<std::size_t>(2 * ks[s] + 2))});
    for (std::size_t e = 0; e < edges; ++e) {
      const auto [src, src_slot] = out_slots[e];
      const auto [tgt, tgt_slot] = in_slots[perm[e]];
      d.separatrices.push_back({"e" + std::to_string(e), src, tgt, false});
      d.saddles[src].rotation[src_slot] = {e, End::Out};
      d.saddles[tgt].rotation[tgt_slot] = {e, End::In};
    }
    if (validate_diagram(d).empty()) out.push_back(std::move(d));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline bool leaf_allowed(VertexLabel l, const EnumBounds& b) {
  if (l == VertexLabel::N && b.orientable_only) return false;
  if (l == VertexLabel::B && b.closed_only) return false;
  return true;
}

inline std::size_t leaf_budget(VertexLabel l, const EnumBounds& b) {
  if (!leaf_allowed(l, b)) return 0;
  return l == VertexLabel::C ? b.max_centers : l == VertexLabel::N ? b.max_n : b.max_b;
}

/// Perfect matchings of the faces of d by annuli to other faces or to new leaves,
/// restricted to connected results.
class PairBuilder {
 public:
  PairBuilder(const SaddleDiagram& d, const EnumBounds& b) : d_(d), b_(b), idx_(d) {
    matched_.assign(idx_.faces().size(), 0);
    for (std::size_t c = 0; c < idx_.components().size(); ++c)
      diagram_vertices_.push_back({"p" + std::to_string(c), VertexLabel::Diagram, c});
  }

  std::vector<InvariantPair> run() {
    recurse();
    return std::move(out_);
  }

 private:
  struct Edge {
    // face ids, or a leaf label (encoded in `leaf`) on one side
    std::size_t neg_face, pos_face;
    std::optional<VertexLabel> leaf;
    bool leaf_is_neg = false;
  };

  void recurse() {
    std::size_t f = 0;
    while (f < matched_.size() && matched_[f]) ++f;
    if (f == matched_.size()) {
      emit();
      return;
    }
    if (edges_.size() == b_.max_annuli) return;
    matched_[f] = 1;
    const bool pos_f = idx_.faces()[f].flow_positive;
    for (std::size_t g = f + 1; g < matched_.size(); ++g) {
      if (matched_[g] || idx_.faces()[g].flow_positive == pos_f) continue;
      matched_[g] = 1;
      for (int order = 0; order < 2; ++order) {
        edges_.push_back(order == 0 ? Edge{f, g, std::nullopt, false} : Edge{g, f, std::nullopt, false});
        recurse();
        edges_.pop_back();
      }
      matched_[g] = 0;
    }
    for (auto l : {VertexLabel::C, VertexLabel::N, VertexLabel::B}) {
      auto& used = leaves_[static_cast<std::size_t>(l)];
      if (used == leaf_budget(l, b_)) continue;
      ++used;
      for (int order = 0; order < 2; ++order) {
        edges_.push_back(Edge{f, f, l, order == 0});
        recurse();
        edges_.pop_back();
      }
      --used;
    }
    matched_[f] = 0;
  }

  bool connected() const {
    const auto nc = idx_.components().size();
    std::vector<std::size_t> parent(nc);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t parts = nc;
    for (const auto& e : edges_) {
      if (e.leaf) continue;
      auto x = find(idx_.faces()[e.neg_face].component), y = find(idx_.faces()[e.pos_face].component);
      if (x != y) {
        parent[x] = y;
        --parts;
      }
    }
    return parts == 1;
  }

  void emit() {
    if (!connected()) return;
    InvariantPair p;
    p.diagram = d_;
    p.vertices = diagram_vertices_;
    auto face_end = [&](std::size_t f) {
      return Attachment{idx_.faces()[f].component, idx_.local_face(f)};
    };
    std::size_t leaf_no = 0;
    for (const auto& e : edges_) {
      AnnulusEdge a;
      a.id = "a" + std::to_string(p.annuli.size());
      if (e.leaf) {
        const auto v = p.vertices.size();
        p.vertices.push_back({std::string(to_string(*e.leaf)) + std::to_string(++leaf_no), *e.leaf, 0});
        const Attachment leaf{v, std::nullopt};
        a.neg = e.leaf_is_neg ? leaf : face_end(e.neg_face);
        a.pos = e.leaf_is_neg ? face_end(e.neg_face) : leaf;
      } else {
        a.neg = face_end(e.neg_face);
        a.pos = face_end(e.pos_face);
      }
      p.annuli.push_back(std::move(a));
    }
    out_.push_back(std::move(p));
  }

  const SaddleDiagram& d_;
  const EnumBounds& b_;
  RibbonIndex idx_;
  std::vector<char> matched_;
  std::vector<VertexNode> diagram_vertices_;
  std::vector<Edge> edges_;
  std::size_t leaves_[3] = {0, 0, 0};
  std::vector<InvariantPair> out_;
};

inline std::size_t pair_size(const InvariantPair& p) {
  std::size_t leaves = 0;
  for (const auto& v : p.vertices)
    if (v.label != VertexLabel::Diagram) ++leaves;
  return p.diagram.saddles.size() + leaves + p.annuli.size() + p.tori;
}

}  // namespace detail

/// One representative per diagram class (mode-dependent), including the empty diagram.
inline std::vector<SaddleDiagram> enumerate_diagrams(const EnumBounds& b, const EnumOptions& opt = {}) {
  std::map<CanonicalForm, SaddleDiagram> classes;
  std::vector<std::vector<int>> shapes;
  for (std::size_t n = 0; n <= b.max_saddles; ++n) {
    std::vector<int> cur;
    detail::k_vectors(n, b.max_k_sum, cur, shapes);
  }
  detail::maybe_shuffle(shapes, opt, 1);
  for (const auto& ks : shapes) {
    auto ds = detail::diagrams_for(ks);
    detail::maybe_shuffle(ds, opt, 2 + ks.size());
    for (auto& d : ds) {
      auto form = diagram_canonical_form(d, b.mode);
      auto it = classes.find(form);
      const InvariantPair cand{d, {}, {}, 0};
      if (it == classes.end())
        classes.emplace(std::move(form), std::move(d));
      else if (detail::structure_key(cand) < detail::structure_key(InvariantPair{it->second, {}, {}, 0}))
        it->second = std::move(d);
    }
  }
  std::vector<std::pair<std::size_t, const std::pair<const CanonicalForm, SaddleDiagram>*>> order;
  for (const auto& entry : classes) order.emplace_back(entry.second.saddles.size(), &entry);
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SaddleDiagram> out;
  for (const auto& [n, entry] : order) out.push_back(entry->second);
  return out;
}

/// One representative per class of connected models within the bounds, ordered
/// by size (saddles + leaves + annuli + tori) and then by canonical form.
inline std::vector<EnumeratedPair> enumerate_pairs(const EnumBounds& b, const EnumOptions& opt = {}) {
  std::map<CanonicalForm, InvariantPair> classes;
  auto offer = [&](InvariantPair p) {
    auto form = canonical_form(p, b.mode);
    if (opt.observer) opt.observer(p, form);
    auto it = classes.find(form);
    if (it == classes.end())
      classes.emplace(std::move(form), std::move(p));
    else if (detail::structure_key(p) < detail::structure_key(it->second))
      it->second = std::move(p);
  };

  if (b.max_tori >= 1) offer(InvariantPair{{}, {}, {}, 1});
  if (b.max_annuli >= 1) {
    const VertexLabel leaves[] = {VertexLabel::C, VertexLabel::N, VertexLabel::B};
    for (auto x : leaves)
      for (auto y : leaves) {
        std::size_t need[3] = {0, 0, 0};
        ++need[static_cast<std::size_t>(x)];
        ++need[static_cast<std::size_t>(y)];
        bool ok = true;
        for (auto l : leaves) ok = ok && need[static_cast<std::size_t>(l)] <= detail::leaf_budget(l, b);
        if (!ok) continue;
        InvariantPair p;
        p.vertices = {{std::string(to_string(x)) + "1", x, 0}, {std::string(to_string(y)) + "2", y, 0}};
        p.annuli = {{"a0", {0, std::nullopt}, {1, std::nullopt}}};
        offer(std::move(p));
      }
  }

  auto diagrams = enumerate_diagrams(b, opt);
  detail::maybe_shuffle(diagrams, opt, 7);
  for (const auto& d : diagrams) {
    if (d.empty()) continue;
    auto pairs = detail::PairBuilder(d, b).run();
    detail::maybe_shuffle(pairs, opt, 11);
    for (auto& p : pairs) offer(std::move(p));
  }

  std::vector<EnumeratedPair> out;
  for (auto& [form, p] : classes) out.push_back({std::move(p), form});
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return detail::pair_size(x.pair) < detail::pair_size(y.pair);
  });
  return out;
}

inline ClassTable count_classes(const EnumBounds& b, const EnumOptions& opt = {}) {
  ClassTable table;
  for (const auto& e : enumerate_pairs(b, opt)) {
    const auto sig = reconstruct(e.pair).signature.components.front();
    const ClassKey key{sig.orientable, sig.genus, sig.boundary, e.pair.diagram.saddles.size()};
    auto& slot = table[key];
    if (slot.count == 0 || e.form < slot.representative) slot.representative = e.form;
    ++slot.count;
  }
  return table;
}

}  // namespace flowinv
