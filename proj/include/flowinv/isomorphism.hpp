#pragma once

// Isomorphism of invariant pairs in the orientation-preserving mode (~+) and
// the mode that also admits global orbit reversal (~).
//
// Two independent routes decide isomorphism:
//  * pair_isomorphic: exhaustive backtracking over separatrix, saddle, vertex
//    and annulus bijections, checking every commuting-label condition.
//  * canonical_form: a deterministic code from rooted traversals of the
//    rotation system, minimized over all roots.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flowinv/error.hpp"
#include "flowinv/flow_graph.hpp"
#include "flowinv/saddle_diagram.hpp"

namespace flowinv {

struct IsoMode {
  /// ~ instead of ~+: separatrix directions, edge label order and rotation
  /// words may all be reversed at once.
  bool allow_reversal = false;

  static constexpr IsoMode oriented() { return {false}; }
  static constexpr IsoMode unoriented() { return {true}; }
  friend bool operator==(const IsoMode&, const IsoMode&) = default;
};

struct CyclicWitness {
  std::size_t shift = 0;
  bool reflected = false;
  friend bool operator==(const CyclicWitness&, const CyclicWitness&) = default;
};

/// Finds s with w2[i] == w1[(i + s) mod n], or with reflection w2[i] == w1[(s - i) mod n].
template <class T>
std::optional<CyclicWitness> cyclic_equivalent(std::span<const T> w1, std::span<const T> w2, bool allow_reflection) {
  const std::size_t n = w1.size();
  if (n != w2.size()) return std::nullopt;
  if (n == 0) return CyclicWitness{0, false};
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = w2[i] == w1[(i + s) % n];
    if (ok) return CyclicWitness{s, false};
  }
  if (allow_reflection)
    for (std::size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = w2[i] == w1[(s + n - i) % n];
      if (ok) return CyclicWitness{s, true};
    }
  return std::nullopt;
}

template <class T>
std::optional<CyclicWitness> cyclic_equivalent(const std::vector<T>& w1, const std::vector<T>& w2,
                                               bool allow_reflection) {
  return cyclic_equivalent(std::span<const T>(w1), std::span<const T>(w2), allow_reflection);
}

/// Reverses every separatrix and reflects every rotation word.
inline SaddleDiagram reverse_diagram(const SaddleDiagram& d) {
  SaddleDiagram r = d;
  for (auto& e : r.separatrices) std::swap(e.source, e.target);
  for (auto& s : r.saddles) {
    std::reverse(s.rotation.begin(), s.rotation.end());
    for (auto& dt : s.rotation) dt.end = opposite(dt.end);
  }
  return r;
}

/// The pair of the time-reversed flow: reversed diagram, swapped edge labels,
/// face references carried over to the reversed face structure.
inline InvariantPair reverse_pair(const InvariantPair& p) {
  require_valid(p);
  InvariantPair r = p;
  r.diagram = reverse_diagram(p.diagram);
  const detail::RibbonIndex before(p.diagram);
  const detail::RibbonIndex after(r.diagram);
  auto carry = [&](Attachment at) {
    if (!at.face) return at;
    const auto comp = p.vertices[at.vertex].component;
    const auto& face = before.faces()[before.global_face(comp, *at.face)];
    // The reversed face consists of the darts with the same (separatrix, end) names.
    const auto g = after.face_of(face.sides.front().index());
    if (after.faces()[g].sides.size() != face.sides.size())
      throw Error(ErrorKind::InvalidInput, "face structure not preserved by reversal");
    for (const auto& side : face.sides)
      if (after.face_of(side.index()) != g) throw Error(ErrorKind::InvalidInput, "face structure not preserved by reversal");
    at.face = after.local_face(g);
    return at;
  };
  for (auto& a : r.annuli) {
    auto neg = carry(a.pos);
    auto pos = carry(a.neg);
    a.neg = neg;
    a.pos = pos;
  }
  return r;
}

/// Index maps from the first pair to the second.
struct IsoWitness {
  bool reversed = false;
  std::vector<std::size_t> saddles;
  std::vector<std::size_t> separatrices;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> annuli;
};

namespace detail {

inline constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

/// Backtracking search for label-commuting bijections between two valid pairs.
class PairMatcher {
 public:
  PairMatcher(const InvariantPair& a, const InvariantPair& b, bool reversed, bool diagram_only)
      : a_(a), b_(b), ia_(a.diagram), ib_(b.diagram), rev_(reversed), diagram_only_(diagram_only) {}

  std::optional<IsoWitness> run() {
    if (!compatible_counts()) return std::nullopt;
    const auto& da = a_.diagram;
    smap_.assign(da.saddles.size(), kUnset);
    sused_.assign(b_.diagram.saddles.size(), 0);
    shift_.assign(da.saddles.size(), kUnset);
    emap_.assign(da.separatrices.size(), kUnset);
    eused_.assign(b_.diagram.separatrices.size(), 0);
    order_ = separatrix_order();
    if (!match_separatrix(0)) return std::nullopt;
    return witness_;
  }

 private:
  bool compatible_counts() const {
    const auto& da = a_.diagram;
    const auto& db = b_.diagram;
    if (da.saddles.size() != db.saddles.size() || da.separatrices.size() != db.separatrices.size()) return false;
    if (ia_.faces().size() != ib_.faces().size()) return false;
    std::vector<int> dga, dgb;
    for (const auto& s : da.saddles) dga.push_back(saddle_degree(s));
    for (const auto& s : db.saddles) dgb.push_back(saddle_degree(s));
    std::sort(dga.begin(), dga.end());
    std::sort(dgb.begin(), dgb.end());
    if (dga != dgb) return false;
    if (diagram_only_) return true;
    if (a_.vertices.size() != b_.vertices.size() || a_.annuli.size() != b_.annuli.size() || a_.tori != b_.tori)
      return false;
    for (auto l : {VertexLabel::C, VertexLabel::N, VertexLabel::B})
      if (a_.count(l) != b_.count(l)) return false;
    return true;
  }

  // Breadth-first over saddles so each separatrix after the first of a
  // component touches an already mapped saddle.
  std::vector<std::size_t> separatrix_order() const {
    const auto& d = a_.diagram;
    std::vector<std::size_t> order;
    std::vector<char> seen_s(d.saddles.size(), 0), seen_e(d.separatrices.size(), 0);
    for (std::size_t root = 0; root < d.saddles.size(); ++root) {
      if (seen_s[root]) continue;
      std::vector<std::size_t> queue{root};
      seen_s[root] = 1;
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& dt : d.saddles[queue[q]].rotation) {
          const auto& e = d.separatrices[dt.separatrix];
          if (!seen_e[dt.separatrix]) {
            seen_e[dt.separatrix] = 1;
            order.push_back(dt.separatrix);
          }
          for (auto s : {e.source, e.target})
            if (!seen_s[s]) {
              seen_s[s] = 1;
              queue.push_back(s);
            }
        }
    }
    return order;
  }

  // Position of the image slot relative to the source slot; constant per saddle
  // exactly when the mapped word is a cyclic shift (or reflection) of the target word.
  std::size_t slot_offset(std::size_t sa, std::size_t slot_a, std::size_t slot_b) const {
    const auto deg = a_.diagram.saddles[sa].rotation.size();
    return rev_ ? (slot_a + slot_b) % deg : (slot_b + deg - slot_a) % deg;
  }

  struct Undo {
    std::vector<std::size_t> saddles;
    std::vector<std::size_t> shifts;
  };

  bool map_end(std::size_t dart_a, std::size_t dart_b, Undo& undo) {
    const auto sa = ia_.saddle_of(dart_a);
    const auto sb = ib_.saddle_of(dart_b);
    if (smap_[sa] == kUnset) {
      if (sused_[sb]) return false;
      if (a_.diagram.saddles[sa].rotation.size() != b_.diagram.saddles[sb].rotation.size()) return false;
      smap_[sa] = sb;
      sused_[sb] = 1;
      undo.saddles.push_back(sa);
    } else if (smap_[sa] != sb) {
      return false;
    }
    const auto off = slot_offset(sa, ia_.slot_of(dart_a), ib_.slot_of(dart_b));
    if (shift_[sa] == kUnset) {
      shift_[sa] = off;
      undo.shifts.push_back(sa);
    } else if (shift_[sa] != off) {
      return false;
    }
    return true;
  }

  void rollback(const Undo& undo) {
    for (auto s : undo.saddles) {
      sused_[smap_[s]] = 0;
      smap_[s] = kUnset;
    }
    for (auto s : undo.shifts) shift_[s] = kUnset;
  }

  // Dart (e, end) maps to (h(e), end) under ~+ and to (h(e), opposite end) under reversal.
  std::size_t image_dart(std::size_t dart_a) const {
    const auto dt = Dart::from_index(dart_a);
    const End end = rev_ ? opposite(dt.end) : dt.end;
    return Dart{emap_[dt.separatrix], end}.index();
  }

  bool match_separatrix(std::size_t pos) {
    if (pos == order_.size()) return finish_diagram();
    const auto e = order_[pos];
    for (std::size_t f = 0; f < b_.diagram.separatrices.size(); ++f) {
      if (eused_[f]) continue;
      emap_[e] = f;
      Undo undo;
      const bool ok = map_end(Dart{e, End::Out}.index(), image_dart(Dart{e, End::Out}.index()), undo) &&
                      map_end(Dart{e, End::In}.index(), image_dart(Dart{e, End::In}.index()), undo);
      if (ok) {
        eused_[f] = 1;
        if (match_separatrix(pos + 1)) return true;
        eused_[f] = 0;
      }
      rollback(undo);
      emap_[e] = kUnset;
    }
    return false;
  }

  bool finish_diagram() {
    const auto& da = a_.diagram;
    const auto& db = b_.diagram;
    // Every saddle carries darts, so the saddle map is total here.
    for (std::size_t s = 0; s < da.saddles.size(); ++s) {
      std::vector<Dart> mapped;
      for (const auto& dt : da.saddles[s].rotation) mapped.push_back(Dart::from_index(image_dart(dt.index())));
      if (!cyclic_equivalent(mapped, rev_ ? reflect(db.saddles[smap_[s]].rotation) : db.saddles[smap_[s]].rotation,
                             false))
        return false;
    }
    // Faces map to the faces holding the same (separatrix, end) names, in both modes.
    fmap_.assign(ia_.faces().size(), kUnset);
    for (std::size_t f = 0; f < ia_.faces().size(); ++f) {
      const auto& sides = ia_.faces()[f].sides;
      auto name = [&](Dart dt) { return Dart{emap_[dt.separatrix], dt.end}.index(); };
      const auto g = ib_.face_of(name(sides.front()));
      if (ib_.faces()[g].sides.size() != sides.size()) return false;
      for (auto dt : sides)
        if (ib_.face_of(name(dt)) != g) return false;
      fmap_[f] = g;
    }
    cmap_.assign(ia_.components().size(), kUnset);
    for (std::size_t c = 0; c < ia_.components().size(); ++c)
      cmap_[c] = ib_.component_of_saddle(smap_[ia_.components()[c].saddles.front()]);

    if (diagram_only_) {
      witness_ = IsoWitness{rev_, smap_, emap_, {}, {}};
      return true;
    }
    return match_graph();
  }

  static std::vector<Dart> reflect(std::vector<Dart> w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  bool match_graph() {
    const std::size_t nv = a_.vertices.size();
    vmap_.assign(nv, kUnset);
    vused_.assign(nv, 0);
    std::vector<std::size_t> diagram_vertex_b(ib_.components().size(), kUnset);
    for (std::size_t v = 0; v < nv; ++v)
      if (b_.vertices[v].label == VertexLabel::Diagram) diagram_vertex_b[b_.vertices[v].component] = v;
    for (std::size_t v = 0; v < nv; ++v)
      if (a_.vertices[v].label == VertexLabel::Diagram) {
        const auto w = diagram_vertex_b[cmap_[a_.vertices[v].component]];
        vmap_[v] = w;
        vused_[w] = 1;
      }
    amap_.assign(a_.annuli.size(), kUnset);
    aused_.assign(b_.annuli.size(), 0);
    return match_annulus(0);
  }

  std::optional<std::size_t> global_face(const InvariantPair& p, const RibbonIndex& idx, const Attachment& at) const {
    if (!at.face) return std::nullopt;
    return idx.global_face(p.vertices[at.vertex].component, *at.face);
  }

  bool map_attachment(const Attachment& x, const Attachment& y, std::vector<std::size_t>& undo) {
    const auto& vx = a_.vertices[x.vertex];
    const auto& vy = b_.vertices[y.vertex];
    if (vx.label != vy.label) return false;
    if (vx.label == VertexLabel::Diagram) return vmap_[x.vertex] == y.vertex && fmap_[*global_face(a_, ia_, x)] == *global_face(b_, ib_, y);
    if (vmap_[x.vertex] == kUnset) {
      if (vused_[y.vertex]) return false;
      vmap_[x.vertex] = y.vertex;
      vused_[y.vertex] = 1;
      undo.push_back(x.vertex);
      return true;
    }
    return vmap_[x.vertex] == y.vertex;
  }

  bool match_annulus(std::size_t i) {
    if (i == a_.annuli.size()) {
      witness_ = IsoWitness{rev_, smap_, emap_, vmap_, amap_};
      return true;
    }
    const auto& x = a_.annuli[i];
    for (std::size_t j = 0; j < b_.annuli.size(); ++j) {
      if (aused_[j]) continue;
      const auto& y = b_.annuli[j];
      const Attachment& y_neg = rev_ ? y.pos : y.neg;
      const Attachment& y_pos = rev_ ? y.neg : y.pos;
      std::vector<std::size_t> undo;
      if (map_attachment(x.neg, y_neg, undo) && map_attachment(x.pos, y_pos, undo)) {
        aused_[j] = 1;
        amap_[i] = j;
        if (match_annulus(i + 1)) return true;
        aused_[j] = 0;
        amap_[i] = kUnset;
      }
      for (auto v : undo) {
        vused_[vmap_[v]] = 0;
        vmap_[v] = kUnset;
      }
    }
    return false;
  }

  const InvariantPair& a_;
  const InvariantPair& b_;
  RibbonIndex ia_, ib_;
  bool rev_;
  bool diagram_only_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> smap_, shift_, emap_, fmap_, cmap_, vmap_, amap_;
  std::vector<char> sused_, eused_, vused_, aused_;
  std::optional<IsoWitness> witness_;
};

}  // namespace detail

/// Label-commuting isomorphism from p1 to p2, or nullopt when none exists.
inline std::optional<IsoWitness> pair_isomorphic(const InvariantPair& p1, const InvariantPair& p2, IsoMode mode) {
  require_valid(p1);
  require_valid(p2);
  if (auto w = detail::PairMatcher(p1, p2, false, false).run()) return w;
  if (mode.allow_reversal) return detail::PairMatcher(p1, p2, true, false).run();
  return std::nullopt;
}

inline std::optional<IsoWitness> diagrams_isomorphic(const SaddleDiagram& d1, const SaddleDiagram& d2, IsoMode mode) {
  for (const auto* d : {&d1, &d2})
    if (auto v = validate_diagram(*d); !v.empty()) throw Error(ErrorKind::InvalidInput, v.front().message);
  InvariantPair a{d1, {}, {}, 0}, b{d2, {}, {}, 0};
  if (auto w = detail::PairMatcher(a, b, false, true).run()) return w;
  if (mode.allow_reversal) return detail::PairMatcher(a, b, true, true).run();
  return std::nullopt;
}

/// Stable dedup key: a version byte, a mode byte, then the LEB128-encoded code.
struct CanonicalForm {
  static constexpr std::uint8_t version = 1;
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    for (auto b : bytes) {
      s.push_back(digits[b >> 4]);
      s.push_back(digits[b & 15]);
    }
    return s;
  }

  /// 64-bit FNV-1a of the bytes, as 16 hex digits.
  std::string digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto b : bytes) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 15];
    return s;
  }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

using Code = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kTagTorus = 1;
inline constexpr std::uint32_t kTagLeafPair = 2;
inline constexpr std::uint32_t kTagDiagram = 3;
inline constexpr std::uint32_t kOtherFace = 3;  // after the leaf labels c=0, n=1, b=2

/// Canonical codes from rooted traversals of the rotation system.
class Canonizer {
 public:
  explicit Canonizer(const InvariantPair& p, bool with_graph = true) : p_(p), idx_(p.diagram) {
    if (!with_graph) return;
    face_annulus_.assign(idx_.faces().size(), {kUnset, 0});
    for (std::size_t a = 0; a < p.annuli.size(); ++a)
      for (int side = 0; side < 2; ++side) {
        const auto& at = side == 0 ? p.annuli[a].neg : p.annuli[a].pos;
        if (at.face) face_annulus_[idx_.global_face(p.vertices[at.vertex].component, *at.face)] = {a, side};
      }
  }

  Code pair_code() {
    std::vector<Code> pieces;
    for (const auto& piece : assembly_components(p_)) pieces.push_back(piece_code(piece));
    return concat_sorted(std::move(pieces));
  }

  Code diagram_code() {
    std::vector<Code> comps;
    for (std::size_t c = 0; c < idx_.components().size(); ++c) {
      std::optional<Code> best;
      for (auto e : idx_.components()[c].separatrices)
        for (auto dart : {2 * e, 2 * e + 1}) {
          const auto& lab = label(c, dart);
          if (!best || lab.tokens < *best) best = lab.tokens;
        }
      comps.push_back(*best);
    }
    return concat_sorted(std::move(comps));
  }

 private:
  struct Labeling {
    Code tokens;
    std::vector<std::size_t> face_order;      // global face ids, canonical order
    std::map<std::size_t, std::size_t> rank;  // global face id -> canonical position
  };

  static Code concat_sorted(std::vector<Code> parts) {
    std::sort(parts.begin(), parts.end());
    Code out{static_cast<std::uint32_t>(parts.size())};
    for (const auto& part : parts) {
      out.push_back(static_cast<std::uint32_t>(part.size()));
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  const Labeling& label(std::size_t comp, std::size_t root) {
    auto key = std::make_pair(comp, root);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto& d = p_.diagram;
    std::map<std::size_t, std::size_t> number;  // saddle -> discovery number
    std::vector<std::size_t> order;             // discovery number -> saddle
    std::vector<std::size_t> entry;             // discovery number -> entry dart
    auto discover = [&](std::size_t dart) {
      const auto s = idx_.saddle_of(dart);
      if (number.count(s)) return number[s];
      number[s] = order.size();
      order.push_back(s);
      entry.push_back(dart);
      return number[s];
    };
    auto offset = [&](std::size_t dart) {
      const auto n = number.at(idx_.saddle_of(dart));
      const auto deg = d.saddles[order[n]].rotation.size();
      return (idx_.slot_of(dart) + deg - idx_.slot_of(entry[n])) % deg;
    };
    Labeling lab;
    discover(root);
    lab.tokens.push_back(static_cast<std::uint32_t>(idx_.components()[comp].saddles.size()));
    for (std::size_t q = 0; q < order.size(); ++q) {
      const auto& rot = d.saddles[order[q]].rotation;
      const auto base = idx_.slot_of(entry[q]);
      lab.tokens.push_back(static_cast<std::uint32_t>(rot.size()));
      for (std::size_t off = 0; off < rot.size(); ++off) {
        const auto dart = rot[(base + off) % rot.size()].index();
        const auto partner = detail::RibbonIndex::inv(dart);
        lab.tokens.push_back(static_cast<std::uint32_t>(Dart::from_index(dart).end));
        lab.tokens.push_back(static_cast<std::uint32_t>(discover(partner)));
        lab.tokens.push_back(static_cast<std::uint32_t>(offset(partner)));
      }
    }
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> keyed;
    for (auto g : idx_.component_faces(comp)) {
      std::pair<std::size_t, std::size_t> least{kUnset, kUnset};
      for (auto side : idx_.faces()[g].sides)
        least = std::min(least, std::make_pair(number.at(idx_.saddle_of(side.index())), offset(side.index())));
      keyed.emplace_back(least, g);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      lab.face_order.push_back(keyed[i].second);
      lab.rank[keyed[i].second] = i;
    }
    return memo_.emplace(key, std::move(lab)).first->second;
  }

  const Attachment& other_end(std::size_t face) const {
    const auto [a, side] = face_annulus_[face];
    return side == 0 ? p_.annuli[a].pos : p_.annuli[a].neg;
  }

  Code piece_code(const AssemblyComponent& piece) {
    if (piece.torus) return {kTagTorus};
    if (piece.diagram_components.empty()) {
      const auto& an = p_.annuli[piece.annuli.front()];
      return {kTagLeafPair, static_cast<std::uint32_t>(p_.vertices[an.neg.vertex].label),
              static_cast<std::uint32_t>(p_.vertices[an.pos.vertex].label)};
    }
    std::optional<Code> best;
    for (auto c : piece.diagram_components)
      for (auto e : idx_.components()[c].separatrices)
        for (auto dart : {2 * e, 2 * e + 1}) {
          std::vector<std::pair<std::size_t, std::size_t>> entries{{c, dart}};
          search(entries, best);
        }
    return *best;
  }

  // Extends the traversal: the first face (in canonical scan order) whose
  // annulus leads into an unlabeled component branches over that face's darts.
  void search(std::vector<std::pair<std::size_t, std::size_t>>& entries, std::optional<Code>& best) {
    std::map<std::size_t, std::size_t> position;
    for (std::size_t i = 0; i < entries.size(); ++i) position[entries[i].first] = i;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& lab = label(entries[i].first, entries[i].second);
      for (auto g : lab.face_order) {
        const auto& other = other_end(g);
        if (!other.face) continue;
        const auto comp = p_.vertices[other.vertex].component;
        if (position.count(comp)) continue;
        const auto og = idx_.global_face(comp, *other.face);
        for (auto side : idx_.faces()[og].sides) {
          entries.emplace_back(comp, side.index());
          search(entries, best);
          entries.pop_back();
        }
        return;
      }
    }
    Code code{kTagDiagram, static_cast<std::uint32_t>(entries.size())};
    for (auto [c, root] : entries) {
      const auto& t = label(c, root).tokens;
      code.insert(code.end(), t.begin(), t.end());
    }
    for (auto [c, root] : entries)
      for (auto g : label(c, root).face_order) {
        code.push_back(static_cast<std::uint32_t>(face_annulus_[g].second));
        const auto& other = other_end(g);
        if (!other.face) {
          code.push_back(static_cast<std::uint32_t>(p_.vertices[other.vertex].label));
          continue;
        }
        const auto comp = p_.vertices[other.vertex].component;
        const auto og = idx_.global_face(comp, *other.face);
        const auto pos = position.at(comp);
        code.push_back(kOtherFace);
        code.push_back(static_cast<std::uint32_t>(pos));
        code.push_back(static_cast<std::uint32_t>(label(entries[pos].first, entries[pos].second).rank.at(og)));
      }
    if (!best || code < *best) best = std::move(code);
  }

  const InvariantPair& p_;
  RibbonIndex idx_;
  std::vector<std::pair<std::size_t, int>> face_annulus_;
  std::map<std::pair<std::size_t, std::size_t>, Labeling> memo_;
};

inline CanonicalForm encode(const Code& code, IsoMode mode) {
  CanonicalForm cf;
  cf.bytes.push_back(CanonicalForm::version);
  cf.bytes.push_back(mode.allow_reversal ? 1 : 0);
  for (auto t : code) {
    do {
      std::uint8_t byte = t & 0x7f;
      t >>= 7;
      if (t) byte |= 0x80;
      cf.bytes.push_back(byte);
    } while (t);
  }
  return cf;
}

}  // namespace detail

/// Equal for two valid pairs exactly when they are isomorphic in `mode`.
inline CanonicalForm canonical_form(const InvariantPair& p, IsoMode mode) {
  require_valid(p);
  auto code = detail::Canonizer(p).pair_code();
  if (mode.allow_reversal) code = std::min(code, detail::Canonizer(reverse_pair(p)).pair_code());
  return detail::encode(code, mode);
}

/// Component-wise canonical form of a diagram alone.
inline CanonicalForm diagram_canonical_form(const SaddleDiagram& d, IsoMode mode) {
  if (auto v = validate_diagram(d); !v.empty()) throw Error(ErrorKind::InvalidInput, v.front().message);
  InvariantPair p{d, {}, {}, 0};
  auto code = detail::Canonizer(p, false).diagram_code();
  if (mode.allow_reversal) {
    InvariantPair r{reverse_diagram(d), {}, {}, 0};
    code = std::min(code, detail::Canonizer(r, false).diagram_code());
  }
  return detail::encode(code, mode);
}

}  // namespace flowinv
