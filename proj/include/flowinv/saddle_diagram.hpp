#pragma once

// The abstract multi-saddle connection diagram: saddles with counterclockwise
// rotation words of separatrix ends (darts), directed separatrices, and the
// ribbon-graph face structure of a regular neighborhood of each polycycle.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "flowinv/error.hpp"
#include "flowinv/finite_topology.hpp"

namespace flowinv {

/// Which end of a separatrix a dart is: Out at the alpha-limit saddle, In at the omega-limit saddle.
enum class End : unsigned char { Out = 0, In = 1 };

inline End opposite(End e) { return e == End::Out ? End::In : End::Out; }
inline const char* to_string(End e) { return e == End::Out ? "out" : "in"; }

struct Dart {
  std::size_t separatrix = 0;
  End end = End::Out;

  /// Dart id: 2 * separatrix + (0 for out, 1 for in).
  std::size_t index() const { return 2 * separatrix + static_cast<std::size_t>(end); }
  static Dart from_index(std::size_t i) { return {i / 2, static_cast<End>(i % 2)}; }

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

enum class SaddleKind { Interior, Boundary };

struct Saddle {
  std::string id;
  SaddleKind kind = SaddleKind::Interior;
  /// Interior(k): a k-saddle. Boundary(k): a boundary-(k/2)-saddle.
  int k = 1;
  /// Counterclockwise; cyclic for interior saddles.
  std::vector<Dart> rotation;

  friend bool operator==(const Saddle&, const Saddle&) = default;
};

struct Separatrix {
  std::string id;
  std::size_t source = 0;  // alpha-limit saddle
  std::size_t target = 0;  // omega-limit saddle
  bool twisted = false;

  friend bool operator==(const Separatrix&, const Separatrix&) = default;
};

struct SaddleDiagram {
  std::vector<Saddle> saddles;
  std::vector<Separatrix> separatrices;

  bool empty() const { return saddles.empty() && separatrices.empty(); }
  std::size_t dart_count() const { return 2 * separatrices.size(); }

  friend bool operator==(const SaddleDiagram&, const SaddleDiagram&) = default;
};

/// deg = 2k + 2 for a k-saddle; a boundary-(k/2)-saddle has 2(k/2) + 2 = k + 2.
inline int saddle_degree(const Saddle& s) { return s.kind == SaddleKind::Interior ? 2 * s.k + 2 : s.k + 2; }

struct FaceCycle {
  std::size_t component = 0;
  /// Darts in face order, starting from the least dart id. Walking a side
  /// follows its separatrix from the dart's saddle to the opposite end.
  std::vector<Dart> sides;
  bool flow_positive = true;
};

struct DiagramComponent {
  std::vector<std::size_t> saddles;
  std::vector<std::size_t> separatrices;
};

namespace detail {

inline Violations structural_violations(const SaddleDiagram& d, bool check_alternation) {
  Violations out;
  const std::size_t n_sep = d.separatrices.size();
  for (std::size_t e = 0; e < n_sep; ++e) {
    const auto& sep = d.separatrices[e];
    if (sep.source >= d.saddles.size() || sep.target >= d.saddles.size())
      out.push_back({EntityKind::Separatrix, e, "endpoint", "separatrix " + sep.id + " references an unknown saddle"});
    if (sep.twisted)
      out.push_back({EntityKind::Separatrix, e, "twist", "twisted ribbons are not supported"});
  }

  std::vector<int> seen(2 * n_sep, 0);
  for (std::size_t s = 0; s < d.saddles.size(); ++s) {
    const auto& sd = d.saddles[s];
    if (sd.kind == SaddleKind::Boundary) {
      out.push_back({EntityKind::Saddle, s, "boundary-saddle", "boundary saddle " + sd.id + " is not supported"});
      continue;
    }
    if (sd.k < 0) {
      out.push_back({EntityKind::Saddle, s, "degree", "saddle " + sd.id + " has negative multiplicity"});
      continue;
    }
    const auto deg = static_cast<std::size_t>(saddle_degree(sd));
    if (sd.rotation.size() != deg)
      out.push_back({EntityKind::Saddle, s, "degree",
                     "saddle " + sd.id + " has " + std::to_string(sd.rotation.size()) +
                         " rotation slots but degree 2k+2 = " + std::to_string(deg)});
    for (std::size_t slot = 0; slot < sd.rotation.size(); ++slot) {
      const Dart dt = sd.rotation[slot];
      if (dt.separatrix >= n_sep) {
        out.push_back({EntityKind::Saddle, s, "pairing",
                       "saddle " + sd.id + " slot " + std::to_string(slot) + " references an unknown separatrix"});
        continue;
      }
      ++seen[dt.index()];
      const auto& sep = d.separatrices[dt.separatrix];
      const std::size_t expected = dt.end == End::Out ? sep.source : sep.target;
      if (expected != s)
        out.push_back({EntityKind::Separatrix, dt.separatrix, "source",
                       "separatrix " + sep.id + " " + (dt.end == End::Out ? "outgoing end must sit at its source" :
                                                                           "incoming end must sit at its target")});
    }
    if (check_alternation && sd.rotation.size() == deg) {
      for (std::size_t slot = 0; slot < deg; ++slot) {
        const auto next = (slot + 1) % deg;
        if (sd.rotation[slot].end == sd.rotation[next].end) {
          out.push_back({EntityKind::Saddle, s, "alternation",
                         "saddle " + sd.id + ": alternation fails at slot " + std::to_string(next)});
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] == 1) continue;
    const Dart dt = Dart::from_index(i);
    out.push_back({EntityKind::Separatrix, dt.separatrix, "pairing",
                   "separatrix " + d.separatrices[dt.separatrix].id + " " + to_string(dt.end) + "-end appears " +
                       std::to_string(seen[i]) + " times in rotations"});
  }
  return out;
}

/// Dart-level ribbon structure of a structurally valid diagram.
class RibbonIndex {
 public:
  explicit RibbonIndex(const SaddleDiagram& d) : diagram_(&d) {
    const std::size_t darts = d.dart_count();
    saddle_of_.assign(darts, 0);
    slot_of_.assign(darts, 0);
    for (std::size_t s = 0; s < d.saddles.size(); ++s)
      for (std::size_t slot = 0; slot < d.saddles[s].rotation.size(); ++slot) {
        const auto i = d.saddles[s].rotation[slot].index();
        saddle_of_[i] = s;
        slot_of_[i] = slot;
      }
    build_components();
    build_faces();
  }

  const SaddleDiagram& diagram() const { return *diagram_; }
  std::size_t saddle_of(std::size_t dart) const { return saddle_of_[dart]; }
  std::size_t slot_of(std::size_t dart) const { return slot_of_[dart]; }

  std::size_t succ(std::size_t dart) const {
    const auto& rot = diagram_->saddles[saddle_of_[dart]].rotation;
    return rot[(slot_of_[dart] + 1) % rot.size()].index();
  }
  std::size_t pred(std::size_t dart) const {
    const auto& rot = diagram_->saddles[saddle_of_[dart]].rotation;
    return rot[(slot_of_[dart] + rot.size() - 1) % rot.size()].index();
  }
  static std::size_t inv(std::size_t dart) { return dart ^ 1U; }
  /// Face successor: rotation-successor of the dart at the other end.
  std::size_t face_next(std::size_t dart) const { return succ(inv(dart)); }

  const std::vector<DiagramComponent>& components() const { return components_; }
  std::size_t component_of_saddle(std::size_t s) const { return saddle_component_[s]; }
  std::size_t component_of_dart(std::size_t dart) const { return saddle_component_[saddle_of_[dart]]; }

  const std::vector<FaceCycle>& faces() const { return faces_; }
  std::size_t face_of(std::size_t dart) const { return face_of_[dart]; }
  /// Global face ids of component c, in per-component face order.
  const std::vector<std::size_t>& component_faces(std::size_t c) const { return component_faces_[c]; }
  /// Position of global face f inside its component's face list.
  std::size_t local_face(std::size_t f) const { return local_face_[f]; }
  std::size_t global_face(std::size_t component, std::size_t local) const { return component_faces_[component][local]; }
  bool coherent() const { return coherent_; }

 private:
  void build_components() {
    const auto& d = *diagram_;
    const std::size_t n = d.saddles.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& sep : d.separatrices) {
      auto a = find(sep.source), b = find(sep.target);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    saddle_component_.assign(n, 0);
    std::vector<std::size_t> root_to_comp(n, static_cast<std::size_t>(-1));
    for (std::size_t s = 0; s < n; ++s) {
      auto r = find(s);
      if (root_to_comp[r] == static_cast<std::size_t>(-1)) {
        root_to_comp[r] = components_.size();
        components_.emplace_back();
      }
      saddle_component_[s] = root_to_comp[r];
      components_[root_to_comp[r]].saddles.push_back(s);
    }
    for (std::size_t e = 0; e < d.separatrices.size(); ++e)
      components_[saddle_component_[d.separatrices[e].source]].separatrices.push_back(e);
  }

  void build_faces() {
    const std::size_t darts = diagram_->dart_count();
    face_of_.assign(darts, static_cast<std::size_t>(-1));
    component_faces_.assign(components_.size(), {});
    // Visiting darts in increasing id makes each face start at its least dart.
    std::vector<std::vector<FaceCycle>> per_comp(components_.size());
    for (std::size_t start = 0; start < darts; ++start) {
      if (face_of_[start] != static_cast<std::size_t>(-1)) continue;
      FaceCycle face;
      face.component = component_of_dart(start);
      std::size_t d = start;
      bool any_out = false, any_in = false;
      do {
        face_of_[d] = 0;  // provisional mark
        face.sides.push_back(Dart::from_index(d));
        (Dart::from_index(d).end == End::Out ? any_out : any_in) = true;
        d = face_next(d);
      } while (d != start);
      if (any_out && any_in) coherent_ = false;
      face.flow_positive = any_out && !any_in;
      per_comp[face.component].push_back(std::move(face));
    }
    local_face_.clear();
    for (std::size_t c = 0; c < per_comp.size(); ++c)
      for (std::size_t j = 0; j < per_comp[c].size(); ++j) {
        const std::size_t g = faces_.size();
        for (const auto& side : per_comp[c][j].sides) face_of_[side.index()] = g;
        component_faces_[c].push_back(g);
        local_face_.push_back(j);
        faces_.push_back(std::move(per_comp[c][j]));
      }
  }

  const SaddleDiagram* diagram_;
  std::vector<std::size_t> saddle_of_, slot_of_;
  std::vector<DiagramComponent> components_;
  std::vector<std::size_t> saddle_component_;
  std::vector<FaceCycle> faces_;
  std::vector<std::size_t> face_of_;
  std::vector<std::vector<std::size_t>> component_faces_;
  std::vector<std::size_t> local_face_;
  bool coherent_ = true;
};

}  // namespace detail

/// Empty result means the diagram is valid.
inline Violations validate_diagram(const SaddleDiagram& d) { return detail::structural_violations(d, true); }

/// Faces of every component, ordered by component and then by least dart id.
/// Requires a structurally valid diagram; alternation is not required, but a
/// face mixing followed and opposed sides raises FlowIncoherentFace.
inline std::vector<FaceCycle> trace_faces(const SaddleDiagram& d) {
  if (auto v = detail::structural_violations(d, false); !v.empty())
    throw Error(ErrorKind::InvalidInput, v.front().message);
  detail::RibbonIndex idx(d);
  if (!idx.coherent()) {
    for (const auto& f : idx.faces()) {
      bool out = false, in = false;
      for (auto side : f.sides) (side.end == End::Out ? out : in) = true;
      if (out && in)
        throw Error(ErrorKind::FlowIncoherentFace,
                    "face through separatrix " + d.separatrices[f.sides.front().separatrix].id +
                        " mixes followed and opposed sides");
    }
  }
  return idx.faces();
}

/// Connected components (polycycles), ordered by least saddle index.
inline std::vector<DiagramComponent> diagram_components(const SaddleDiagram& d) {
  if (auto v = validate_diagram(d); !v.empty()) throw Error(ErrorKind::InvalidInput, v.front().message);
  return detail::RibbonIndex(d).components();
}

/// Saddles at height 0, separatrices at height 1, s < e iff s is an endpoint of e.
inline FinPoset diagram_poset(const SaddleDiagram& d) {
  if (auto v = validate_diagram(d); !v.empty()) throw Error(ErrorKind::InvalidInput, v.front().message);
  std::vector<std::string> names;
  for (const auto& s : d.saddles) names.push_back(s.id);
  for (const auto& e : d.separatrices) names.push_back(e.id);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t off = d.saddles.size();
  for (std::size_t e = 0; e < d.separatrices.size(); ++e) {
    pairs.emplace_back(d.separatrices[e].source, off + e);
    pairs.emplace_back(d.separatrices[e].target, off + e);
  }
  return FinPoset(std::move(names), pairs);
}

}  // namespace flowinv
