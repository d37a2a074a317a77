#pragma once

// The labeled extended-orbit graph G_v and the invariant pair (G_v, D_v).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flowinv/error.hpp"
#include "flowinv/finite_topology.hpp"
#include "flowinv/saddle_diagram.hpp"

namespace flowinv {

/// c: quasi-center, n: one-sided periodic orbit off the boundary, b: boundary
/// periodic orbit, Diagram: a polycycle (diagram component).
enum class VertexLabel : unsigned char { C = 0, N = 1, B = 2, Diagram = 3 };

inline const char* to_string(VertexLabel l) {
  switch (l) {
    case VertexLabel::C: return "c";
    case VertexLabel::N: return "n";
    case VertexLabel::B: return "b";
    case VertexLabel::Diagram: return "diagram";
  }
  return "?";
}

struct VertexNode {
  std::string id;
  VertexLabel label = VertexLabel::C;
  /// Diagram component number; meaningful only for Diagram vertices.
  std::size_t component = 0;

  friend bool operator==(const VertexNode&, const VertexNode&) = default;
};

struct Attachment {
  std::size_t vertex = 0;
  /// Face number inside the labeled component; present iff the vertex is a Diagram vertex.
  std::optional<std::size_t> face;

  friend auto operator<=>(const Attachment&, const Attachment&) = default;
};

/// A periodic annulus with its ordered label (negative end, positive end).
struct AnnulusEdge {
  std::string id;
  Attachment neg;
  Attachment pos;

  bool is_loop() const { return neg.vertex == pos.vertex; }
  friend bool operator==(const AnnulusEdge&, const AnnulusEdge&) = default;
};

struct InvariantPair {
  SaddleDiagram diagram;
  std::vector<VertexNode> vertices;
  std::vector<AnnulusEdge> annuli;
  std::size_t tori = 0;

  std::size_t count(VertexLabel l) const {
    return static_cast<std::size_t>(
        std::count_if(vertices.begin(), vertices.end(), [l](const auto& v) { return v.label == l; }));
  }

  friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

struct UnorderedAttachments {
  Attachment first;
  Attachment second;
  friend auto operator<=>(const UnorderedAttachments&, const UnorderedAttachments&) = default;
};

struct SeparationReport {
  bool sv_t0 = false;
  bool sv_t1 = false;
  bool sv_t2 = false;
  bool svex_t1 = false;
  bool svex_t2 = false;
  friend bool operator==(const SeparationReport&, const SeparationReport&) = default;
};

/// A connected piece of the assembled surface: vertices joined by annuli, or a lone periodic torus.
struct AssemblyComponent {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> annuli;
  std::vector<std::size_t> diagram_components;
  bool torus = false;
};

namespace detail {

inline Violations graph_violations(const InvariantPair& p, const RibbonIndex* idx) {
  Violations out;
  const std::size_t nv = p.vertices.size();
  const std::size_t ncomp = idx ? idx->components().size() : 0;

  std::vector<int> comp_refs(ncomp, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& vx = p.vertices[v];
    if (vx.label != VertexLabel::Diagram || !idx) continue;
    if (vx.component >= ncomp) {
      out.push_back({EntityKind::Vertex, v, "component-reference",
                     "vertex " + vx.id + " references diagram component " + std::to_string(vx.component) +
                         " but the diagram has " + std::to_string(ncomp)});
      continue;
    }
    if (++comp_refs[vx.component] == 2)
      out.push_back({EntityKind::Vertex, v, "component-reference",
                     "diagram component " + std::to_string(vx.component) + " is labeled by more than one vertex"});
  }
  if (idx)
    for (std::size_t c = 0; c < ncomp; ++c)
      if (comp_refs[c] == 0)
        out.push_back({EntityKind::Model, 0, "component-reference",
                       "diagram component " + std::to_string(c) + " is not the label of any vertex"});

  std::vector<int> vertex_uses(nv, 0);
  std::vector<int> face_uses(idx ? idx->faces().size() : 0, 0);
  std::vector<std::optional<std::size_t>> face_of_end(2 * p.annuli.size());

  for (std::size_t a = 0; a < p.annuli.size(); ++a) {
    const auto& an = p.annuli[a];
    for (int side = 0; side < 2; ++side) {
      const Attachment& at = side == 0 ? an.neg : an.pos;
      const char* which = side == 0 ? "negative" : "positive";
      if (at.vertex >= nv) {
        out.push_back({EntityKind::Annulus, a, "vertex-reference",
                       "annulus " + an.id + " " + which + " end references an unknown vertex"});
        continue;
      }
      const auto& vx = p.vertices[at.vertex];
      if (vx.label != VertexLabel::Diagram) {
        if (at.face)
          out.push_back({EntityKind::Annulus, a, "face-reference",
                         "annulus " + an.id + " " + which + " end names a face on non-diagram vertex " + vx.id});
        ++vertex_uses[at.vertex];
        continue;
      }
      if (!at.face) {
        out.push_back({EntityKind::Annulus, a, "face-reference",
                       "annulus " + an.id + " " + which + " end on diagram vertex " + vx.id + " needs a face"});
        continue;
      }
      if (!idx || vx.component >= ncomp) continue;
      const auto& faces = idx->component_faces(vx.component);
      if (*at.face >= faces.size()) {
        out.push_back({EntityKind::Annulus, a, "face-reference",
                       "annulus " + an.id + " " + which + " end names face " + std::to_string(*at.face) +
                           " but component " + std::to_string(vx.component) + " has " +
                           std::to_string(faces.size()) + " faces"});
        continue;
      }
      const auto g = faces[*at.face];
      face_of_end[2 * a + side] = g;
      if (++face_uses[g] == 2)
        out.push_back({EntityKind::Annulus, a, "over-attached",
                       "face " + std::to_string(*at.face) + " of vertex " + vx.id + " bounds more than one annulus"});
    }
    if (face_of_end[2 * a] && face_of_end[2 * a + 1]) {
      const auto& f1 = idx->faces()[*face_of_end[2 * a]];
      const auto& f2 = idx->faces()[*face_of_end[2 * a + 1]];
      if (f1.flow_positive == f2.flow_positive)
        out.push_back({EntityKind::Annulus, a, "face-sign",
                       "annulus " + an.id + " joins two faces of equal flow sign (orientation-reversing gluing)"});
    }
  }

  for (std::size_t v = 0; v < nv; ++v) {
    const auto& vx = p.vertices[v];
    if (vx.label == VertexLabel::Diagram) continue;
    if (vertex_uses[v] == 0)
      out.push_back({EntityKind::Vertex, v, "unattached",
                     "vertex " + vx.id + " (" + to_string(vx.label) + ") bounds no annulus"});
    else if (vertex_uses[v] > 1)
      out.push_back({EntityKind::Vertex, v, "over-attached",
                     "vertex " + vx.id + " (" + to_string(vx.label) + ") has one boundary circle but bounds " +
                         std::to_string(vertex_uses[v]) + " annulus ends"});
  }
  if (idx)
    for (std::size_t g = 0; g < face_uses.size(); ++g)
      if (face_uses[g] == 0) {
        const auto c = idx->faces()[g].component;
        std::size_t owner = 0;
        for (std::size_t v = 0; v < nv; ++v)
          if (p.vertices[v].label == VertexLabel::Diagram && p.vertices[v].component == c) owner = v;
        out.push_back({EntityKind::Vertex, owner, "dangling-face",
                       "face " + std::to_string(idx->local_face(g)) + " of diagram component " + std::to_string(c) +
                           " bounds no annulus"});
      }
  return out;
}

}  // namespace detail

/// Empty result means the pair is valid.
inline Violations validate_pair(const InvariantPair& p) {
  Violations out = validate_diagram(p.diagram);
  if (!out.empty()) {
    auto g = detail::graph_violations(p, nullptr);
    out.insert(out.end(), g.begin(), g.end());
    return out;
  }
  detail::RibbonIndex idx(p.diagram);
  return detail::graph_violations(p, &idx);
}

inline void require_valid(const InvariantPair& p) {
  if (auto v = validate_pair(p); !v.empty()) throw Error(ErrorKind::InvalidInput, v.front().message);
}

/// Vertices at height 0, annuli at height 1, one isolated point per periodic torus.
inline FinPoset to_extended_poset(const InvariantPair& p) {
  require_valid(p);
  std::vector<std::string> names;
  for (const auto& v : p.vertices) names.push_back(v.id);
  for (const auto& a : p.annuli) names.push_back(a.id);
  for (std::size_t t = 0; t < p.tori; ++t) names.push_back("torus" + std::to_string(t));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t off = p.vertices.size();
  for (std::size_t a = 0; a < p.annuli.size(); ++a) {
    pairs.emplace_back(p.annuli[a].neg.vertex, off + a);
    if (!p.annuli[a].is_loop()) pairs.emplace_back(p.annuli[a].pos.vertex, off + a);
  }
  return FinPoset(std::move(names), pairs);
}

/// The label with the order of each pair forgotten, indexed like p.annuli.
inline std::vector<UnorderedAttachments> reduced_label(const InvariantPair& p) {
  require_valid(p);
  std::vector<UnorderedAttachments> out;
  for (const auto& a : p.annuli) out.push_back({std::min(a.neg, a.pos), std::max(a.neg, a.pos)});
  return out;
}

inline SeparationReport classify_separation(const InvariantPair& p) {
  require_valid(p);
  SeparationReport r;
  r.sv_t0 = true;
  r.sv_t1 = p.diagram.separatrices.empty();
  r.sv_t2 = r.sv_t1 && p.count(VertexLabel::C) + p.diagram.saddles.size() <= 2;
  r.svex_t1 = true;
  r.svex_t2 = true;
  return r;
}

/// Connected pieces of the assembled surface, ordered by least vertex index;
/// periodic tori follow as one piece each.
inline std::vector<AssemblyComponent> assembly_components(const InvariantPair& p) {
  require_valid(p);
  detail::RibbonIndex idx(p.diagram);
  const std::size_t nv = p.vertices.size();
  std::vector<std::size_t> parent(nv);
  for (std::size_t v = 0; v < nv; ++v) parent[v] = v;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : p.annuli) {
    auto x = find(a.neg.vertex), y = find(a.pos.vertex);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<AssemblyComponent> out;
  std::vector<std::size_t> piece(nv, 0), root_piece(nv, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < nv; ++v) {
    auto r = find(v);
    if (root_piece[r] == static_cast<std::size_t>(-1)) {
      root_piece[r] = out.size();
      out.emplace_back();
    }
    piece[v] = root_piece[r];
    out[piece[v]].vertices.push_back(v);
    if (p.vertices[v].label == VertexLabel::Diagram) out[piece[v]].diagram_components.push_back(p.vertices[v].component);
  }
  for (std::size_t a = 0; a < p.annuli.size(); ++a) out[piece[p.annuli[a].neg.vertex]].annuli.push_back(a);
  for (std::size_t t = 0; t < p.tori; ++t) {
    AssemblyComponent torus;
    torus.torus = true;
    out.push_back(torus);
  }
  return out;
}

}  // namespace flowinv
