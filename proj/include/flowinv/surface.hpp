#pragma once

// Reconstruction of the surface from an invariant pair by pasting periodic
// annuli onto center disks, one-sided collars and polycycle neighborhoods, and
// realization of abstract multi-graphs as extended-orbit graphs.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowinv/error.hpp"
#include "flowinv/flow_graph.hpp"
#include "flowinv/multigraph.hpp"
#include "flowinv/saddle_diagram.hpp"

namespace flowinv {

enum class CellKind { CenterDisk, Annulus, MobiusCollar, BoundaryCollar, PolycycleNbhd, Torus };

inline const char* to_string(CellKind k) {
  switch (k) {
    case CellKind::CenterDisk: return "center-disk";
    case CellKind::Annulus: return "annulus";
    case CellKind::MobiusCollar: return "mobius-collar";
    case CellKind::BoundaryCollar: return "boundary-collar";
    case CellKind::PolycycleNbhd: return "polycycle-nbhd";
    case CellKind::Torus: return "torus";
  }
  return "?";
}

struct Cell {
  CellKind kind = CellKind::CenterDisk;
  std::size_t piece = 0;
  std::string label;
  /// Annulus: {negative end, positive end}. BoundaryCollar: {glued, surface boundary}.
  /// PolycycleNbhd: one circle per face, in face order.
  std::vector<std::size_t> circles;
  /// PolycycleNbhd only: the polycycle with local numbering, and the darts
  /// running along each boundary circle.
  SaddleDiagram neighborhood;
  std::vector<std::vector<Dart>> circle_sides;
};

struct CellModel {
  std::vector<Cell> cells;
  std::size_t circle_count = 0;
  std::size_t piece_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> gluings;
  std::vector<std::size_t> surface_boundary;
};

/// For a non-orientable component `genus` holds the crosscap count.
struct ComponentSignature {
  bool orientable = true;
  long genus = 0;
  long boundary = 0;
  long euler_char = 0;

  friend bool operator==(const ComponentSignature&, const ComponentSignature&) = default;
};

struct SurfaceSignature {
  std::vector<ComponentSignature> components;

  std::string format() const {
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto& c = components[i];
      s += "component=" + std::to_string(i) + " orientable=" + (c.orientable ? "true" : "false") +
           " genus=" + std::to_string(c.genus) + " boundary=" + std::to_string(c.boundary) +
           " chi=" + std::to_string(c.euler_char) + "\n";
    }
    return s;
  }

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

struct Reconstruction {
  CellModel cells;
  SurfaceSignature signature;
};

namespace detail {

inline void require_interior(const SaddleDiagram& d) {
  for (const auto& s : d.saddles)
    if (s.kind == SaddleKind::Boundary)
      throw Error(ErrorKind::Unsupported, "boundary saddle " + s.id + " cannot be reconstructed");
}

/// The polycycle of component c renumbered locally; relative order of saddles
/// and separatrices is kept, so the local face order equals the global one.
inline SaddleDiagram sub_diagram(const SaddleDiagram& d, const DiagramComponent& comp) {
  std::map<std::size_t, std::size_t> saddle_local, sep_local;
  for (auto s : comp.saddles) saddle_local.emplace(s, saddle_local.size());
  for (auto e : comp.separatrices) sep_local.emplace(e, sep_local.size());
  SaddleDiagram out;
  for (auto s : comp.saddles) {
    Saddle sd = d.saddles[s];
    for (auto& dt : sd.rotation) dt.separatrix = sep_local.at(dt.separatrix);
    out.saddles.push_back(std::move(sd));
  }
  for (auto e : comp.separatrices) {
    Separatrix sep = d.separatrices[e];
    sep.source = saddle_local.at(sep.source);
    sep.target = saddle_local.at(sep.target);
    out.separatrices.push_back(std::move(sep));
  }
  return out;
}

}  // namespace detail

/// Euler characteristic of each assembly piece: #C plus V - E of every polycycle in it.
inline std::vector<long> chi_cells(const InvariantPair& p) {
  detail::require_interior(p.diagram);
  require_valid(p);
  const detail::RibbonIndex idx(p.diagram);
  std::vector<long> out;
  for (const auto& piece : assembly_components(p)) {
    long chi = 0;
    for (auto v : piece.vertices)
      if (p.vertices[v].label == VertexLabel::C) ++chi;
    for (auto c : piece.diagram_components)
      chi += static_cast<long>(idx.components()[c].saddles.size()) -
             static_cast<long>(idx.components()[c].separatrices.size());
    out.push_back(chi);
  }
  return out;
}

/// Cells and gluings of the surface assembled from p.
inline CellModel build_cell_model(const InvariantPair& p) {
  detail::require_interior(p.diagram);
  require_valid(p);
  const detail::RibbonIndex idx(p.diagram);
  CellModel m;
  // circle glued to the annulus end at (vertex, face)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> circle_at;
  auto new_circle = [&] { return m.circle_count++; };
  const auto pieces = assembly_components(p);
  m.piece_count = pieces.size();
  for (std::size_t pc = 0; pc < pieces.size(); ++pc) {
    const auto& piece = pieces[pc];
    if (piece.torus) {
      m.cells.push_back({CellKind::Torus, pc, "torus", {}, {}, {}});
      continue;
    }
    for (auto v : piece.vertices) {
      const auto& vx = p.vertices[v];
      Cell cell;
      cell.piece = pc;
      cell.label = vx.id;
      switch (vx.label) {
        case VertexLabel::C: cell.kind = CellKind::CenterDisk; break;
        case VertexLabel::N: cell.kind = CellKind::MobiusCollar; break;
        case VertexLabel::B: cell.kind = CellKind::BoundaryCollar; break;
        case VertexLabel::Diagram: cell.kind = CellKind::PolycycleNbhd; break;
      }
      if (vx.label != VertexLabel::Diagram) {
        const auto c = new_circle();
        cell.circles.push_back(c);
        circle_at[{v, 0}] = c;
        if (vx.label == VertexLabel::B) {
          const auto outer = new_circle();
          cell.circles.push_back(outer);
          m.surface_boundary.push_back(outer);
        }
      } else {
        const auto& comp = idx.components()[vx.component];
        cell.neighborhood = detail::sub_diagram(p.diagram, comp);
        std::map<std::size_t, std::size_t> sep_local;
        for (auto e : comp.separatrices) sep_local.emplace(e, sep_local.size());
        const auto& faces = idx.component_faces(vx.component);
        for (std::size_t j = 0; j < faces.size(); ++j) {
          const auto c = new_circle();
          cell.circles.push_back(c);
          circle_at[{v, j}] = c;
          std::vector<Dart> sides;
          for (auto dt : idx.faces()[faces[j]].sides) sides.push_back({sep_local.at(dt.separatrix), dt.end});
          cell.circle_sides.push_back(std::move(sides));
        }
      }
      m.cells.push_back(std::move(cell));
    }
    for (auto a : piece.annuli) {
      const auto& an = p.annuli[a];
      Cell cell{CellKind::Annulus, pc, an.id, {}, {}, {}};
      for (const auto* at : {&an.neg, &an.pos}) {
        const auto c = new_circle();
        cell.circles.push_back(c);
        m.gluings.emplace_back(c, circle_at.at({at->vertex, at->face.value_or(0)}));
      }
      m.cells.push_back(std::move(cell));
    }
  }
  return m;
}

/// Reads the invariant pair back off a cell model: vertices from disks, collars
/// and polycycle neighborhoods, annuli with their glued circles, faces re-traced.
inline InvariantPair extract_pair(const CellModel& m) {
  InvariantPair p;
  std::vector<std::optional<Attachment>> circle_owner(m.circle_count);
  std::vector<std::pair<std::size_t, std::size_t>> nbhd_cells;  // (cell, separatrix offset)
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    const auto& cell = m.cells[i];
    if (cell.kind != CellKind::PolycycleNbhd) continue;
    const auto s_off = p.diagram.saddles.size();
    const auto e_off = p.diagram.separatrices.size();
    for (auto sd : cell.neighborhood.saddles) {
      for (auto& dt : sd.rotation) dt.separatrix += e_off;
      p.diagram.saddles.push_back(std::move(sd));
    }
    for (auto sep : cell.neighborhood.separatrices) {
      sep.source += s_off;
      sep.target += s_off;
      p.diagram.separatrices.push_back(std::move(sep));
    }
    nbhd_cells.emplace_back(i, e_off);
  }
  if (auto v = validate_diagram(p.diagram); !v.empty()) throw Error(ErrorKind::InvalidInput, v.front().message);
  const detail::RibbonIndex idx(p.diagram);

  std::size_t next_nbhd = 0;
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    const auto& cell = m.cells[i];
    VertexNode vx{cell.label, VertexLabel::C, 0};
    switch (cell.kind) {
      case CellKind::Torus: ++p.tori; continue;
      case CellKind::Annulus: continue;
      case CellKind::CenterDisk: vx.label = VertexLabel::C; break;
      case CellKind::MobiusCollar: vx.label = VertexLabel::N; break;
      case CellKind::BoundaryCollar: vx.label = VertexLabel::B; break;
      case CellKind::PolycycleNbhd: vx.label = VertexLabel::Diagram; break;
    }
    const auto v = p.vertices.size();
    if (cell.kind != CellKind::PolycycleNbhd) {
      circle_owner.at(cell.circles.front()) = Attachment{v, std::nullopt};
    } else {
      const auto e_off = nbhd_cells.at(next_nbhd++).second;
      std::optional<std::size_t> comp;
      for (std::size_t j = 0; j < cell.circles.size(); ++j) {
        const auto& sides = cell.circle_sides.at(j);
        auto global = [&](Dart dt) { return Dart{dt.separatrix + e_off, dt.end}.index(); };
        const auto g = idx.face_of(global(sides.front()));
        if (idx.faces()[g].sides.size() != sides.size())
          throw Error(ErrorKind::InvalidInput, "circle of " + cell.label + " is not a face boundary");
        for (auto dt : sides)
          if (idx.face_of(global(dt)) != g)
            throw Error(ErrorKind::InvalidInput, "circle of " + cell.label + " is not a face boundary");
        comp = idx.faces()[g].component;
        circle_owner.at(cell.circles[j]) = Attachment{v, idx.local_face(g)};
      }
      if (!comp) throw Error(ErrorKind::InvalidInput, "polycycle neighborhood " + cell.label + " has no boundary");
      vx.component = *comp;
    }
    p.vertices.push_back(std::move(vx));
  }

  std::vector<std::size_t> partner(m.circle_count, static_cast<std::size_t>(-1));
  for (auto [a, b] : m.gluings) {
    partner.at(a) = b;
    partner.at(b) = a;
  }
  auto owner_across = [&](std::size_t circle) {
    const auto other = partner.at(circle);
    if (other == static_cast<std::size_t>(-1) || !circle_owner.at(other))
      throw Error(ErrorKind::InvalidInput, "annulus circle is not glued to a vertex cell");
    return *circle_owner[other];
  };
  for (const auto& cell : m.cells)
    if (cell.kind == CellKind::Annulus)
      p.annuli.push_back({cell.label, owner_across(cell.circles.at(0)), owner_across(cell.circles.at(1))});
  return p;
}

/// A 2-complex of polygons; each polygon is a cyclic word of (edge, +1 | -1).
struct CellComplex {
  using Letter = std::pair<std::size_t, int>;

  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<std::vector<Letter>> polygons;

  long euler_characteristic() const {
    return static_cast<long>(vertices) - static_cast<long>(edges) + static_cast<long>(polygons.size());
  }

  std::vector<int> edge_uses() const {
    std::vector<int> uses(edges, 0);
    for (const auto& poly : polygons)
      for (auto [e, s] : poly) ++uses[e];
    return uses;
  }

  /// Every edge borders exactly two polygon sides.
  bool closed() const {
    const auto uses = edge_uses();
    return std::all_of(uses.begin(), uses.end(), [](int u) { return u == 2; });
  }

  /// Boundary edges are loops, so each is one boundary circle.
  long boundary_circles() const {
    const auto uses = edge_uses();
    return std::count(uses.begin(), uses.end(), 1);
  }

  /// Polygons can be oriented so every interior edge is crossed in opposite directions.
  bool orientable() const {
    std::vector<std::vector<std::pair<std::size_t, int>>> occ(edges);  // (polygon, sign)
    for (std::size_t f = 0; f < polygons.size(); ++f)
      for (auto [e, s] : polygons[f]) occ[e].emplace_back(f, s);
    std::vector<int> orient(polygons.size(), 0);
    for (std::size_t root = 0; root < polygons.size(); ++root) {
      if (orient[root]) continue;
      orient[root] = 1;
      std::vector<std::size_t> stack{root};
      while (!stack.empty()) {
        const auto f = stack.back();
        stack.pop_back();
        for (auto [e, s] : polygons[f]) {
          if (occ[e].size() != 2) continue;
          const auto& [g, t] = occ[e][0].first == f && occ[e][0].second == s ? occ[e][1] : occ[e][0];
          const int want = -orient[f] * s * t;
          if (!orient[g]) {
            orient[g] = want;
            stack.push_back(g);
          } else if (orient[g] != want) {
            return false;
          }
        }
      }
    }
    return true;
  }
};

/// The full cell complex of one piece of a cell model. Each glued circle is a
/// vertex with a loop edge oriented along the flow.
inline CellComplex cell_complex(const CellModel& m, std::size_t piece) {
  CellComplex cx;
  std::vector<std::size_t> root(m.circle_count);
  std::iota(root.begin(), root.end(), 0);
  for (auto [a, b] : m.gluings) root[std::max(a, b)] = std::min(a, b);
  auto find = [&](std::size_t c) {
    while (root[c] != c) c = root[c];
    return c;
  };
  std::map<std::size_t, std::size_t> gamma;  // circle class -> edge
  auto circle_edge = [&](std::size_t c) {
    const auto r = find(c);
    if (auto it = gamma.find(r); it != gamma.end()) return it->second;
    ++cx.vertices;
    return gamma[r] = cx.edges++;
  };
  auto new_edge = [&] { return cx.edges++; };
  for (const auto& cell : m.cells) {
    if (cell.piece != piece) continue;
    switch (cell.kind) {
      case CellKind::Torus: {
        ++cx.vertices;
        const auto a = new_edge(), b = new_edge();
        cx.polygons.push_back({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
        break;
      }
      case CellKind::CenterDisk: {
        ++cx.vertices;
        const auto r = new_edge();
        cx.polygons.push_back({{r, 1}, {circle_edge(cell.circles[0]), 1}, {r, -1}});
        break;
      }
      case CellKind::Annulus: {
        const auto r = new_edge();
        cx.polygons.push_back(
            {{circle_edge(cell.circles[0]), 1}, {r, 1}, {circle_edge(cell.circles[1]), -1}, {r, -1}});
        break;
      }
      case CellKind::MobiusCollar: {
        ++cx.vertices;
        const auto core = new_edge(), r = new_edge();
        cx.polygons.push_back({{circle_edge(cell.circles[0]), 1}, {r, 1}, {core, -1}, {core, -1}, {r, -1}});
        break;
      }
      case CellKind::BoundaryCollar: {
        const auto r = new_edge();
        cx.polygons.push_back(
            {{circle_edge(cell.circles[0]), 1}, {r, 1}, {circle_edge(cell.circles[1]), -1}, {r, -1}});
        break;
      }
      case CellKind::PolycycleNbhd: {
        const auto& nb = cell.neighborhood;
        cx.vertices += nb.saddles.size();
        const auto sep0 = cx.edges;
        cx.edges += nb.separatrices.size();
        for (std::size_t j = 0; j < cell.circles.size(); ++j) {
          std::vector<CellComplex::Letter> word;
          bool positive = true;
          for (auto dt : cell.circle_sides[j]) {
            word.emplace_back(sep0 + dt.separatrix, dt.end == End::Out ? 1 : -1);
            positive = positive && dt.end == End::Out;
          }
          const auto rho = new_edge();
          word.emplace_back(rho, 1);
          word.emplace_back(circle_edge(cell.circles[j]), positive ? -1 : 1);
          word.emplace_back(rho, -1);
          cx.polygons.push_back(std::move(word));
        }
        break;
      }
    }
  }
  return cx;
}

/// Cell model plus per-piece signature: orientable iff no N vertex, boundary
/// count #B, chi from the counting identity, genus solved from chi.
inline Reconstruction reconstruct(const InvariantPair& p) {
  Reconstruction r;
  r.cells = build_cell_model(p);
  const auto chis = chi_cells(p);
  const auto pieces = assembly_components(p);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    ComponentSignature sig;
    long n_count = 0;
    for (auto v : pieces[i].vertices) {
      if (p.vertices[v].label == VertexLabel::N) ++n_count;
      if (p.vertices[v].label == VertexLabel::B) ++sig.boundary;
    }
    sig.orientable = n_count == 0;
    sig.euler_char = chis[i];
    const long deficit = 2 - sig.euler_char - sig.boundary;
    if (deficit < 0 || (sig.orientable && deficit % 2 != 0))
      throw Error(ErrorKind::NonIntegerGenus, "piece " + std::to_string(i) + " has chi " +
                                                  std::to_string(sig.euler_char) + " and " +
                                                  std::to_string(sig.boundary) + " boundary circles");
    sig.genus = sig.orientable ? deficit / 2 : deficit;
    r.signature.components.push_back(sig);
  }
  return r;
}

/// An invariant pair whose unlabeled extended-orbit graph is g.
///
/// A vertex of degree 1 becomes a center. A vertex of degree d >= 2 becomes a
/// polycycle: one (d-2)-saddle with d-1 homoclinic loops and d faces, split
/// into as many positive faces as the vertex has outgoing edges under an
/// Euler-balanced orientation. Each edge becomes an annulus from the positive
/// face at its tail to the negative face at its head.
inline InvariantPair realize_multigraph(const Multigraph& g) {
  if (g.vertex_count == 0) throw Error(ErrorKind::NotRealizableInput, "empty graph");
  if (g.edges.empty()) throw Error(ErrorKind::NotRealizableInput, "graph has no edges");
  if (!g.connected()) throw Error(ErrorKind::NotRealizableInput, "graph is not connected");
  for (auto [a, b] : g.edges)
    if (a >= g.vertex_count || b >= g.vertex_count) throw Error(ErrorKind::NotRealizableInput, "edge end out of range");

  // Hierholzer on g plus a hub joined to every odd vertex.
  const std::size_t n = g.vertex_count;
  auto ends = g.edges;
  const auto deg = g.degrees();
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] % 2) ends.emplace_back(v, n);
  std::vector<std::vector<std::size_t>> adj(n + 1);
  for (std::size_t e = 0; e < ends.size(); ++e) {
    adj[ends[e].first].push_back(e);
    if (ends[e].second != ends[e].first) adj[ends[e].second].push_back(e);
  }
  std::vector<char> used(ends.size(), 0);
  std::vector<std::size_t> next(n + 1, 0);
  std::vector<std::size_t> tail(g.edges.size(), 0);
  std::vector<std::size_t> stack{ends.front().first};
  while (!stack.empty()) {
    const auto v = stack.back();
    auto& k = next[v];
    while (k < adj[v].size() && used[adj[v][k]]) ++k;
    if (k == adj[v].size()) {
      stack.pop_back();
      continue;
    }
    const auto e = adj[v][k];
    used[e] = 1;
    const auto w = ends[e].first == v ? ends[e].second : ends[e].first;
    if (e < g.edges.size()) tail[e] = v;
    stack.push_back(w);
  }

  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    const auto head = tail[e] == a ? b : a;
    ++out_deg[tail[e]];
    ++in_deg[head];
  }

  InvariantPair p;
  std::vector<std::size_t> component(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::string vid = "v" + std::to_string(v);
    if (deg[v] == 1) {
      p.vertices.push_back({vid, VertexLabel::C, 0});
      continue;
    }
    const auto s = p.diagram.saddles.size();
    component[v] = s;
    p.vertices.push_back({vid, VertexLabel::Diagram, s});
    // Rotation a_out, (b_in b_out)^m, a_in, (c_out c_in)^l with m = out - 1, l = in - 1.
    Saddle sd{"s" + std::to_string(v), SaddleKind::Interior, static_cast<int>(deg[v]) - 2, {}};
    auto loop = [&] {
      const auto e = p.diagram.separatrices.size();
      p.diagram.separatrices.push_back({sd.id + "e" + std::to_string(e), s, s, false});
      return e;
    };
    const auto a = loop();
    sd.rotation.push_back({a, End::Out});
    for (std::size_t i = 1; i < out_deg[v]; ++i) {
      const auto b = loop();
      sd.rotation.push_back({b, End::In});
      sd.rotation.push_back({b, End::Out});
    }
    sd.rotation.push_back({a, End::In});
    for (std::size_t i = 1; i < in_deg[v]; ++i) {
      const auto c = loop();
      sd.rotation.push_back({c, End::Out});
      sd.rotation.push_back({c, End::In});
    }
    p.diagram.saddles.push_back(std::move(sd));
  }

  const detail::RibbonIndex idx(p.diagram);
  std::vector<std::vector<std::size_t>> free_pos(n), free_neg(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] == 1) continue;
    const auto& faces = idx.component_faces(component[v]);
    for (std::size_t j = faces.size(); j-- > 0;) (idx.faces()[faces[j]].flow_positive ? free_pos : free_neg)[v].push_back(j);
  }
  auto take = [&](std::size_t v, bool positive) -> Attachment {
    if (deg[v] == 1) return {v, std::nullopt};
    auto& pool = positive ? free_pos[v] : free_neg[v];
    const auto j = pool.back();
    pool.pop_back();
    return {v, j};
  };
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    const auto head = tail[e] == a ? b : a;
    const auto neg = take(tail[e], true);
    const auto pos = take(head, false);
    p.annuli.push_back({"a" + std::to_string(e), neg, pos});
  }
  return p;
}

}  // namespace flowinv
