#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "flowinv/flowinv.hpp"

namespace flowinv::test {

inline std::string model_path(const std::string& name) { return std::string(FLOWINV_MODELS_DIR) + "/" + name + ".json"; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline InvariantPair load(const std::string& name) { return parse_model(read_text(model_path(name))); }

inline Saddle saddle(std::string id, int k, std::vector<Dart> rotation) {
  return {std::move(id), SaddleKind::Interior, k, std::move(rotation)};
}

inline Dart out(std::size_t e) { return {e, End::Out}; }
inline Dart in(std::size_t e) { return {e, End::In}; }

/// One 1-saddle with loops a and b; `nested` picks the rotation (a_out, b_in, b_out, a_in).
inline SaddleDiagram figure_eight(bool nested = false) {
  SaddleDiagram d;
  d.saddles = {nested ? saddle("s", 1, {out(0), in(1), out(1), in(0)}) : saddle("s", 1, {out(0), in(0), out(1), in(1)})};
  d.separatrices = {{"a", 0, 0, false}, {"b", 0, 0, false}};
  return d;
}

inline InvariantPair sphere_rotation() {
  InvariantPair p;
  p.vertices = {{"c1", VertexLabel::C, 0}, {"c2", VertexLabel::C, 0}};
  p.annuli = {{"U", {0, std::nullopt}, {1, std::nullopt}}};
  return p;
}

inline InvariantPair periodic_torus() {
  InvariantPair p;
  p.tori = 1;
  return p;
}

}  // namespace flowinv::test
