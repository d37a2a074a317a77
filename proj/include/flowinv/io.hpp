#pragma once

// JSON model documents: strict parsing with source-located diagnostics,
// deterministic serialization, and Graphviz DOT export.

#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "flowinv/error.hpp"
#include "flowinv/flow_graph.hpp"
#include "flowinv/multigraph.hpp"
#include "flowinv/saddle_diagram.hpp"

namespace flowinv {

inline constexpr int model_format_version = 1;

enum class ModelErrorKind { Syntax, Schema, Semantic };

inline const char* to_string(ModelErrorKind k) {
  switch (k) {
    case ModelErrorKind::Syntax: return "SyntaxError";
    case ModelErrorKind::Schema: return "SchemaError";
    case ModelErrorKind::Semantic: return "SemanticError";
  }
  return "?";
}

struct Diagnostic {
  std::size_t line = 1;
  std::size_t column = 1;
  /// JSON pointer of the offending field ("" for the whole document).
  std::string field;
  std::string rule;
  std::string message;

  std::string format() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + (field.empty() ? "/" : field) + ": " + rule +
           ": " + message;
  }
};

class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorKind kind, std::vector<Diagnostic> diagnostics)
      : std::runtime_error(make_what(kind, diagnostics)), kind_(kind), diagnostics_(std::move(diagnostics)) {}

  ModelErrorKind kind() const noexcept { return kind_; }
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  static std::string make_what(ModelErrorKind kind, const std::vector<Diagnostic>& ds) {
    std::string s = to_string(kind);
    if (!ds.empty()) s += ": " + ds.front().format();
    return s;
  }

  ModelErrorKind kind_;
  std::vector<Diagnostic> diagnostics_;
};

namespace detail {

using nlohmann::json;

/// Input iterator that publishes how far the parser has read.
struct TrackingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* at = nullptr;
  const char** live = nullptr;

  reference operator*() const { return *at; }
  TrackingIterator& operator++() {
    ++at;
    if (live) *live = at;
    return *this;
  }
  TrackingIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.at == b.at; }
};

/// Byte offsets of JSON pointers, recorded while the parser reads each key or element.
class PositionRecorder : public nlohmann::json_sax<json> {
 public:
  PositionRecorder(const char* begin, const char** live) : begin_(begin), live_(live) {}

  std::map<std::string, std::size_t> offsets;
  std::vector<std::string> duplicate_keys;

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override { return open(false); }
  bool start_array(std::size_t) override { return open(true); }
  bool end_object() override { return close(); }
  bool end_array() override { return close(); }
  bool key(string_t& k) override {
    auto& top = stack_.back();
    top.key = escape(k);
    const auto path = top.path + "/" + top.key;
    if (!top.keys.insert(k).second) duplicate_keys.push_back(path);
    offsets.emplace(path, here());
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    bool array = false;
    std::size_t index = 0;
    std::string key;
    std::string path;
    std::set<std::string> keys;
  };

  static std::string escape(const std::string& k) {
    std::string out;
    for (char c : k) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  std::size_t here() const { return static_cast<std::size_t>(*live_ - begin_); }

  std::string element_path() {
    if (stack_.empty()) {
      offsets.emplace("", 0);
      return "";
    }
    auto& top = stack_.back();
    if (!top.array) return top.path + "/" + top.key;
    auto path = top.path + "/" + std::to_string(top.index++);
    offsets.emplace(path, here());
    return path;
  }

  bool value() {
    element_path();
    return true;
  }
  bool open(bool array) {
    auto path = element_path();
    stack_.push_back({array, 0, "", std::move(path), {}});
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }

  const char* begin_;
  const char** live_;
  std::vector<Frame> stack_;
};

class SourceMap {
 public:
  SourceMap() = default;
  SourceMap(std::string text, std::map<std::string, std::size_t> offsets)
      : text_(std::move(text)), offsets_(std::move(offsets)) {}

  std::pair<std::size_t, std::size_t> line_col(std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  /// Location of `pointer`, or of its nearest recorded ancestor.
  Diagnostic diagnostic(std::string pointer, std::string rule, std::string message) const {
    Diagnostic d;
    d.field = pointer;
    d.rule = std::move(rule);
    d.message = std::move(message);
    while (true) {
      if (auto it = offsets_.find(pointer); it != offsets_.end()) {
        std::tie(d.line, d.column) = line_col(it->second);
        break;
      }
      const auto slash = pointer.rfind('/');
      if (slash == std::string::npos) break;
      pointer.resize(slash);
    }
    return d;
  }

 private:
  std::string text_;
  std::map<std::string, std::size_t> offsets_;
};

inline std::pair<json, SourceMap> parse_json(const std::string& text) {
  const char* live = text.data();
  PositionRecorder rec(text.data(), &live);
  const TrackingIterator first{text.data(), &live};
  const TrackingIterator last{text.data() + text.size(), nullptr};
  json doc;
  try {
    json::sax_parse(first, last, &rec, nlohmann::detail::input_format_t::json, true);
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    SourceMap map(text, {});
    Diagnostic d;
    std::tie(d.line, d.column) = map.line_col(e.byte > 0 ? e.byte - 1 : 0);
    d.rule = "syntax";
    d.message = e.what();
    throw ModelError(ModelErrorKind::Syntax, {d});
  }
  if (doc.is_discarded() || (text.find_first_not_of(" \t\r\n") == std::string::npos)) {
    throw ModelError(ModelErrorKind::Syntax, {Diagnostic{1, 1, "", "syntax", "empty document"}});
  }
  SourceMap map(text, std::move(rec.offsets));
  if (!rec.duplicate_keys.empty()) {
    std::vector<Diagnostic> ds;
    for (const auto& k : rec.duplicate_keys) ds.push_back(map.diagnostic(k, "duplicate-key", "key appears twice"));
    throw ModelError(ModelErrorKind::Schema, std::move(ds));
  }
  return {std::move(doc), std::move(map)};
}

/// Strict structural reader that collects schema diagnostics instead of stopping at the first.
class SchemaReader {
 public:
  explicit SchemaReader(const SourceMap& map) : map_(map) {}

  std::vector<Diagnostic> errors;

  void fail(const std::string& ptr, std::string rule, std::string msg) {
    errors.push_back(map_.diagnostic(ptr, std::move(rule), std::move(msg)));
  }

  /// Checks that `v` is an object with the required keys and no others.
  bool object(const json& v, const std::string& ptr, std::initializer_list<const char*> required,
              std::initializer_list<const char*> optional = {}) {
    if (!v.is_object()) {
      fail(ptr, "type", "expected an object");
      return false;
    }
    bool ok = true;
    for (const char* k : required)
      if (!v.contains(k)) {
        fail(ptr, "required", std::string("missing field \"") + k + "\"");
        ok = false;
      }
    for (const auto& [k, _] : v.items()) {
      bool known = false;
      for (const char* r : required) known = known || k == r;
      for (const char* o : optional) known = known || k == o;
      if (!known) {
        fail(ptr + "/" + k, "unknown-field", "field \"" + k + "\" is not part of the schema");
        ok = false;
      }
    }
    return ok;
  }

  const json* array(const json& obj, const char* key, const std::string& ptr) {
    if (!obj.contains(key)) return nullptr;
    const auto& v = obj.at(key);
    if (!v.is_array()) {
      fail(ptr + "/" + key, "type", "expected an array");
      return nullptr;
    }
    return &v;
  }

  std::optional<std::string> string(const json& obj, const char* key, const std::string& ptr) {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_string()) {
      fail(ptr + "/" + key, "type", "expected a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  }

  std::optional<std::size_t> natural(const json& obj, const char* key, const std::string& ptr) {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0)) {
      fail(ptr + "/" + key, "type", "expected a non-negative integer");
      return std::nullopt;
    }
    return v.get<std::size_t>();
  }

  std::optional<std::string> choice(const json& obj, const char* key, const std::string& ptr,
                                    std::initializer_list<const char*> allowed) {
    auto s = string(obj, key, ptr);
    if (!s) return std::nullopt;
    for (const char* a : allowed)
      if (*s == a) return s;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    fail(ptr + "/" + key, "enum", "\"" + *s + "\" is not one of " + list);
    return std::nullopt;
  }

 private:
  const SourceMap& map_;
};

inline std::string pointer_of(const Violation& v) {
  switch (v.entity) {
    case EntityKind::Saddle: return "/diagram/saddles/" + std::to_string(v.index);
    case EntityKind::Separatrix: return "/diagram/separatrices/" + std::to_string(v.index);
    case EntityKind::Vertex: return "/graph/vertices/" + std::to_string(v.index);
    case EntityKind::Annulus: return "/graph/annuli/" + std::to_string(v.index);
    case EntityKind::Model: return "";
  }
  return "";
}

}  // namespace detail

/// A parsed document whose structure is sound but which has not been validated.
struct ParsedModel {
  InvariantPair pair;
  detail::SourceMap source;

  std::vector<Diagnostic> locate(const Violations& vs) const {
    std::vector<Diagnostic> out;
    for (const auto& v : vs) out.push_back(source.diagnostic(detail::pointer_of(v), v.rule, v.message));
    return out;
  }
};

/// Parses syntax and schema (types, required and unknown fields, id references);
/// throws ModelError of kind Syntax or Schema.
inline ParsedModel parse_model_unchecked(const std::string& text) {
  using detail::json;
  auto [doc, map] = detail::parse_json(text);
  detail::SchemaReader r(map);
  ParsedModel out{{}, map};
  auto& p = out.pair;
  auto done = [&] {
    if (!r.errors.empty()) throw ModelError(ModelErrorKind::Schema, std::move(r.errors));
  };

  if (!r.object(doc, "", {"version", "diagram", "graph"})) done();
  if (auto v = r.natural(doc, "version", "")) {
    if (*v != model_format_version)
      r.fail("/version", "version", "unsupported version " + std::to_string(*v) + ", expected " +
                                        std::to_string(model_format_version));
  }
  done();

  const auto& dg = doc.at("diagram");
  const auto& gr = doc.at("graph");
  const bool dg_ok = r.object(dg, "/diagram", {"saddles", "separatrices"});
  const bool gr_ok = r.object(gr, "/graph", {"vertices", "annuli", "tori"});
  done();
  (void)dg_ok;
  (void)gr_ok;

  const json* saddles = r.array(dg, "saddles", "/diagram");
  const json* seps = r.array(dg, "separatrices", "/diagram");
  const json* verts = r.array(gr, "vertices", "/graph");
  const json* annuli = r.array(gr, "annuli", "/graph");
  if (auto t = r.natural(gr, "tori", "/graph")) p.tori = *t;
  done();

  auto collect_ids = [&](const json& arr, const std::string& base, std::map<std::string, std::size_t>& ids) {
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto ptr = base + "/" + std::to_string(i);
      if (!arr[i].is_object()) continue;
      if (auto id = r.string(arr[i], "id", ptr))
        if (!ids.emplace(*id, i).second) r.fail(ptr + "/id", "duplicate-id", "id \"" + *id + "\" is already used");
    }
  };
  std::map<std::string, std::size_t> saddle_ids, sep_ids, vertex_ids, annulus_ids;
  collect_ids(*saddles, "/diagram/saddles", saddle_ids);
  collect_ids(*seps, "/diagram/separatrices", sep_ids);
  collect_ids(*verts, "/graph/vertices", vertex_ids);
  collect_ids(*annuli, "/graph/annuli", annulus_ids);

  auto resolve = [&](const std::map<std::string, std::size_t>& ids, const std::optional<std::string>& id,
                     const std::string& ptr, const char* what) -> std::size_t {
    if (!id) return 0;
    auto it = ids.find(*id);
    if (it == ids.end()) {
      r.fail(ptr, "unknown-reference", std::string("no ") + what + " with id \"" + *id + "\"");
      return 0;
    }
    return it->second;
  };

  for (std::size_t i = 0; i < seps->size(); ++i) {
    const auto ptr = "/diagram/separatrices/" + std::to_string(i);
    const auto& s = (*seps)[i];
    Separatrix sep;
    if (r.object(s, ptr, {"id", "source", "target"}, {"twisted"})) {
      sep.id = r.string(s, "id", ptr).value_or("");
      sep.source = resolve(saddle_ids, r.string(s, "source", ptr), ptr + "/source", "saddle");
      sep.target = resolve(saddle_ids, r.string(s, "target", ptr), ptr + "/target", "saddle");
      if (s.contains("twisted")) {
        if (!s.at("twisted").is_boolean()) r.fail(ptr + "/twisted", "type", "expected a boolean");
        else sep.twisted = s.at("twisted").get<bool>();
      }
    }
    p.diagram.separatrices.push_back(std::move(sep));
  }

  for (std::size_t i = 0; i < saddles->size(); ++i) {
    const auto ptr = "/diagram/saddles/" + std::to_string(i);
    const auto& s = (*saddles)[i];
    Saddle sd;
    if (r.object(s, ptr, {"id", "kind", "k", "rotation"})) {
      sd.id = r.string(s, "id", ptr).value_or("");
      if (auto kind = r.choice(s, "kind", ptr, {"interior", "boundary"}))
        sd.kind = *kind == "interior" ? SaddleKind::Interior : SaddleKind::Boundary;
      sd.k = static_cast<int>(r.natural(s, "k", ptr).value_or(0));
      if (const json* rot = r.array(s, "rotation", ptr))
        for (std::size_t j = 0; j < rot->size(); ++j) {
          const auto dptr = ptr + "/rotation/" + std::to_string(j);
          const auto& dt = (*rot)[j];
          Dart dart;
          if (r.object(dt, dptr, {"sep", "end"})) {
            dart.separatrix = resolve(sep_ids, r.string(dt, "sep", dptr), dptr + "/sep", "separatrix");
            if (auto end = r.choice(dt, "end", dptr, {"out", "in"})) dart.end = *end == "out" ? End::Out : End::In;
          }
          sd.rotation.push_back(dart);
        }
    }
    p.diagram.saddles.push_back(std::move(sd));
  }

  for (std::size_t i = 0; i < verts->size(); ++i) {
    const auto ptr = "/graph/vertices/" + std::to_string(i);
    const auto& v = (*verts)[i];
    VertexNode node;
    if (r.object(v, ptr, {"id", "label"}, {"component"})) {
      node.id = r.string(v, "id", ptr).value_or("");
      if (auto label = r.choice(v, "label", ptr, {"c", "n", "b", "diagram"})) {
        node.label = *label == "c" ? VertexLabel::C
                     : *label == "n" ? VertexLabel::N
                     : *label == "b" ? VertexLabel::B
                                     : VertexLabel::Diagram;
        if (node.label == VertexLabel::Diagram) {
          if (!v.contains("component")) r.fail(ptr, "required", "diagram vertex needs field \"component\"");
          node.component = r.natural(v, "component", ptr).value_or(0);
        } else if (v.contains("component")) {
          r.fail(ptr + "/component", "unknown-field", "only diagram vertices carry a component");
        }
      }
    }
    p.vertices.push_back(std::move(node));
  }

  for (std::size_t i = 0; i < annuli->size(); ++i) {
    const auto ptr = "/graph/annuli/" + std::to_string(i);
    const auto& a = (*annuli)[i];
    AnnulusEdge edge;
    if (r.object(a, ptr, {"id", "neg", "pos"})) {
      edge.id = r.string(a, "id", ptr).value_or("");
      for (const char* side : {"neg", "pos"}) {
        const auto aptr = ptr + "/" + side;
        const auto& at = a.at(side);
        Attachment att;
        if (r.object(at, aptr, {"vertex"}, {"face"})) {
          att.vertex = resolve(vertex_ids, r.string(at, "vertex", aptr), aptr + "/vertex", "vertex");
          if (at.contains("face")) att.face = r.natural(at, "face", aptr);
        }
        (std::string(side) == "neg" ? edge.neg : edge.pos) = att;
      }
    }
    p.annuli.push_back(std::move(edge));
  }
  done();
  return out;
}

/// Parses and validates; throws ModelError (Syntax, Schema or Semantic).
inline InvariantPair parse_model(const std::string& text) {
  auto parsed = parse_model_unchecked(text);
  if (auto vs = validate_pair(parsed.pair); !vs.empty())
    throw ModelError(ModelErrorKind::Semantic, parsed.locate(vs));
  return std::move(parsed.pair);
}

/// Canonical field order; `pretty` indents by two spaces, otherwise a single line.
inline std::string serialize_model(const InvariantPair& p, bool pretty = true) {
  using oj = nlohmann::ordered_json;
  auto sep_id = [&](std::size_t e) {
    if (e >= p.diagram.separatrices.size()) throw Error(ErrorKind::InvalidInput, "dangling separatrix index");
    return p.diagram.separatrices[e].id;
  };
  auto saddle_id = [&](std::size_t s) {
    if (s >= p.diagram.saddles.size()) throw Error(ErrorKind::InvalidInput, "dangling saddle index");
    return p.diagram.saddles[s].id;
  };
  auto vertex_id = [&](std::size_t v) {
    if (v >= p.vertices.size()) throw Error(ErrorKind::InvalidInput, "dangling vertex index");
    return p.vertices[v].id;
  };

  oj saddles = oj::array();
  for (const auto& s : p.diagram.saddles) {
    oj rot = oj::array();
    for (auto dt : s.rotation) rot.push_back(oj{{"sep", sep_id(dt.separatrix)}, {"end", to_string(dt.end)}});
    saddles.push_back(oj{{"id", s.id},
                         {"kind", s.kind == SaddleKind::Interior ? "interior" : "boundary"},
                         {"k", s.k},
                         {"rotation", std::move(rot)}});
  }
  oj seps = oj::array();
  for (const auto& e : p.diagram.separatrices) {
    oj j{{"id", e.id}, {"source", saddle_id(e.source)}, {"target", saddle_id(e.target)}};
    if (e.twisted) j["twisted"] = true;
    seps.push_back(std::move(j));
  }
  oj verts = oj::array();
  for (const auto& v : p.vertices) {
    oj j{{"id", v.id}, {"label", to_string(v.label)}};
    if (v.label == VertexLabel::Diagram) j["component"] = v.component;
    verts.push_back(std::move(j));
  }
  auto attachment = [&](const Attachment& at) {
    oj j{{"vertex", vertex_id(at.vertex)}};
    if (at.face) j["face"] = *at.face;
    return j;
  };
  oj annuli = oj::array();
  for (const auto& a : p.annuli) annuli.push_back(oj{{"id", a.id}, {"neg", attachment(a.neg)}, {"pos", attachment(a.pos)}});

  oj doc{{"version", model_format_version},
         {"diagram", oj{{"saddles", std::move(saddles)}, {"separatrices", std::move(seps)}}},
         {"graph", oj{{"vertices", std::move(verts)}, {"annuli", std::move(annuli)}, {"tori", p.tori}}}};
  return pretty ? doc.dump(2) + "\n" : doc.dump();
}

enum class DotView { Graph, Diagram };

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string export_dot(const InvariantPair& p, DotView which) {
  require_valid(p);
  using detail::dot_quote;
  std::ostringstream os;
  if (which == DotView::Graph) {
    auto end_label = [&](const Attachment& at) {
      auto s = p.vertices[at.vertex].id;
      if (at.face) s += "#" + std::to_string(*at.face);
      return s;
    };
    os << "graph G {\n";
    for (const auto& v : p.vertices) {
      const std::string label =
          v.label == VertexLabel::Diagram ? "polycycle " + std::to_string(v.component) : to_string(v.label);
      os << "  " << dot_quote(v.id) << " [label=" << dot_quote(label) << "];\n";
    }
    for (std::size_t t = 0; t < p.tori; ++t)
      os << "  " << dot_quote("torus" + std::to_string(t)) << " [label=\"torus\", shape=box];\n";
    for (const auto& a : p.annuli)
      os << "  " << dot_quote(p.vertices[a.neg.vertex].id) << " -- " << dot_quote(p.vertices[a.pos.vertex].id)
         << " [label=" << dot_quote(a.id + ": (" + end_label(a.neg) + ", " + end_label(a.pos) + ")") << "];\n";
    os << "}\n";
  } else {
    os << "digraph D {\n";
    for (const auto& s : p.diagram.saddles) {
      std::string word;
      for (auto dt : s.rotation)
        word += (word.empty() ? "" : " ") + p.diagram.separatrices[dt.separatrix].id + ":" + to_string(dt.end);
      os << "  " << dot_quote(s.id) << " [label=" << dot_quote(s.id + " k=" + std::to_string(s.k) + "\n(" + word + ")")
         << "];\n";
    }
    for (const auto& e : p.diagram.separatrices)
      os << "  " << dot_quote(p.diagram.saddles[e.source].id) << " -> " << dot_quote(p.diagram.saddles[e.target].id)
         << " [label=" << dot_quote(e.id) << "];\n";
    os << "}\n";
  }
  return os.str();
}

/// {"vertices": n, "edges": [[u, v], ...]} with 0-based vertex numbers.
inline Multigraph parse_multigraph(const std::string& text) {
  auto [doc, map] = detail::parse_json(text);
  detail::SchemaReader r(map);
  Multigraph g;
  if (r.object(doc, "", {"vertices", "edges"})) {
    g.vertex_count = r.natural(doc, "vertices", "").value_or(0);
    if (const auto* edges = r.array(doc, "edges", ""))
      for (std::size_t i = 0; i < edges->size(); ++i) {
        const auto ptr = "/edges/" + std::to_string(i);
        const auto& e = (*edges)[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
          r.fail(ptr, "type", "expected a pair of vertex numbers");
          continue;
        }
        const auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
        if (a >= g.vertex_count || b >= g.vertex_count) {
          r.fail(ptr, "unknown-reference", "vertex number out of range");
          continue;
        }
        g.edges.emplace_back(a, b);
      }
  }
  if (!r.errors.empty()) throw ModelError(ModelErrorKind::Schema, std::move(r.errors));
  return g;
}

inline std::string serialize_multigraph(const Multigraph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  return nlohmann::ordered_json{{"vertices", g.vertex_count}, {"edges", std::move(edges)}}.dump() + "\n";
}

}  // namespace flowinv
