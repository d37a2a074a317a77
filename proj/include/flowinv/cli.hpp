#pragma once

// Command-line front end. run_command returns the process exit status:
// 0 success, 1 invalid model or non-isomorphic inputs, 2 parse error, 64 usage error.

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowinv/enumeration.hpp"
#include "flowinv/flow_graph.hpp"
#include "flowinv/io.hpp"
#include "flowinv/isomorphism.hpp"
#include "flowinv/surface.hpp"

namespace flowinv {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;
inline constexpr int parse_error = 2;
inline constexpr int usage = 64;
}  // namespace exit_code

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void print_diagnostics(std::ostream& err, const std::string& path, const ModelError& e) {
  err << path << ": " << to_string(e.kind()) << "\n";
  for (const auto& d : e.diagnostics()) err << path << ":" << d.format() << "\n";
}

inline const char* flag(bool b) { return b ? "true" : "false"; }

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of non-wandering surface flows", "flowinv"};
  app.require_subcommand(1);

  std::string file, file_b, which = "graph";
  bool reverse = false, count_only = false;
  EnumBounds bounds;

  auto* validate = app.add_subcommand("validate", "Parse a model and report violated rules");
  validate->add_option("file", file, "Model file")->required();

  auto* canon = app.add_subcommand("canon", "Print the canonical form and its digest");
  canon->add_option("file", file, "Model file")->required();
  canon->add_flag("--reverse-allowed", reverse, "Compare up to orbit reversal");

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two models");
  iso->add_option("file_a", file, "First model")->required();
  iso->add_option("file_b", file_b, "Second model")->required();
  iso->add_flag("--reverse-allowed", reverse, "Compare up to orbit reversal");

  auto* classify = app.add_subcommand("classify", "Separation axioms of the orbit spaces");
  classify->add_option("file", file, "Model file")->required();

  auto* recon = app.add_subcommand("reconstruct", "Surface signature of each assembly component");
  recon->add_option("file", file, "Model file")->required();

  auto* realize = app.add_subcommand("realize", "Realize an abstract multi-graph as a model");
  realize->add_option("file", file, "Graph file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate model classes within bounds");
  enumerate->add_option("--max-saddles", bounds.max_saddles)->required();
  enumerate->add_option("--max-k-sum", bounds.max_k_sum)->required();
  enumerate->add_option("--max-centers", bounds.max_centers)->required();
  enumerate->add_option("--max-n", bounds.max_n)->required();
  enumerate->add_option("--max-b", bounds.max_b)->required();
  enumerate->add_option("--max-annuli", bounds.max_annuli)->required();
  enumerate->add_option("--max-tori", bounds.max_tori)->required();
  enumerate->add_flag("--closed-only", bounds.closed_only);
  enumerate->add_flag("--orientable-only", bounds.orientable_only);
  enumerate->add_flag("--reverse-allowed", reverse);
  enumerate->add_flag("--count", count_only, "Print the class table instead of the models");

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the graph or the diagram");
  dot->add_option("file", file, "Model file")->required();
  dot->add_option("--which", which)->check(CLI::IsMember({"graph", "diagram"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_code::usage;
  }
  const IsoMode mode{reverse};

  std::string current = file;
  try {
    auto load = [&](const std::string& path) {
      current = path;
      return parse_model(detail::read_file(path));
    };

    if (*validate) {
      auto parsed = parse_model_unchecked(detail::read_file(file));
      const auto vs = validate_pair(parsed.pair);
      if (vs.empty()) {
        out << "ok\n";
        return exit_code::ok;
      }
      for (const auto& d : parsed.locate(vs)) out << file << ":" << d.format() << "\n";
      return exit_code::negative;
    }
    if (*canon) {
      const auto cf = canonical_form(load(file), mode);
      out << cf.digest() << " " << cf.hex() << "\n";
      return exit_code::ok;
    }
    if (*iso) {
      const auto a = load(file);
      const auto b = load(file_b);
      const auto w = pair_isomorphic(a, b, mode);
      if (!w) {
        out << "NO\n";
        return exit_code::negative;
      }
      out << "YES\n"
          << "reversed=" << detail::flag(w->reversed) << "\n"
          << "saddles=" << detail::join(w->saddles) << "\n"
          << "separatrices=" << detail::join(w->separatrices) << "\n"
          << "vertices=" << detail::join(w->vertices) << "\n"
          << "annuli=" << detail::join(w->annuli) << "\n";
      return exit_code::ok;
    }
    if (*classify) {
      const auto r = classify_separation(load(file));
      out << "sv_t0=" << detail::flag(r.sv_t0) << " sv_t1=" << detail::flag(r.sv_t1)
          << " sv_t2=" << detail::flag(r.sv_t2) << " svex_t1=" << detail::flag(r.svex_t1)
          << " svex_t2=" << detail::flag(r.svex_t2) << "\n";
      return exit_code::ok;
    }
    if (*recon) {
      out << reconstruct(load(file)).signature.format();
      return exit_code::ok;
    }
    if (*realize) {
      const auto g = parse_multigraph(detail::read_file(file));
      out << serialize_model(realize_multigraph(g));
      return exit_code::ok;
    }
    if (*enumerate) {
      bounds.mode = mode;
      if (count_only) {
        for (const auto& [key, c] : count_classes(bounds))
          out << "orientable=" << detail::flag(key.orientable) << " genus=" << key.genus
              << " boundary=" << key.boundary << " saddles=" << key.saddles << " count=" << c.count << "\n";
        return exit_code::ok;
      }
      for (const auto& e : enumerate_pairs(bounds)) out << e.form.digest() << " " << serialize_model(e.pair, false) << "\n";
      return exit_code::ok;
    }
    if (*dot) {
      out << export_dot(load(file), which == "graph" ? DotView::Graph : DotView::Diagram);
      return exit_code::ok;
    }
  } catch (const ModelError& e) {
    detail::print_diagnostics(err, current, e);
    return e.kind() == ModelErrorKind::Semantic ? exit_code::negative : exit_code::parse_error;
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::negative;
  }
  return exit_code::usage;
}

}  // namespace flowinv
