// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is exact
// (integer counts, byte-equal canonical forms); there are no numeric tolerances.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "flowinv/flowinv.hpp"
#include "oracles/oracles.hpp"

namespace {

using namespace flowinv;

constexpr IsoMode kModes[] = {IsoMode::oriented(), IsoMode::unoriented()};

const char* mode_name(IsoMode m) { return m.allow_reversal ? "~" : "~+"; }

InvariantPair load(const std::string& name) {
  std::ifstream in(std::string(FLOWINV_MODELS_DIR) + "/" + name + ".json", std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

EnumBounds criterion_bounds(IsoMode mode) { return {2, 2, 4, 2, 2, 4, 1, false, false, mode}; }

struct Corpus {
  std::vector<EnumeratedPair> pairs;
  std::vector<std::pair<InvariantPair, CanonicalForm>> candidates;
};

const Corpus& corpus(IsoMode mode) {
  static std::map<bool, Corpus> cache;
  auto it = cache.find(mode.allow_reversal);
  if (it != cache.end()) return it->second;
  Corpus c;
  EnumOptions opt;
  opt.observer = [&](const InvariantPair& p, const CanonicalForm& f) { c.candidates.emplace_back(p, f); };
  c.pairs = enumerate_pairs(criterion_bounds(mode), opt);
  return cache.emplace(mode.allow_reversal, std::move(c)).first->second;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::size_t failures = 0;

  void fail(const std::string& what) {
    if (failures++ < 5) std::cerr << "  " << what << "\n";
    pass = false;
  }
};

Outcome criterion1() {
  Outcome o;
  for (auto mode : kModes) {
    std::size_t n = 0;
    for (const auto& e : corpus(mode).pairs) {
      ++n;
      const auto back = extract_pair(reconstruct(e.pair).cells);
      if (canonical_form(back, mode) != e.form) o.fail(std::string("round trip differs: ") + serialize_model(e.pair, false));
    }
    o.detail << mode_name(mode) << " models=" << n << " ";
  }
  o.detail << "mismatches=" << o.failures;
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (auto mode : kModes) {
    const auto& c = corpus(mode);
    std::map<CanonicalForm, const InvariantPair*> rep;
    for (const auto& e : c.pairs)
      if (!rep.emplace(e.form, &e.pair).second) o.fail("duplicate canonical form in output");

    // Equal forms: every generated candidate against the representative of its form.
    std::size_t positive = 0;
    for (const auto& [p, f] : c.candidates) {
      ++positive;
      if (!pair_isomorphic(p, *rep.at(f), mode)) o.fail("equal forms, oracle says NO: " + serialize_model(p, false));
    }
    // Relabeled and time-reversed copies.
    std::size_t copies = 0;
    for (const auto& e : c.pairs) {
      for (const auto& q : {oracle::relabel(e.pair, rng), reverse_pair(e.pair)}) {
        ++copies;
        const bool same = canonical_form(q, mode) == e.form;
        if (same != pair_isomorphic(e.pair, q, mode).has_value())
          o.fail("copy disagreement: " + serialize_model(e.pair, false));
      }
    }
    // Distinct forms: exhaustive oracle runs inside buckets of equal count signature.
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < c.pairs.size(); ++i) buckets[oracle::count_signature(c.pairs[i].pair)].push_back(i);
    std::size_t negative = 0;
    for (const auto& [key, members] : buckets)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          ++negative;
          if (pair_isomorphic(c.pairs[members[i]].pair, c.pairs[members[j]].pair, mode))
            o.fail("distinct forms, oracle says YES");
        }
    // Across buckets the count signature already separates the classes; sample the oracle there too.
    std::uniform_int_distribution<std::size_t> pick(0, c.pairs.size() - 1);
    std::size_t sampled = 0;
    while (sampled < 20000) {
      const auto i = pick(rng), j = pick(rng);
      if (oracle::count_signature(c.pairs[i].pair) == oracle::count_signature(c.pairs[j].pair)) continue;
      ++sampled;
      if (pair_isomorphic(c.pairs[i].pair, c.pairs[j].pair, mode)) o.fail("cross-bucket oracle YES");
    }
    o.detail << mode_name(mode) << " positive=" << positive << " copies=" << copies << " negative=" << negative
             << " cross-sampled=" << sampled << " buckets=" << buckets.size() << " ";
  }
  o.detail << "disagreements=" << o.failures;
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t models = 0, complexes = 0;
  for (auto mode : kModes)
    for (const auto& e : corpus(mode).pairs) {
      ++models;
      const auto& p = e.pair;
      long expected = static_cast<long>(p.count(VertexLabel::C));
      for (const auto& s : p.diagram.saddles) expected -= s.k;
      const auto chi = chi_cells(p);
      if (chi.size() != 1 || chi.front() != expected) o.fail("chi_cells mismatch: " + serialize_model(p, false));
      const auto r = reconstruct(p);
      const auto cx = cell_complex(r.cells, 0);
      const auto& sig = r.signature.components.front();
      if (sig.orientable && sig.boundary == 0) ++complexes;
      if (cx.euler_characteristic() != chi.front()) o.fail("V-E+F mismatch: " + serialize_model(p, false));
      if (cx.orientable() != sig.orientable || cx.boundary_circles() != sig.boundary)
        o.fail("cell complex signature mismatch: " + serialize_model(p, false));
    }
  o.detail << "models=" << models << " closed-orientable=" << complexes << " mismatches=" << o.failures;
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto graphs = oracle::connected_multigraphs(6);
  for (const auto& g : graphs) {
    const auto p = realize_multigraph(g);
    if (!multigraphs_isomorphic(multigraph_of(to_extended_poset(p)), g)) o.fail("round trip: " + serialize_multigraph(g));
  }
  o.detail << "graphs=" << graphs.size() << " failures=" << o.failures;
  return o;
}

Multigraph stripped_graph(const InvariantPair& p) { return multigraph_of(to_extended_poset(p)); }
Multigraph stripped_diagram(const InvariantPair& p) { return multigraph_of(diagram_poset(p.diagram)); }

Outcome criterion5() {
  Outcome o;
  const auto l = load("disk_lobes"), r = load("disk_nested");
  for (auto mode : kModes)
    if (pair_isomorphic(l, r, mode) || canonical_form(l, mode) == canonical_form(r, mode))
      o.fail(std::string("labeled pairs isomorphic in ") + mode_name(mode));
  if (!multigraphs_isomorphic(stripped_diagram(l), stripped_diagram(r))) o.fail("diagram multigraphs differ");
  if (!multigraphs_isomorphic(stripped_graph(l), stripped_graph(r))) o.fail("graph multigraphs differ");
  o.detail << "labeled=non-isomorphic unlabeled=isomorphic failures=" << o.failures;
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto x = load("eight_mobius"), y = load("eight_boundary");
  for (auto mode : kModes)
    if (pair_isomorphic(x, y, mode) || canonical_form(x, mode) == canonical_form(y, mode))
      o.fail(std::string("labeled pairs isomorphic in ") + mode_name(mode));
  if (!multigraphs_isomorphic(stripped_graph(x), stripped_graph(y))) o.fail("extended-orbit posets differ");
  o.detail << "labeled=non-isomorphic unlabeled=isomorphic failures=" << o.failures;
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto sphere = classify_separation(load("sphere_rotation"));
  const auto eight = classify_separation(load("three_centers_eight"));
  const auto torus = classify_separation(load("periodic_torus"));
  if (!sphere.sv_t2) o.fail("sphere rotation sv_t2");
  if (!eight.sv_t0 || eight.sv_t1 || !eight.svex_t2) o.fail("three centers + figure-eight");
  if (!torus.sv_t1) o.fail("periodic torus sv_t1");
  o.detail << "witnesses=3 failures=" << o.failures;
  return o;
}

// Frozen from the first run: total class counts under the criterion-1 bounds.
constexpr std::size_t kGoldenOriented = 17551;
constexpr std::size_t kGoldenUnoriented = 8788;

Outcome criterion8() {
  Outcome o;
  for (auto mode : kModes) {
    const auto b = criterion_bounds(mode);
    EnumOptions s1, s2;
    s1.shuffle_seed = 11;
    s2.shuffle_seed = 97;
    const auto t1 = count_classes(b, s1), t2 = count_classes(b, s2);
    std::size_t total = 0;
    for (const auto& [k, c] : t1) total += c.count;
    bool same = t1.size() == t2.size();
    for (auto i = t1.begin(), j = t2.begin(); same && i != t1.end(); ++i, ++j)
      same = i->first == j->first && i->second.count == j->second.count &&
             i->second.representative == j->second.representative;
    if (!same) o.fail(std::string("shuffled tables differ in ") + mode_name(mode));
    const auto golden = mode.allow_reversal ? kGoldenUnoriented : kGoldenOriented;
    if (total != golden) o.fail("golden count " + std::to_string(total) + " != " + std::to_string(golden));
    o.detail << mode_name(mode) << " classes=" << total << " ";
  }

  oracle::BruteForce bf;
  std::size_t tuples = 0;
  constexpr std::size_t cells = 6;
  for (auto mode : kModes)
    for (int flags = 0; flags < 4; ++flags)
      for (std::size_t ks = 0; ks <= 2; ++ks)
        for (std::size_t s = 0; s <= cells; ++s)
          for (std::size_t c = 0; s + c <= cells; ++c)
            for (std::size_t n = 0; s + c + n <= cells; ++n)
              for (std::size_t bb = 0; s + c + n + bb <= cells; ++bb)
                for (std::size_t a = 0; s + c + n + bb + a <= cells; ++a)
                  for (std::size_t t = 0; s + c + n + bb + a + t <= cells; ++t) {
                    const bool closed = flags & 1, orientable = flags & 2;
                    // A filter on a zero bound selects the same bounds as no filter.
                    if ((closed && bb == 0) || (orientable && n == 0)) continue;
                    const EnumBounds b{s, ks, c, n, bb, a, t, closed, orientable, mode};
                    ++tuples;
                    const auto fast = enumerate_pairs(b);
                    const auto brute = bf.classes_within(b);
                    std::set<CanonicalForm> fast_forms, brute_forms;
                    for (const auto& e : fast) fast_forms.insert(e.form);
                    for (const auto& p : brute) brute_forms.insert(canonical_form(p, mode));
                    if (fast.size() != brute.size() || fast_forms != brute_forms || brute_forms.size() != brute.size())
                      o.fail("class sets differ at s" + std::to_string(s) + " k" + std::to_string(ks) + " c" +
                             std::to_string(c) + " n" + std::to_string(n) + " b" + std::to_string(bb) + " a" +
                             std::to_string(a) + " t" + std::to_string(t) + " " + mode_name(mode));
                  }
  o.detail << "bound-tuples=" << tuples << " failures=" << o.failures;
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t posets = 0;
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& p : oracle::all_posets(n)) {
      ++posets;
      const auto q = specialization_order(alexandroff_space(p));
      bool same = q.size() == p.size();
      for (std::size_t a = 0; same && a < n; ++a)
        for (std::size_t b = 0; same && b < n; ++b) same = p.leq(a, b) == q.leq(a, b);
      if (!same) o.fail("poset round trip on " + std::to_string(n) + " points");
    }
  o.detail << "posets=" << posets << " failures=" << o.failures;
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                               criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s %s time=%.1fs\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
