// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include "sqroot/generators.hpp"
#include "sqroot/graph_io.hpp"
#include "sqroot/named_graphs.hpp"
#include "sqroot/oracle.hpp"
#include "sqroot/ptolemaic_root.hpp"
#include "sqroot/split_root.hpp"

#include "support/brute_force.hpp"
#include "support/corpus.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace sqroot;

namespace {

// Pinned parameters. Every comparison below is exact; the only numeric
// tolerances are the runtime limits.
constexpr std::size_t kRandomN7 = 500;
constexpr std::size_t kRoundTrips = 1000;
constexpr std::size_t kInvariantRoots = 200;
constexpr std::size_t kRecognizerCorpus = 2000;
constexpr double kRuntimeLimitSeconds = 60.0;
constexpr std::size_t kPtolemaicRuntimeN = 150;
constexpr std::size_t kSplitRuntimeClique = 100;
constexpr std::size_t kSplitRuntimeIndependent = 200;

struct Verdict {
  bool pass = true;
  std::string detail;
  int failures = 0;

  void fail(const std::string& why) {
    if (failures++ == 0) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Graph> oracle_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 6; ++n)
    for (Graph& g : corpus::connected_graphs_up_to_isomorphism(n)) out.push_back(std::move(g));
  std::mt19937_64 rng(0x5eed7);
  for (std::size_t i = 0; i < kRandomN7; ++i) out.push_back(corpus::random_connected_graph(7, rng));
  return out;
}

Verdict oracle_equivalence(const std::vector<Graph>& graphs, RootClass cls) {
  Verdict v;
  std::size_t roots = 0;
  for (const Graph& g : graphs) {
    const RootResult r = cls == RootClass::Ptolemaic ? ptolemaic_square_root(g) : three_sun_free_split_root(g);
    const OracleResult o = min_root_bruteforce(g, cls);
    if (o.status == OracleStatus::BudgetExceeded) {
      v.fail("oracle budget exceeded on " + serialize_edge_list(g));
      continue;
    }
    const bool expected = o.status == OracleStatus::Found;
    roots += expected;
    if (r.found() != expected) {
      v.fail("decision differs on n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()));
    } else if (cls == RootClass::Ptolemaic && expected && r.edges() != o.root->edge_count()) {
      v.fail("edge count " + std::to_string(r.edges()) + " vs oracle " + std::to_string(o.root->edge_count()));
    }
  }
  if (v.pass) v.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(roots) + " with a root";
  return v;
}

Verdict ptolemaic_round_trip() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < kRoundTrips; ++seed) {
    PtolemaicGenSpec spec;
    spec.vertices = 2 + seed % 59;
    spec.seed = seed;
    const Graph h = random_ptolemaic(spec);
    const Graph g = square(h);
    const RootResult r = ptolemaic_square_root(g);
    if (!r.found()) {
      v.fail("no root for seed " + std::to_string(seed));
    } else if (square(*r.root) != g || !is_ptolemaic(*r.root) || r.edges() > h.edge_count()) {
      v.fail("bad root for seed " + std::to_string(seed));
    }
  }
  if (v.pass) v.detail = std::to_string(kRoundTrips) + " roots, n in [2, 60]";
  return v;
}

Verdict split_round_trip() {
  Verdict v;
  std::size_t complete = 0;
  for (std::uint64_t seed = 0; seed < kRoundTrips; ++seed) {
    SplitGenSpec spec;
    spec.clique_size = 1 + seed % 20;
    spec.independent_size = seed % 31;
    spec.density = 0.1 + 0.1 * static_cast<double>(seed % 9);
    // Rejection sampling only pays off with few independent vertices.
    spec.mode = seed % 3 == 0 ? SplitMode::Nested : seed % 3 == 1 ? SplitMode::Laminar : SplitMode::Rejection;
    if (spec.mode == SplitMode::Rejection && spec.independent_size > 6) spec.mode = SplitMode::Laminar;
    spec.seed = seed;
    const Graph h = random_3sunfree_split(spec);
    const Graph g = square(h);
    const RootResult r = three_sun_free_split_root(g);
    if (!r.found()) {
      v.fail("square rejected for seed " + std::to_string(seed));
    } else if (square(*r.root) != g || !is_connected(*r.root) || !is_split(*r.root) || find_3sun(*r.root)) {
      v.fail("bad root for seed " + std::to_string(seed));
    }
    complete += g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2;
  }
  if (v.pass) v.detail = std::to_string(kRoundTrips) + " roots, " + std::to_string(complete) + " squares complete";
  return v;
}

Verdict golden_negatives() {
  Verdict v;
  const RootResult dh = ptolemaic_square_root(corpus::dh_example_square());
  if (dh.found()) v.fail("distance-hereditary example square got a ptolemaic root");
  const RootResult sun = three_sun_free_split_root(named::three_sun());
  if (sun.found()) v.fail("3-sun got a split root");
  if (v.pass)
    v.detail = std::string("stages ") + std::string(to_string(*dh.stage)) + ", " + std::string(to_string(*sun.stage));
  return v;
}

Verdict p5_walkthrough() {
  Verdict v;
  const Graph g = square(named::path(5));
  const ChordalCheck c = chordal_order(g);
  if (!c.chordal()) {
    v.fail("P5 squared not chordal");
    return v;
  }
  const CliqueFamily f = maximal_cliques_chordal(g, *c.order);
  const auto triples = enumerate_gem_triples(f);
  if (forced_edges(g, f, triples) != std::vector<Edge>{{1, 2}, {2, 3}}) v.fail("forced edges differ");
  const CenterPlan plan = candidate_centers(g, f, triples);
  if (plan.candidates != std::vector<VertexSet>{VertexSet(5, {1}), VertexSet(5, {2}), VertexSet(5, {3})})
    v.fail("candidate centre sets differ");
  const RootResult r = ptolemaic_square_root(g);
  if (!r.found() || serialize_edge_list(*r.root) != "5\n0 1\n1 2\n2 3\n3 4\n") v.fail("root is not P5");
  if (v.pass) v.detail = "root 0-1-2-3-4, forced {12, 23}, X = {1},{2},{3}";
  return v;
}

Verdict structural_invariants() {
  Verdict v;
  std::size_t gems = 0, forced = 0;
  for (std::uint64_t seed = 0; seed < kInvariantRoots; ++seed) {
    PtolemaicGenSpec spec;
    spec.vertices = 3 + seed % 38;
    spec.seed = 1000 + seed;
    const Graph h = random_ptolemaic(spec);
    const Graph g = square(h);
    const ChordalCheck c = chordal_order(g);
    if (!c.chordal()) {
      v.fail("square not chordal");
      continue;
    }
    const CliqueFamily f = maximal_cliques_chordal(g, *c.order);
    for (const VertexSet& q : f) {
      bool centred = false;
      for (Vertex x = 0; x < h.vertex_count() && !centred; ++x) centred = h.closed_neighborhood(x) == q;
      if (!centred) v.fail("clique without a centre, seed " + std::to_string(spec.seed));
    }
    for_each_gem(g, [&](const std::array<Vertex, 5>& t) {
      ++gems;
      if (!is_pseudo_p5(h, t)) v.fail("gem without a pseudo-P5, seed " + std::to_string(spec.seed));
      return true;
    });
    for (const Edge& e : forced_edges(g, f, enumerate_gem_triples(f))) {
      ++forced;
      if (!h.adjacent(e.u, e.v)) v.fail("forced edge missing from root, seed " + std::to_string(spec.seed));
    }
  }
  if (v.pass)
    v.detail = std::to_string(kInvariantRoots) + " roots, " + std::to_string(gems) + " gems, " + std::to_string(forced) +
               " forced edges";
  return v;
}

Verdict recognizer_cross_checks() {
  Verdict v;
  std::mt19937_64 rng(0xc0ffee);
  std::uniform_real_distribution<double> density(0.15, 0.95);
  std::size_t chordal = 0, ptolemaic = 0, helly = 0;
  for (std::size_t i = 0; i < kRecognizerCorpus; ++i) {
    const Graph g = corpus::random_graph(1 + rng() % 8, density(rng), rng);
    const bool no_hole = !brute::has_induced_long_cycle(g);
    const bool is_chordal = chordal_order(g).chordal();
    if (is_chordal != no_hole) v.fail("chordal mismatch");
    chordal += is_chordal;
    const bool pt = is_ptolemaic(g);
    if (pt != (is_connected(g) && no_hole && !brute::has_induced_gem(g))) v.fail("ptolemaic mismatch");
    ptolemaic += pt;
    const bool hch = is_hereditary_clique_helly(g);
    if (hch != !brute::has_helly_obstruction(g)) v.fail("clique-Helly mismatch");
    helly += !hch;
  }
  if (v.pass)
    v.detail = std::to_string(kRecognizerCorpus) + " graphs: " + std::to_string(chordal) + " chordal, " +
               std::to_string(ptolemaic) + " ptolemaic, " + std::to_string(helly) + " with a G1-G4";
  return v;
}

Verdict runtime() {
  Verdict v;
  PtolemaicGenSpec pspec;
  pspec.vertices = kPtolemaicRuntimeN;
  pspec.seed = 150;
  const Graph pg = square(random_ptolemaic(pspec));
  auto t0 = std::chrono::steady_clock::now();
  const RootResult pr = ptolemaic_square_root(pg);
  const double pt = seconds_since(t0);
  if (!pr.found()) v.fail("ptolemaic root not found");
  if (pt > kRuntimeLimitSeconds) v.fail("ptolemaic took " + std::to_string(pt) + " s");

  SplitGenSpec sspec;
  sspec.clique_size = kSplitRuntimeClique;
  sspec.independent_size = kSplitRuntimeIndependent;
  sspec.mode = SplitMode::Laminar;
  sspec.density = 0.9;
  sspec.seed = 300;
  const Graph sg = square(random_3sunfree_split(sspec));
  t0 = std::chrono::steady_clock::now();
  const RootResult sr = three_sun_free_split_root(sg);
  const double st = seconds_since(t0);
  if (!sr.found()) v.fail("split root not found");
  if (st > kRuntimeLimitSeconds) v.fail("split took " + std::to_string(st) + " s");

  std::ostringstream d;
  d.precision(3);
  d << "ptolemaic n=" << pg.vertex_count() << " m=" << pg.edge_count() << " " << pt << " s; split n=" << sg.vertex_count()
    << " m=" << sg.edge_count() << " " << st << " s; limit " << kRuntimeLimitSeconds << " s";
  if (v.pass) v.detail = d.str();
  return v;
}

}  // namespace

int main() {
  const std::vector<Graph> corpus = oracle_corpus();
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"oracle equivalence (ptolemaic)", [&] { return oracle_equivalence(corpus, RootClass::Ptolemaic); }},
      {"oracle equivalence (split)", [&] { return oracle_equivalence(corpus, RootClass::Split3SunFree); }},
      {"round trip (ptolemaic)", ptolemaic_round_trip},
      {"round trip (split)", split_round_trip},
      {"golden negatives", golden_negatives},
      {"golden positive walkthrough", p5_walkthrough},
      {"structural invariants", structural_invariants},
      {"recognizer cross-checks", recognizer_cross_checks},
      {"runtime sanity", runtime},
  };

  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = check();
    std::printf("[%s] %d %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str(), seconds_since(t0));
    if (!v.pass) {
      ++failed;
      if (v.failures > 1) std::printf("       %d failures in total\n", v.failures);
    }
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
