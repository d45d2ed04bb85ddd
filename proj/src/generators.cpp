#include "sqroot/generators.hpp"

#include "sqroot/recognizers.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

namespace sqroot {
namespace {

using Rng = std::mt19937_64;

Graph relabel(const std::vector<VertexSet>& rows, std::size_t count, Rng& rng, bool shuffle) {
  std::vector<Vertex> label(count);
  std::iota(label.begin(), label.end(), Vertex{0});
  if (shuffle) std::shuffle(label.begin(), label.end(), rng);
  GraphBuilder b(count);
  for (Vertex u = 0; u < count; ++u)
    rows[u].for_each([&](Vertex v) {
      if (u < v) b.add_edge(label[u], label[v]);
    });
  return b.build();
}

bool is_clique(const std::vector<VertexSet>& rows, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex w) {
    VertexSet rest = s;
    rest.erase(w);
    if (!rest.is_subset_of(rows[w])) ok = false;
  });
  return ok;
}

Graph grow_ptolemaic(const PtolemaicGenSpec& spec, Rng& rng) {
  const std::size_t n = spec.vertices;
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::size_t count = 1; count < n; ++count) {
    const Vertex v = std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
    const bool simplicial = !rows[v].empty() && is_clique(rows, rows[v]);
    std::discrete_distribution<int> pick(
        {spec.pendant_weight, spec.true_twin_weight, simplicial ? spec.false_twin_weight : 0.0});
    const Vertex w = count;
    switch (pick(rng)) {
      case 0:
        rows[w].insert(v);
        break;
      case 1:
        rows[w] = rows[v];
        rows[w].insert(v);
        break;
      default:
        rows[w] = rows[v];
        break;
    }
    rows[w].for_each([&](Vertex u) { rows[u].insert(w); });
  }
  return relabel(rows, n, rng, spec.shuffle_labels);
}

// Intervals [lo, hi) of a random hierarchical subdivision of [0, k).
void laminar_intervals(std::size_t lo, std::size_t hi, double split, Rng& rng,
                       std::vector<std::pair<std::size_t, std::size_t>>& out) {
  out.emplace_back(lo, hi);
  if (hi - lo < 2 || !std::bernoulli_distribution(split)(rng)) return;
  const std::size_t parts = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(3, hi - lo))(rng);
  std::vector<std::size_t> cuts{lo, hi};
  while (cuts.size() < parts + 1) {
    const std::size_t c = std::uniform_int_distribution<std::size_t>(lo + 1, hi - 1)(rng);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) laminar_intervals(cuts[i], cuts[i + 1], split, rng, out);
}

Graph build_split(const SplitGenSpec& spec, Rng& rng) {
  const std::size_t k = spec.clique_size;
  const std::size_t n = k + spec.independent_size;
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = 0; v < k; ++v)
      if (u != v) rows[u].insert(v);

  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  if (spec.mode == SplitMode::Laminar) laminar_intervals(0, k, spec.density, rng, intervals);

  for (Vertex w = k; w < n; ++w) {
    if (spec.mode == SplitMode::Laminar) {
      const auto [lo, hi] = intervals[std::uniform_int_distribution<std::size_t>(0, intervals.size() - 1)(rng)];
      for (Vertex c = lo; c < hi; ++c) rows[w].insert(c);
    } else if (spec.mode == SplitMode::Nested) {
      const std::size_t reach = 1 + std::binomial_distribution<std::size_t>(k - 1, spec.density)(rng);
      for (Vertex c = 0; c < reach; ++c) rows[w].insert(c);
    } else {
      std::bernoulli_distribution coin(spec.density);
      for (Vertex c = 0; c < k; ++c)
        if (coin(rng)) rows[w].insert(c);
      if (rows[w].empty()) rows[w].insert(std::uniform_int_distribution<std::size_t>(0, k - 1)(rng));
    }
    rows[w].for_each([&](Vertex c) { rows[c].insert(w); });
  }
  return relabel(rows, n, rng, spec.shuffle_labels);
}

}  // namespace

std::string_view to_string(SplitMode mode) {
  switch (mode) {
    case SplitMode::Nested: return "nested";
    case SplitMode::Laminar: return "laminar";
    case SplitMode::Rejection: return "rejection";
  }
  return "unknown";
}

Graph random_ptolemaic(const PtolemaicGenSpec& spec) {
  if (spec.vertices == 0) throw std::invalid_argument("vertex count must be positive");
  if (spec.pendant_weight < 0 || spec.true_twin_weight < 0 || spec.false_twin_weight < 0)
    throw std::invalid_argument("operation weights must be nonnegative");
  if (spec.pendant_weight + spec.true_twin_weight + spec.false_twin_weight <= 0)
    throw std::invalid_argument("operation weights must not all be zero");
  if (spec.vertices > 1 && spec.pendant_weight + spec.true_twin_weight <= 0)
    throw std::invalid_argument("false twins alone cannot grow K1");

  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(spec.seed + attempt * 0x9e3779b97f4a7c15ULL);
    Graph g = grow_ptolemaic(spec, rng);
    if (is_ptolemaic(g)) return g;
  }
  throw GenerationError("ptolemaic generator produced no valid graph");
}

Graph random_3sunfree_split(const SplitGenSpec& spec) {
  if (spec.clique_size == 0) throw std::invalid_argument("clique size must be positive");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  if (spec.max_attempts == 0) throw std::invalid_argument("max_attempts must be positive");

  Rng rng(spec.seed);
  const std::size_t attempts = spec.mode == SplitMode::Rejection ? spec.max_attempts : 1;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    Graph g = build_split(spec, rng);
    if (is_connected(g) && is_split(g) && !find_3sun(g)) return g;
  }
  throw GenerationError("no 3-sun-free split graph after " + std::to_string(attempts) + " attempts");
}

std::string describe(const PtolemaicGenSpec& spec) {
  std::ostringstream out;
  out << "# gen ptolemaic rng=" << kGeneratorRng << " seed=" << spec.seed << " n=" << spec.vertices
      << " weights=" << spec.pendant_weight << "," << spec.true_twin_weight << "," << spec.false_twin_weight
      << " shuffle=" << (spec.shuffle_labels ? 1 : 0) << "\n";
  return out.str();
}

std::string describe(const SplitGenSpec& spec) {
  std::ostringstream out;
  out << "# gen split3sf rng=" << kGeneratorRng << " seed=" << spec.seed << " clique=" << spec.clique_size
      << " independent=" << spec.independent_size << " density=" << spec.density
      << " mode=" << to_string(spec.mode)
      << " shuffle=" << (spec.shuffle_labels ? 1 : 0) << "\n";
  return out.str();
}

}  // namespace sqroot
