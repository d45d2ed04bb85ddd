#include "sqroot/cliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqroot {

CliqueFamily::CliqueFamily(std::size_t universe, std::vector<VertexSet> cliques)
    : universe_(universe), cliques_(std::move(cliques)) {
  std::sort(cliques_.begin(), cliques_.end());
  const std::size_t q = cliques_.size();
  meets_.reserve(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) meets_.push_back(cliques_[i] & cliques_[j]);
}

CliqueFamily maximal_cliques_chordal(const Graph& g, const EliminationOrder& order) {
  const std::size_t n = g.vertex_count();
  if (order.sequence.size() != n) throw std::logic_error("elimination order has the wrong length");

  VertexSet later = VertexSet::full(n);
  std::vector<VertexSet> candidates;
  candidates.reserve(n);
  for (Vertex v : order.sequence) {
    later.erase(v);
    VertexSet cand = g.neighbors(v) & later;
    cand.for_each([&](Vertex w) {
      VertexSet rest = cand;
      rest.erase(w);
      if (!rest.is_subset_of(g.neighbors(w))) throw std::logic_error("elimination order is not perfect");
    });
    cand.insert(v);
    candidates.push_back(std::move(cand));
  }

  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j || !candidates[i].is_subset_of(candidates[j])) continue;
      // Equal candidates: keep the first occurrence only.
      dominated = candidates[i] != candidates[j] || j < i;
    }
    if (!dominated) maximal.push_back(candidates[i]);
  }
  return CliqueFamily(n, std::move(maximal));
}

namespace {

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  bool run() {
    const std::size_t n = g_.vertex_count();
    return expand(VertexSet(n), VertexSet::full(n), VertexSet(n));
  }

  std::vector<VertexSet> take() { return std::move(found_); }

 private:
  // Returns false once the cap is exceeded.
  bool expand(const VertexSet& clique, VertexSet candidates, VertexSet excluded) {
    const std::size_t n = g_.vertex_count();
    if (candidates.empty()) {
      if (!excluded.empty()) return true;
      found_.push_back(clique);
      return found_.size() <= cap_;
    }
    // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
    Vertex pivot = n;
    std::size_t best = 0;
    auto consider = [&](Vertex u) {
      const std::size_t k = (candidates & g_.neighbors(u)).count();
      if (pivot == n || k > best) {
        pivot = u;
        best = k;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    const VertexSet branch = candidates - g_.neighbors(pivot);
    for (Vertex v = branch.first(); v < n; v = branch.next(v)) {
      VertexSet grown = clique;
      grown.insert(v);
      if (!expand(grown, candidates & g_.neighbors(v), excluded & g_.neighbors(v))) return false;
      candidates.erase(v);
      excluded.insert(v);
    }
    return true;
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<VertexSet> found_;
};

}  // namespace

std::optional<CliqueFamily> maximal_cliques_capped(const Graph& g, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("clique cap must be positive");
  if (g.vertex_count() == 0) return CliqueFamily(0, {});
  BronKerbosch search(g, cap);
  if (!search.run()) return std::nullopt;
  return CliqueFamily(g.vertex_count(), search.take());
}

bool is_gem_triple(const CliqueFamily& f, const GemTriple& t) {
  if (t.a == t.b || t.b == t.c || t.a == t.c) return false;
  const VertexSet& ac = f.intersection(t.a, t.c);
  return !ac.empty() && ac.is_subset_of(f[t.b]) && !f.intersection(t.a, t.b).is_subset_of(f[t.c]) &&
         !f.intersection(t.b, t.c).is_subset_of(f[t.a]);
}

std::vector<GemTriple> enumerate_gem_triples(const CliqueFamily& f) {
  const std::size_t q = f.size();
  std::vector<GemTriple> out;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t c = 0; c < q; ++c) {
      if (a == c || f.intersection(a, c).empty()) continue;
      for (std::size_t b = 0; b < q; ++b) {
        if (b != a && b != c && is_gem_triple(f, {a, b, c})) out.push_back({a, b, c});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sqroot
