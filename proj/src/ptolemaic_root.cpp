#include "sqroot/ptolemaic_root.hpp"

#include "sqroot/recognizers.hpp"

#include <algorithm>

namespace sqroot {

namespace {

void add_forced_edges(GraphBuilder& h, const CliqueFamily& f, std::span<const GemTriple> triples) {
  const std::size_t q = f.size();
  // reach[a*q + c] collects (A∩B) ∪ (B∩C) over all B completing a gem-triple.
  std::vector<std::optional<VertexSet>> reach(q * q);
  for (const GemTriple& t : triples) {
    auto& slot = reach[t.a * q + t.c];
    if (!slot) slot.emplace(f.universe());
    *slot |= f.intersection(t.a, t.b);
    *slot |= f.intersection(t.b, t.c);
  }
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t c = 0; c < q; ++c) {
      if (const auto& slot = reach[a * q + c]) h.add_edges_between(f.intersection(a, c), *slot);
    }
  }
}

}  // namespace

std::vector<Edge> forced_edges(const Graph& g, const CliqueFamily& family, std::span<const GemTriple> triples) {
  GraphBuilder h(g.vertex_count());
  add_forced_edges(h, family, triples);
  return h.build().edges();
}

CenterPlan candidate_centers(const Graph& g, const CliqueFamily& f, std::span<const GemTriple> triples) {
  const std::size_t n = g.vertex_count();
  const std::size_t q = f.size();
  // across[a][c]: some B makes (A, B, C) a gem-triple
  std::vector<std::vector<bool>> across(q, std::vector<bool>(q, false));
  for (const GemTriple& t : triples) across[t.a][t.c] = true;

  CenterPlan plan;
  plan.candidates.reserve(q);
  for (std::size_t a = 0; a < q; ++a) {
    VertexSet common = VertexSet::full(n);
    VertexSet excluded(n);
    for (std::size_t c = 0; c < q; ++c) {
      if (across[a][c])
        excluded |= f[c];
      else if (!f.intersection(a, c).empty())
        common &= f[c];
    }
    plan.candidates.push_back(common - excluded);
  }

  std::vector<bool> grouped(q, false);
  for (std::size_t a = 0; a < q; ++a) {
    if (grouped[a]) continue;
    std::vector<std::size_t> group;
    for (std::size_t c = a; c < q; ++c) {
      if (!grouped[c] && plan.candidates[c] == plan.candidates[a]) {
        grouped[c] = true;
        group.push_back(c);
      }
    }
    plan.groups.push_back(std::move(group));
  }
  return plan;
}

std::optional<CenterPlan> assign_centers(CenterPlan plan) {
  const std::size_t q = plan.candidates.size();
  if (q == 0) {
    plan.assignment.emplace();
    return plan;
  }
  const std::size_t n = plan.candidates.front().universe();
  VertexSet used(n);
  std::vector<Vertex> centre(q, n);
  for (const auto& group : plan.groups) {
    const VertexSet& pool = plan.candidates[group.front()];
    if (pool.count() < group.size()) return std::nullopt;
    VertexSet free = pool - used;
    for (std::size_t clique : group) {
      const Vertex x = free.first();
      if (x >= n) return std::nullopt;
      free.erase(x);
      used.insert(x);
      centre[clique] = x;
    }
  }
  plan.assignment = std::move(centre);
  return plan;
}

RootResult ptolemaic_square_root(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || !is_connected(g)) return RootResult::rejected(RejectionStage::NotConnected);

  const ChordalCheck chordal = chordal_order(g);
  if (!chordal.chordal()) return RootResult::rejected(RejectionStage::NotChordal);

  const CliqueFamily family = maximal_cliques_chordal(g, *chordal.order);
  const std::vector<GemTriple> triples = enumerate_gem_triples(family);

  GraphBuilder h(n);
  add_forced_edges(h, family, triples);

  auto plan = assign_centers(candidate_centers(g, family, triples));
  if (!plan) return RootResult::rejected(RejectionStage::AssignmentInfeasible);

  for (std::size_t i = 0; i < family.size(); ++i) {
    const Vertex x = (*plan->assignment)[i];
    family[i].for_each([&](Vertex v) {
      if (v != x) h.add_edge(v, x);
    });
  }

  Graph root = h.build();
  RootResult result;
  result.square_matches = square(root) == g;
  result.in_class = is_ptolemaic(root);
  if (!result.square_matches || !result.in_class) {
    result.stage = RejectionStage::FinalVerificationFailed;
    return result;
  }
  result.root_is_tree = is_tree(root);
  result.root_is_block_graph = is_block_graph(root);
  result.root = std::move(root);
  return result;
}

}  // namespace sqroot
