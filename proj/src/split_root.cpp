#include "sqroot/split_root.hpp"

#include "sqroot/cliques.hpp"
#include "sqroot/recognizers.hpp"

namespace sqroot {

RootResult three_sun_free_split_root(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return RootResult::rejected(RejectionStage::NotConnected);

  const auto family = maximal_cliques_capped(g, n);
  if (!family) return RootResult::rejected(RejectionStage::TooManyCliques);

  VertexSet common = VertexSet::full(n);
  for (const VertexSet& q : *family) common &= q;
  if (common.count() < family->size()) return RootResult::rejected(RejectionStage::IntersectionCondition);

  HellyCheck helly = hereditary_clique_helly(g);
  if (!helly.hereditary_clique_helly) {
    RootResult r = RootResult::rejected(RejectionStage::NotHereditaryCliqueHelly);
    r.witness = std::move(helly.witness);
    return r;
  }

  SplitRootCertificate cert;
  cert.clique = common.members();
  cert.representatives.assign(cert.clique.begin(), cert.clique.begin() + static_cast<std::ptrdiff_t>(family->size()));

  GraphBuilder h(n);
  h.add_edges_between(common, common);
  const VertexSet outside = VertexSet::full(n) - common;
  for (std::size_t i = 0; i < family->size(); ++i) {
    const Vertex rep = cert.representatives[i];
    ((*family)[i] & outside).for_each([&](Vertex v) { h.add_edge(v, rep); });
  }

  Graph root = h.build();
  RootResult result;
  result.square_matches = square(root) == g;
  result.in_class = is_connected(root) && is_split(root) && !find_3sun(root);
  if (!result.square_matches || !result.in_class) {
    result.stage = RejectionStage::FinalVerificationFailed;
    return result;
  }
  result.root_is_tree = is_tree(root);
  result.root_is_block_graph = is_block_graph(root);
  result.split = std::move(cert);
  result.root = std::move(root);
  return result;
}

}  // namespace sqroot
