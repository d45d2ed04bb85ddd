#include "sqroot/recognizers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqroot {

std::string_view to_string(PatternId id) {
  switch (id) {
    case PatternId::Gem: return "gem";
    case PatternId::C4: return "C4";
    case PatternId::ThreeSun: return "3-sun";
    case PatternId::G1: return "G1";
    case PatternId::G2: return "G2";
    case PatternId::G3: return "G3";
    case PatternId::G4: return "G4";
    case PatternId::PseudoP5Failure: return "pseudo-P5-failure";
  }
  return "unknown";
}

ChordalCheck chordal_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  // position[v] = index of v in the elimination order
  std::vector<std::size_t> position(n, 0);
  std::vector<Vertex> sequence(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    numbered[best] = true;
    const std::size_t pos = n - 1 - step;
    sequence[pos] = best;
    position[best] = pos;
    g.neighbors(best).for_each([&](Vertex w) {
      if (!numbered[w]) ++weight[w];
    });
  }

  // Tarjan-Yannakakis check: the later neighbours of v other than its
  // earliest later neighbour p must all be adjacent to p.
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = sequence[i];
    Vertex parent = n;
    g.neighbors(v).for_each([&](Vertex w) {
      if (position[w] > i && (parent == n || position[w] < position[parent])) parent = w;
    });
    if (parent == n) continue;
    bool ok = true;
    g.neighbors(v).for_each([&](Vertex w) {
      if (ok && position[w] > i && w != parent && !g.adjacent(parent, w)) ok = false;
    });
    if (!ok) return ChordalCheck{std::nullopt, v};
  }
  return ChordalCheck{EliminationOrder{std::move(sequence)}, 0};
}

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order) {
  const std::size_t n = g.vertex_count();
  if (order.sequence.size() != n) return false;
  VertexSet later = VertexSet::full(n);
  for (Vertex v : order.sequence) {
    if (v >= n || !later.contains(v)) return false;
    later.erase(v);
    const VertexSet ahead = g.neighbors(v) & later;
    bool clique = true;
    ahead.for_each([&](Vertex w) {
      VertexSet rest = ahead;
      rest.erase(w);
      if (!rest.is_subset_of(g.neighbors(w))) clique = false;
    });
    if (!clique) return false;
  }
  return true;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> byDegree(n);
  std::iota(byDegree.begin(), byDegree.end(), Vertex{0});
  std::stable_sort(byDegree.begin(), byDegree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(byDegree[i]) + 1 >= i + 1) m = i + 1;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(byDegree[i]);
  if (head != m * (m == 0 ? 0 : m - 1) + tail) return std::nullopt;

  SplitPartition parts;
  parts.clique.assign(byDegree.begin(), byDegree.begin() + static_cast<std::ptrdiff_t>(m));
  parts.independent.assign(byDegree.begin() + static_cast<std::ptrdiff_t>(m), byDegree.end());
  std::sort(parts.clique.begin(), parts.clique.end());
  std::sort(parts.independent.begin(), parts.independent.end());
  return parts;
}

bool is_distance_hereditary(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  VertexSet alive = VertexSet::full(n);
  std::vector<VertexSet> open(n);
  std::vector<VertexSet> closed(n);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) {
    open[v] = g.neighbors(v);
    closed[v] = g.closed_neighborhood(v);
    degree[v] = g.degree(v);
  }

  auto removable = [&](Vertex v) {
    if (degree[v] == 1) return true;
    for (Vertex w = alive.first(); w < n; w = alive.next(w)) {
      if (w == v || degree[w] != degree[v]) continue;
      if (open[v] == open[w] || closed[v] == closed[w]) return true;
    }
    return false;
  };

  for (std::size_t remaining = n; remaining > 1; --remaining) {
    Vertex pick = n;
    for (Vertex v = alive.first(); v < n; v = alive.next(v)) {
      if (removable(v)) {
        pick = v;
        break;
      }
    }
    if (pick == n) return false;
    alive.erase(pick);
    open[pick].for_each([&](Vertex w) {
      open[w].erase(pick);
      closed[w].erase(pick);
      --degree[w];
    });
  }
  return true;
}

bool is_ptolemaic(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return is_connected(g) && chordal_order(g).chordal() && is_distance_hereditary(g);
}

bool is_block_graph(const Graph& g) {
  if (!chordal_order(g).chordal()) return false;
  for (const Edge& e : g.edges()) {
    const VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
    bool clique = true;
    common.for_each([&](Vertex w) {
      VertexSet rest = common;
      rest.erase(w);
      if (!rest.is_subset_of(g.neighbors(w))) clique = false;
    });
    if (!clique) return false;
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

std::optional<ForbiddenPattern> find_gem(const Graph& g) {
  std::optional<ForbiddenPattern> best;
  std::vector<Vertex> bestKey;
  for_each_gem(g, [&](const std::array<Vertex, 5>& t) {
    std::vector<Vertex> key(t.begin(), t.end());
    std::sort(key.begin(), key.end());
    if (!best || key < bestKey) {
      best = ForbiddenPattern{PatternId::Gem, std::vector<Vertex>(t.begin(), t.end())};
      bestKey = std::move(key);
    }
    return true;
  });
  return best;
}

bool is_pseudo_p5(const Graph& h, const std::array<Vertex, 5>& t) {
  const std::size_t n = h.vertex_count();
  for (std::size_t i = 0; i < 5; ++i) {
    if (t[i] >= n) throw std::invalid_argument("pseudo-P5 tuple entry out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (t[i] == t[j]) throw std::invalid_argument("pseudo-P5 tuple repeats a vertex");
  }
  const auto d1 = distances_from(h, t[0]);
  const auto d2 = distances_from(h, t[1]);
  const auto d3 = distances_from(h, t[2]);
  const auto d4 = distances_from(h, t[3]);

  const bool edges = h.adjacent(t[1], t[2]) && h.adjacent(t[2], t[3]);
  const bool near = d1[t[1]] <= 2 && d4[t[4]] <= 2;
  const bool two = d1[t[2]] == 2 && d2[t[3]] == 2 && d3[t[4]] == 2;
  const bool far = d1[t[3]] >= 3 && d1[t[4]] >= 3 && d2[t[4]] >= 3;
  return edges && near && two && far;
}

namespace {

// Calls fn(a, b, c) for every triangle a < b < c in lexicographic order until
// fn returns true.
template <class Fn>
bool first_triangle(const Graph& g, Fn&& fn) {
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    const VertexSet& na = g.neighbors(a);
    for (Vertex b = na.next(a); b < n; b = na.next(b)) {
      const VertexSet common = na & g.neighbors(b);
      for (Vertex c = common.next(b); c < n; c = common.next(c)) {
        if (fn(a, b, c)) return true;
      }
    }
  }
  return false;
}

// Vertices adjacent to x and y but neither equal nor adjacent to z.
VertexSet private_pair(const Graph& g, Vertex x, Vertex y, Vertex z) {
  VertexSet s = (g.neighbors(x) & g.neighbors(y)) - g.neighbors(z);
  s.erase(z);
  return s;
}

}  // namespace

std::optional<ForbiddenPattern> find_3sun(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<ForbiddenPattern> found;
  first_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
    const VertexSet ab = private_pair(g, a, b, c);
    if (ab.empty()) return false;
    const VertexSet bc = private_pair(g, b, c, a);
    if (bc.empty()) return false;
    const VertexSet ca = private_pair(g, c, a, b);
    if (ca.empty()) return false;
    for (Vertex u1 = ab.first(); u1 < n; u1 = ab.next(u1)) {
      const VertexSet second = bc - g.neighbors(u1);
      for (Vertex u2 = second.first(); u2 < n; u2 = second.next(u2)) {
        const VertexSet third = (ca - g.neighbors(u1)) - g.neighbors(u2);
        if (!third.empty()) {
          found = ForbiddenPattern{PatternId::ThreeSun, {a, b, c, u1, u2, third.first()}};
          return true;
        }
      }
    }
    return false;
  });
  return found;
}

HellyCheck hereditary_clique_helly(const Graph& g) {
  HellyCheck result;
  first_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
    const VertexSet ap = private_pair(g, b, c, a);
    if (ap.empty()) return false;
    const VertexSet bp = private_pair(g, a, c, b);
    if (bp.empty()) return false;
    const VertexSet cp = private_pair(g, a, b, c);
    if (cp.empty()) return false;
    const Vertex x = ap.first();
    const Vertex y = bp.first();
    const Vertex z = cp.first();
    const int extra = int(g.adjacent(x, y)) + int(g.adjacent(y, z)) + int(g.adjacent(x, z));
    static constexpr PatternId ids[] = {PatternId::G1, PatternId::G2, PatternId::G3, PatternId::G4};
    result.hereditary_clique_helly = false;
    result.witness = ForbiddenPattern{ids[extra], {a, b, c, x, y, z}};
    return true;
  });
  return result;
}

}  // namespace sqroot
