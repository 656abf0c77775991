#include "connset/leafy_tree.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>

#include "connset/bounds.hpp"
#include "connset/error.hpp"
#include "connset/families.hpp"

namespace connset {

namespace {

std::string describe(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s.members()) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

LeafyTree LeafyTree::from_edges(const Graph& g, std::vector<std::pair<Vertex, Vertex>> edges) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty graph has no spanning tree");
  if (edges.size() + 1 != n) {
    throw Error(ErrorCode::InvalidArgument, "spanning tree needs n-1 edges, got " + std::to_string(edges.size()));
  }
  std::vector<std::size_t> parent(n), tree_degree(n, 0);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (v >= n || !g.adjacent(u, v)) {
      throw Error(ErrorCode::InvalidArgument,
                  "tree edge " + std::to_string(u) + "-" + std::to_string(v) + " is not a graph edge");
    }
    auto a = find(u), b = find(v);
    if (a == b) throw Error(ErrorCode::InvalidArgument, "tree edges contain a cycle");
    parent[a] = b;
    ++tree_degree[u];
    ++tree_degree[v];
  }
  std::sort(edges.begin(), edges.end());

  LeafyTree t;
  t.order = n;
  t.edges = std::move(edges);
  std::vector<Vertex> internal;
  for (Vertex v = 0; v < n; ++v) {
    if (tree_degree[v] == 1) ++t.leaf_count;
    else internal.push_back(v);
  }
  t.internal = VertexSet(n, std::move(internal));
  return t;
}

bool connected_dominating_check(const Graph& g, const VertexSet& s) {
  return induced_connected(g, s) && dominates(g, s);
}

LeafyTree tree_from_dominating_set(const Graph& g, const VertexSet& s) {
  if (!connected_dominating_check(g, s)) {
    throw Error(ErrorCode::InvalidArgument, "set " + describe(s) + " is not a connected dominating set");
  }
  const std::size_t n = g.order();
  std::vector<char> in_tree(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> queue{s.members().front()};
  in_tree[queue.front()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex u : g.neighbors(v)) {
      if (!in_tree[u] && s.contains(u)) {
        in_tree[u] = 1;
        edges.emplace_back(v, u);
        queue.push_back(u);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_tree[v]) continue;
    for (Vertex u : g.neighbors(v)) {
      if (s.contains(u)) {
        edges.emplace_back(u, v);
        break;
      }
    }
  }
  return LeafyTree::from_edges(g, std::move(edges));
}

LeafyTree max_leaf_spanning_tree_exact(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kExactLeafyCap) {
    throw Error(ErrorCode::TooLarge, "exact max-leaf search is capped at n=" + std::to_string(kExactLeafyCap) +
                                         ", graph has " + std::to_string(n));
  }
  if (n == 0 || !is_connected(g)) throw Error(ErrorCode::InvalidArgument, "graph must be connected");
  if (n == 1) return LeafyTree::from_edges(g, {});

  const auto& adj = g.neighbor_masks();
  const Mask everything = (Mask{1} << n) - 1;
  // A tree whose internal vertices are a minimum connected dominating set has
  // the most leaves; walk subsets by size, lexicographically within a size.
  for (std::size_t size = 1; size <= n; ++size) {
    Mask s = (Mask{1} << size) - 1;
    while (s <= everything) {
      Mask covered = s;
      for (Mask f = s; f; f &= f - 1) covered |= adj[std::countr_zero(f)];
      if (covered == everything && induced_connected(g, s)) {
        return tree_from_dominating_set(g, VertexSet::from_mask(n, s));
      }
      // next subset with the same popcount (Gosper)
      Mask low = s & (~s + 1);
      Mask ripple = s + low;
      if (ripple == 0) break;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "no connected dominating set found");
}

LeafyTree leafy_spanning_tree_greedy(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || !is_connected(g)) throw Error(ErrorCode::InvalidArgument, "graph must be connected");
  std::vector<char> in_tree(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> members;

  Vertex root = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(root)) root = v;
  }
  in_tree[root] = 1;
  members.push_back(root);

  auto outside = [&](Vertex v) {
    std::size_t c = 0;
    for (Vertex u : g.neighbors(v)) c += !in_tree[u];
    return c;
  };
  while (members.size() < n) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_tree[v]) continue;
      std::size_t gain = outside(v);
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    for (Vertex u : g.neighbors(best)) {
      if (in_tree[u]) continue;
      in_tree[u] = 1;
      members.push_back(u);
      edges.emplace_back(best, u);
    }
  }
  return LeafyTree::from_edges(g, std::move(edges));
}

SupersetReport internal_superset_family(const Graph& g, const LeafyTree& tree, std::uint64_t seed) {
  const std::size_t n = g.order();
  if (tree.order != n) throw Error(ErrorCode::InvalidArgument, "tree does not span this graph");
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (!tree.internal.contains(v)) leaves.push_back(v);
  }
  const std::size_t ell = leaves.size();

  SupersetReport report;
  report.leaves = ell;
  report.exhaustive = ell <= kExhaustiveLeafLimit;

  auto check = [&](const std::vector<char>& pick) {
    std::vector<Vertex> members(tree.internal.members().begin(), tree.internal.members().end());
    for (std::size_t i = 0; i < ell; ++i) {
      if (pick[i]) members.push_back(leaves[i]);
    }
    if (members.empty()) return;  // the empty set is never a connected set
    VertexSet s(n, std::move(members));
    bool ok = g.fits_mask() ? induced_connected(g, s.to_mask()) : induced_connected(g, s);
    ++report.checked;
    if (!ok) {
      throw Error(ErrorCode::Counterexample,
                  "superset " + describe(s) + " of the internal vertices is disconnected");
    }
  };

  std::vector<char> pick(ell, 0);
  if (report.exhaustive) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ell); ++bits) {
      for (std::size_t i = 0; i < ell; ++i) pick[i] = static_cast<char>(bits >> i & 1);
      check(pick);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t sample = 0; sample < kSampledSupersets; ++sample) {
      for (std::size_t i = 0; i < ell; ++i) pick[i] = static_cast<char>(rng() >> 63);
      check(pick);
    }
  }

  report.implied_count_bound = mpz_class(1) << static_cast<mp_bitcnt_t>(ell);
  if (tree.internal.empty()) report.implied_count_bound -= 1;
  report.implied_growth = growth_from_leaves(ell, n);
  return report;
}

LeafyTree spanning_tree_hexchain(std::size_t m) {
  Graph g = build(family::HexChain{m});
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t j = 0; j < m; ++j) {
    const auto b = static_cast<Vertex>(6 * j);
    for (Vertex leaf : {b, b + 2, b + 3, b + 4, b + 5}) edges.emplace_back(b + 1, leaf);
    if (j + 1 < m) edges.emplace_back(b + 2, b + 6);
  }
  return LeafyTree::from_edges(g, std::move(edges));
}

LeafyTree spanning_tree_hexchain(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || n % 6 != 0 || !(g == build(family::HexChain{n / 6}))) {
    throw Error(ErrorCode::InvalidArgument, "graph is not a hexchain in canonical labelling");
  }
  return spanning_tree_hexchain(n / 6);
}

}  // namespace connset
