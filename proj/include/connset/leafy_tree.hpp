#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "connset/graph.hpp"

namespace connset {

/// A spanning tree of some graph, with its leaves and internal vertices.
struct LeafyTree {
  std::size_t order = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // (u, v) with u < v, sorted
  std::size_t leaf_count = 0;                    // tree-degree-1 vertices
  VertexSet internal;                            // everything that is not a leaf

  /// Checks that `edges` are edges of g forming a spanning tree and fills in
  /// the leaf data. Throws Error(InvalidArgument) otherwise.
  static LeafyTree from_edges(const Graph& g, std::vector<std::pair<Vertex, Vertex>> edges);
};

inline constexpr std::size_t kExactLeafyCap = 16;

/// Spanning tree with the maximum number of leaves (n <= 16). The search walks
/// vertex subsets in increasing size for the first connected dominating set
/// and grows a tree whose internal vertices lie inside it.
LeafyTree max_leaf_spanning_tree_exact(const Graph& g);

/// Greedy expansion: start at a maximum-degree vertex and repeatedly expand
/// the tree vertex with the most neighbours outside the tree (lowest label on
/// ties), attaching all of them.
LeafyTree leafy_spanning_tree_greedy(const Graph& g);

/// G[s] connected and every vertex outside s has a neighbour in s.
bool connected_dominating_check(const Graph& g, const VertexSet& s);

struct SupersetReport {
  bool exhaustive = false;
  std::uint64_t checked = 0;       // supersets tested
  std::size_t leaves = 0;
  mpz_class implied_count_bound;   // N(G) >= this
  long double implied_growth = 0;  // c(G) >= this
};

inline constexpr std::size_t kExhaustiveLeafLimit = 20;
inline constexpr std::uint64_t kSampledSupersets = 100000;

/// Confirms that every non-empty superset of the tree's internal vertices is
/// connected: exhaustively when the tree has at most 20 leaves, otherwise on
/// 10^5 seeded random supersets. Throws Error(Counterexample) naming the set.
SupersetReport internal_superset_family(const Graph& g, const LeafyTree& tree,
                                        std::uint64_t seed = 0x5eed);

/// Spanning tree of a graph grown from a connected dominating set: BFS inside
/// the set, every other vertex hung on its lowest-label neighbour in the set.
LeafyTree tree_from_dominating_set(const Graph& g, const VertexSet& s);

/// The explicit tree of HexChain(m): a star at every v_j plus the links
/// w_j u_{j+1} for j < m-1. It has 3m + 2 = n/2 + 2 leaves.
LeafyTree spanning_tree_hexchain(std::size_t m);
/// Same tree for a graph that must equal HexChain(n/6) label for label;
/// throws Error(InvalidArgument) for any other graph.
LeafyTree spanning_tree_hexchain(const Graph& g);

}  // namespace connset
