#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace connset {

using Vertex = std::uint32_t;
using Mask = std::uint64_t;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Largest order for which a vertex subset fits into a single Mask.
inline constexpr std::size_t kMaskBits = 64;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Rejects self-loops, out-of-range endpoints and
  /// repeated edges (in either orientation).
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Neighbourhood bitmasks; only valid when order() <= kMaskBits.
  const std::vector<Mask>& neighbor_masks() const;
  bool fits_mask() const noexcept { return order() <= kMaskBits; }

  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Mask> masks_;
  std::size_t edge_count_ = 0;
};

/// A subset of 0..n-1 held as a sorted, duplicate-free list.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::size_t universe, std::vector<Vertex> members);

  static VertexSet from_mask(std::size_t universe, Mask mask);
  static VertexSet all(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const { return members_; }

  /// Requires universe() <= kMaskBits.
  Mask to_mask() const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> members_;
};

struct DegreeProfile {
  std::vector<std::size_t> histogram;  // histogram[d] = #vertices of degree d
  std::size_t degree2 = 0;             // v2
  std::size_t degree1or3 = 0;          // s
  std::size_t degree4plus = 0;         // t
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

bool is_connected(const Graph& g);

/// True iff `s` is non-empty and G[s] is connected.
bool induced_connected(const Graph& g, Mask s);
bool induced_connected(const Graph& g, const VertexSet& s);

/// Number of vertices of `s` with no neighbour inside `s`.
std::size_t isolated_count(const Graph& g, Mask s);
std::size_t isolated_count(const Graph& g, const VertexSet& s);

/// Every vertex outside `s` has a neighbour in `s` (no connectivity check).
bool dominates(const Graph& g, const VertexSet& s);

DegreeProfile degree_profile(const Graph& g);

/// Edge-list text: optional `p <n> <m>` header, then `u v` pairs, 0-indexed.
/// Without a header, n is one more than the largest endpoint seen.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

}  // namespace connset
