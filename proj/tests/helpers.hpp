#pragma once

#include "connset/graph.hpp"
#include "oracles.hpp"

inline oracle::Edges edges_of(const connset::Graph& g) {
  oracle::Edges out;
  for (auto [u, v] : g.edges()) out.emplace_back(u, v);
  return out;
}

inline connset::Graph graph_of(std::size_t n, const oracle::Edges& e) {
  connset::EdgeList edges;
  for (auto [u, v] : e) edges.emplace_back(u, v);
  return connset::Graph::from_edges(n, edges);
}

// The same graph with vertex v renamed perm[v].
inline connset::Graph relabel(const connset::Graph& g, const std::vector<connset::Vertex>& perm) {
  connset::EdgeList edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return connset::Graph::from_edges(g.order(), edges);
}
