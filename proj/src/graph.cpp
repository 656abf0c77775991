#include "connset/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

#include "connset/error.hpp"

namespace connset {

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidArgument,
                  "self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate edge " + std::to_string(v) + "-" +
                      std::to_string(*dup));
    }
  }
  g.edge_count_ = edges.size();
  if (n <= kMaskBits) {
    g.masks_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex u : g.adjacency_[v]) g.masks_[v] |= Mask{1} << u;
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::vector<Mask>& Graph::neighbor_masks() const {
  if (!fits_mask()) {
    throw Error(ErrorCode::TooLarge,
                "bitmask view needs at most 64 vertices, graph has " +
                    std::to_string(order()));
  }
  return masks_;
}

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (!members_.empty() && members_.back() >= universe_) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex " + std::to_string(members_.back()) +
                    " outside universe of size " + std::to_string(universe_));
  }
}

VertexSet VertexSet::from_mask(std::size_t universe, Mask mask) {
  std::vector<Vertex> members;
  while (mask) {
    members.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return VertexSet(universe, std::move(members));
}

VertexSet VertexSet::all(std::size_t universe) {
  std::vector<Vertex> members(universe);
  for (std::size_t v = 0; v < universe; ++v) members[v] = static_cast<Vertex>(v);
  return VertexSet(universe, std::move(members));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Mask VertexSet::to_mask() const {
  if (universe_ > kMaskBits) {
    throw Error(ErrorCode::TooLarge, "vertex set universe exceeds 64");
  }
  Mask m = 0;
  for (Vertex v : members_) m |= Mask{1} << v;
  return m;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) {
    throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
  }
  return induced_connected(g, VertexSet::all(g.order()));
}

bool induced_connected(const Graph& g, Mask s) {
  if (s == 0) return false;
  const auto& adj = g.neighbor_masks();
  Mask reached = s & (~s + 1);
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= s & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

bool induced_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<char> inside(g.order(), 0), seen(g.order(), 0);
  for (Vertex v : s.members()) inside[v] = 1;
  std::vector<Vertex> stack{s.members().front()};
  seen[stack.back()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (inside[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == s.size();
}

std::size_t isolated_count(const Graph& g, Mask s) {
  const auto& adj = g.neighbor_masks();
  std::size_t count = 0;
  for (Mask f = s; f; f &= f - 1) {
    if ((adj[std::countr_zero(f)] & s) == 0) ++count;
  }
  return count;
}

std::size_t isolated_count(const Graph& g, const VertexSet& s) {
  std::size_t count = 0;
  for (Vertex v : s.members()) {
    auto nb = g.neighbors(v);
    bool lonely = std::none_of(nb.begin(), nb.end(),
                               [&](Vertex u) { return s.contains(u); });
    if (lonely) ++count;
  }
  return count;
}

bool dominates(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(),
                     [&](Vertex u) { return s.contains(u); })) {
      return false;
    }
  }
  return true;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  if (g.order() == 0) return p;
  p.min_degree = g.degree(0);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::size_t d = g.degree(v);
    if (d >= p.histogram.size()) p.histogram.resize(d + 1, 0);
    ++p.histogram[d];
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
    if (d == 2) ++p.degree2;
    else if (d == 1 || d == 3) ++p.degree1or3;
    else if (d >= 4) ++p.degree4plus;
  }
  return p;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::Parse,
              "edge list line " + std::to_string(line) + ": " + why);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long declared_n = -1, declared_m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  Vertex max_label = 0;
  bool any = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank
    if (first[0] == '#' || first[0] == 'c') continue;
    if (first == "p") {
      if (declared_n >= 0 || any) parse_fail(line_no, "misplaced header");
      if (!(fields >> declared_n >> declared_m) || declared_n < 1 ||
          declared_m < 0) {
        parse_fail(line_no, "header must be `p <n> <m>` with n >= 1");
      }
      continue;
    }
    long long u = -1, v = -1;
    std::string extra;
    try {
      std::size_t used = 0;
      u = std::stoll(first, &used);
      if (used != first.size()) parse_fail(line_no, "bad vertex `" + first + "`");
    } catch (const std::logic_error&) {
      parse_fail(line_no, "bad vertex `" + first + "`");
    }
    if (!(fields >> v) || (fields >> extra)) {
      parse_fail(line_no, "expected exactly two vertices");
    }
    if (u < 0 || v < 0) parse_fail(line_no, "negative vertex label");
    if (u == v) parse_fail(line_no, "self-loop at " + std::to_string(u));
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
      parse_fail(line_no, "vertex out of range for n=" +
                              std::to_string(declared_n));
    }
    auto a = static_cast<Vertex>(u), b = static_cast<Vertex>(v);
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      parse_fail(line_no, "duplicate edge " + std::to_string(u) + " " +
                              std::to_string(v));
    }
    edges.emplace_back(a, b);
    max_label = std::max({max_label, a, b});
    any = true;
  }
  if (declared_m >= 0 && static_cast<long long>(edges.size()) != declared_m) {
    throw Error(ErrorCode::Parse,
                "edge list header declares " + std::to_string(declared_m) +
                    " edges but " + std::to_string(edges.size()) +
                    " were read");
  }
  std::size_t n = declared_n >= 0 ? static_cast<std::size_t>(declared_n)
                                  : (any ? max_label + 1u : 0u);
  if (n == 0) throw Error(ErrorCode::Parse, "edge list describes no vertices");
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open graph file " + path);
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace connset
