#include <doctest.h>

#include "connset/error.hpp"
#include "connset/families.hpp"
#include "connset/graph.hpp"
#include "connset/leafy_tree.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace connset;

namespace {

bool regular(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("orders, sizes and regularity") {
  for (std::size_t n = 3; n <= 9; ++n) {
    Graph p = build(family::Prism{n});
    CHECK(p.order() == 2 * n);
    CHECK(regular(p, 3));
    CHECK(is_connected(p));

    Graph cycle = build(family::Cycle{n});
    CHECK(regular(cycle, 2));
    CHECK(cycle.size() == n);
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    Graph cc = build(family::CrissCross{n});
    CHECK(cc.order() == 4 * n);
    CHECK(cc.size() == 6 * n);
    CHECK(regular(cc, 3));
    CHECK(is_connected(cc));
  }
  for (std::size_t n = 5; n <= 14; ++n) {
    for (std::size_t k = 1; 2 * k < n; ++k) {
      Graph c = build(family::CirculantPower{n, k});
      CHECK(regular(c, 2 * k));
      Graph cp = build(family::CirculantPrism{n, k});
      CHECK(cp.order() == 2 * n);
      CHECK(regular(cp, 2 * k + 1));
    }
  }
  CHECK(build(family::Path{6}).size() == 5);
  CHECK(build(family::Star{6}).size() == 5);
  CHECK(build(family::Complete{6}).size() == 15);
}

TEST_CASE("the Franklin graph") {
  Graph f = build(family::CrissCross{3});
  CHECK(f.order() == 12);
  CHECK(f.size() == 18);
  CHECK(regular(f, 3));
  CHECK(build(parse_family("franklin")) == f);
}

TEST_CASE("CrissCross(2) is isomorphic to Prism(4)") {
  Graph a = build(family::CrissCross{2});
  Graph b = build(family::Prism{4});
  CHECK(oracle::isomorphic(8, edges_of(a), edges_of(b)));
  // and not to the 8-vertex Moebius ladder, which is not bipartite
  oracle::Edges moebius;
  for (unsigned i = 0; i < 8; ++i) moebius.emplace_back(i, (i + 1) % 8);
  for (unsigned i = 0; i < 4; ++i) moebius.emplace_back(i, i + 4);
  CHECK_FALSE(oracle::isomorphic(8, edges_of(a), moebius));
}

TEST_CASE("HexChain gadget") {
  for (std::size_t m = 1; m <= 5; ++m) {
    Graph h = build(family::HexChain{m});
    CHECK(h.order() == 6 * m);
    CHECK(is_connected(h));
    DegreeProfile p = degree_profile(h);
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 5);
    for (Vertex v = 0; v < h.order(); ++v) {
      // v_j (label 6j+1) is the degree-5 hub of its gadget
      CHECK(h.degree(v) == (v % 6 == 1 ? 5u : 3u));
    }
  }
}

TEST_CASE("family specs") {
  CHECK(to_string(parse_family("crisscross:3")) == "crisscross:3");
  CHECK(to_string(parse_family("circulant:12:3")) == "circulant:12:3");
  CHECK(to_string(parse_family("hexchain:2")) == "hexchain:2");
  CHECK(family_name(parse_family("circulantprism:9:2")) == "circulantprism");
  CHECK_THROWS_AS(parse_family("nosuch:3"), Error);
  CHECK_THROWS_AS(parse_family("prism"), Error);
  CHECK_THROWS_AS(parse_family("prism:x"), Error);
  CHECK_THROWS_AS(parse_family("prism:-3"), Error);

  try {
    parse_family("prism:2");
    FAIL("accepted prism:2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
    CHECK(std::string(e.what()).find("n=2") != std::string::npos);
  }
  try {
    build(family::CirculantPower{10, 5});
    FAIL("accepted k = n/2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
    CHECK(std::string(e.what()).find("k=5") != std::string::npos);
  }
  CHECK_THROWS_AS(build(family::HexChain{0}), Error);
  CHECK_THROWS_AS(build(family::CrissCross{1}), Error);
}

TEST_CASE("circulant dominating sets") {
  VertexSet s = circulant_dominating_set(12, 3);
  CHECK(s == VertexSet(12, {1, 4, 7, 10}));
  Graph c = build(family::CirculantPower{12, 3});
  CHECK(induced_connected(c, s));
  CHECK(dominates(c, s));
  CHECK(connected_dominating_check(c, s));

  CHECK(circulant_dominating_set(10, 1).size() == 10);

  for (std::size_t n = 5; n <= 16; ++n) {
    for (std::size_t k = 1; 2 * k < n; ++k) {
      Graph g = build(family::CirculantPower{n, k});
      VertexSet d = circulant_dominating_set(n, k);
      CHECK(d.size() == (n + k - 1) / k);
      CHECK(connected_dominating_check(g, d));
    }
  }
}

TEST_CASE("supersets of a connected dominating set stay connected") {
  Graph c = build(family::CirculantPower{12, 3});
  Mask base = circulant_dominating_set(12, 3).to_mask();
  Mask rest = ((Mask{1} << 12) - 1) & ~base;
  std::size_t seen = 0;
  for (Mask extra = rest;; extra = (extra - 1) & rest) {
    CHECK(induced_connected(c, base | extra));
    ++seen;
    if (extra == 0) break;
  }
  CHECK(seen == 256);
}

TEST_CASE("explicit HexChain spanning tree") {
  CHECK(spanning_tree_hexchain(1).leaf_count == 5);
  CHECK(spanning_tree_hexchain(2).leaf_count == 8);
  for (std::size_t m = 1; m <= 8; ++m) {
    Graph h = build(family::HexChain{m});
    LeafyTree t = spanning_tree_hexchain(h);
    CHECK(t.leaf_count == 3 * m + 2);
    CHECK(t.edges.size() == 6 * m - 1);
    CHECK(connected_dominating_check(h, t.internal));
  }
  try {
    spanning_tree_hexchain(build(family::Prism{6}));
    FAIL("accepted a prism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  CHECK_THROWS_AS(spanning_tree_hexchain(build(family::Path{13})), Error);
}
