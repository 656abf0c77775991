#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "connset/census.hpp"
#include "connset/closed_forms.hpp"
#include "connset/error.hpp"
#include "connset/families.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace connset;

namespace {

void check_against_oracle(const Graph& g, const SetCensus& c) {
  oracle::Census o = oracle::subsets(static_cast<unsigned>(g.order()), edges_of(g));
  CHECK(c.count == o.count);
  CHECK(c.total_order == o.total);
}

std::vector<FamilySpec> small_families() {
  return {family::Path{7},           family::Star{8},       family::Cycle{9},
          family::Prism{3},          family::Prism{5},      family::CrissCross{2},
          family::CrissCross{3},     family::HexChain{2},   family::CirculantPower{11, 2},
          family::CirculantPrism{7, 2}, family::Complete{6}};
}

}  // namespace

TEST_CASE("small census values") {
  SetCensus c4 = census_bruteforce(build(family::Cycle{4}));
  CHECK(c4.count == 13);

  SetCensus p3 = census_bruteforce(build(family::Path{3}));
  CHECK(p3.count == 6);
  CHECK(p3.total_order == 10);
  CHECK(p3.average == mpq_class(5, 3));
  CHECK(p3.density == mpq_class(5, 9));

  SetCensus k2 = census_bruteforce(build(family::Path{2}));
  CHECK(k2.count == 3);
  CHECK(k2.density == mpq_class(2, 3));

  CHECK(census_bruteforce(build(family::Star{4})).count == 11);

  SetCensus p1 = census_rooted(build(family::Path{1}));
  CHECK(p1.count == 1);
  CHECK(p1.density == 1);

  CHECK(census_rooted(build(family::Prism{3})).count == 51);
  CHECK(census_rooted(build(family::Prism{3})).count == prism_count(3));
}

TEST_CASE("engines agree with the subset oracle") {
  for (const FamilySpec& spec : small_families()) {
    CAPTURE(to_string(spec));
    Graph g = build(spec);
    SetCensus brute = census_bruteforce(g);
    check_against_oracle(g, brute);
    CHECK(census_rooted(g) == brute);
    CensusOptions generic;
    generic.force_generic = true;
    CHECK(census_rooted(g, generic) == brute);
    if (auto chain = chain_for(spec)) CHECK(census_ring(*chain) == brute);
  }
}

TEST_CASE("random graphs against the subset oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    unsigned n = 3 + static_cast<unsigned>(rng() % 10);
    oracle::Edges e;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) {
        if (rng() % 4 == 0) e.emplace_back(i, j);
      }
    }
    Graph g = graph_of(n, e);
    SetCensus brute = census_bruteforce(g);
    check_against_oracle(g, brute);
    CHECK(census_rooted(g) == brute);
  }
}

TEST_CASE("trees against the subtree recurrence") {
  for (unsigned n = 1; n <= 40; ++n) {
    oracle::Edges e = oracle::random_tree(n, 100 + n);
    oracle::Census o = oracle::subtrees(n, e);
    Graph g = graph_of(n, e);
    SetCensus r = census_rooted(g);
    CHECK(r.count == o.count);
    CHECK(r.total_order == o.total);
    if (n <= 10) {
      CHECK(census_bruteforce(g) == r);
    }
  }
}

TEST_CASE("relabelling does not change the census") {
  Graph g = build(family::CrissCross{3});
  SetCensus base = census_rooted(g);
  std::vector<Vertex> perm(g.order());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(census_rooted(relabel(g, perm)) == base);
  }
}

TEST_CASE("thread count does not change results") {
  Graph g = build(family::HexChain{3});
  CensusOptions one, four;
  one.threads = 1;
  four.threads = 4;
  CHECK(census_bruteforce(g, one) == census_bruteforce(g, four));
  CHECK(census_rooted(g, one) == census_rooted(g, four));
}

TEST_CASE("complete graphs") {
  for (std::size_t n = 1; n <= 12; ++n) {
    SetCensus c = census_rooted(build(family::Complete{n}));
    mpz_class all = (mpz_class(1) << n) - 1;
    CHECK(c.count == all);
    // each vertex lies in half of all subsets
    CHECK(c.total_order == mpz_class(n) * (mpz_class(1) << (n - 1)));
  }
}

TEST_CASE("ring engine") {
  Graph c4 = build(family::Cycle{4});
  CircularBlockChain single = CircularBlockChain::make(c4, {{0, 1, 2, 3}});
  CHECK(census_ring(single).count == 13);

  Graph prism4 = build(family::Prism{4});
  CircularBlockChain four = CircularBlockChain::make(prism4, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK(census_ring(four).count == 167);

  auto cc = chain_for(family::CrissCross{3});
  REQUIRE(cc);
  CHECK(cc->blocks().size() == 3);
  CHECK(census_ring(*cc) == census_bruteforce(build(family::CrissCross{3})));

  auto hex = chain_for(family::HexChain{2});
  REQUIRE(hex);
  SetCensus hr = census_ring(*hex);
  SetCensus hb = census_bruteforce(build(family::HexChain{2}));
  CHECK(hr == hb);
  CHECK(hr.density == hb.density);

  for (std::size_t n = 3; n <= 30; ++n) {
    auto chain = chain_for(family::Prism{n});
    REQUIRE(chain);
    CHECK(census_ring(*chain).count == prism_count(n));
  }

  // a chord skipping a block is rejected
  Graph skip = Graph::from_edges(6, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  CHECK_THROWS_AS(CircularBlockChain::make(skip, {{0, 1}, {2}, {3, 4}, {5}}), Error);
  // vertices must be covered exactly once
  CHECK_THROWS_AS(CircularBlockChain::make(c4, {{0, 1}, {1, 2, 3}}), Error);
  CHECK_THROWS_AS(CircularBlockChain::make(c4, {{0, 1}, {2}}), Error);
}

TEST_CASE("engine dispatch") {
  CHECK(resolve_engine(build(family::Prism{5}), Engine::Auto, FamilySpec{family::Prism{5}}) == Engine::Ring);
  CHECK(resolve_engine(build(family::Complete{5}), Engine::Auto) == Engine::Brute);
  CHECK(resolve_engine(build(family::Complete{22}), Engine::Auto) == Engine::Rooted);
  CHECK(parse_engine("brute") == Engine::Brute);
  CHECK(std::string(engine_name(Engine::Ring)) == "ring");
  CHECK_THROWS_AS(parse_engine("magic"), Error);
  // ring needs a block decomposition, which only a family supplies
  CHECK_THROWS_AS(census(build(family::Complete{5}), Engine::Ring), Error);
}

TEST_CASE("limits") {
  try {
    census_bruteforce(build(family::Cycle{40}));
    FAIL("brute force ran on 40 vertices");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CensusOptions tight;
  tight.node_budget = 1000;
  try {
    census_rooted(build(family::Complete{14}), tight);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("growth from huge counts") {
  CHECK(static_cast<double>(growth_from_count(167, 8)) == doctest::Approx(0.948003).epsilon(1e-6));
  mpz_class big = mpz_class(3) << 1000;
  long double expected = std::pow(3.0L, 1.0L / 1000);
  CHECK(static_cast<double>(growth_from_count(big, 1000)) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
  // 2^n - 1 approaches 1 from below
  long double prev = 0;
  for (std::size_t n : {4u, 16u, 64u, 256u}) {
    long double c = growth_from_count((mpz_class(1) << n) - 1, n);
    CHECK(c < 1);
    CHECK(c > prev);
    prev = c;
  }
  // polynomial counts drift down to 1/2
  CHECK(growth_from_count(path_count(2000), 2000) < 0.51L);
  CHECK(growth_from_count(path_count(2000), 2000) > 0.5L);
}

TEST_CASE("connected sets versus isolation-free sets") {
  ConnectivityOdds k2 = connected_vs_isolated(build(family::Path{2}));
  CHECK(k2.p_connected == mpq_class(3, 4));
  CHECK(k2.p_no_isolated == mpq_class(1, 2));

  for (std::size_t n : {10u, 12u, 14u}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Graph g = graph_of(n, oracle::random_regular(static_cast<unsigned>(n), 3, seed));
      ConnectivityOdds o = connected_vs_isolated(g);
      CHECK(o.p_connected <= o.p_no_isolated);
      CHECK(o.connected == census_bruteforce(g).count);
    }
  }
  ConnectivityOdds f = connected_vs_isolated(build(family::CrissCross{3}));
  CHECK(f.connected == 1666);
  CHECK(f.p_connected <= f.p_no_isolated);
}

TEST_CASE("fraction strings") {
  CHECK(fraction_string(mpq_class(5, 1)) == "5/1");
  CHECK(fraction_string(mpq_class(-14, 3)) == "-14/3");
}
