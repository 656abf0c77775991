#include "connset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "connset/bounds.hpp"
#include "connset/closed_forms.hpp"
#include "connset/error.hpp"
#include "connset/leafy_tree.hpp"

namespace connset {

namespace {

std::string fixed(long double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, v);
  return buf;
}

std::string sci(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2Le", v);
  return buf;
}

struct Named {
  std::string name;
  Graph graph;
};

Named named(const FamilySpec& spec) { return {to_string(spec), build(spec)}; }

// LCF [5,-5]^6 on a 12-cycle, labelled independently of the criss-cross build.
Graph franklin_lcf() {
  EdgeList e;
  for (Vertex i = 0; i < 12; ++i) e.emplace_back(i, (i + 1) % 12);
  for (Vertex i = 0; i < 12; i += 2) e.emplace_back(i, (i + 5) % 12);
  return Graph::from_edges(12, e);
}

// Subcubic graphs with 10 <= n <= 16 used by the strategy claims.
std::vector<Named> strategy_graphs() {
  std::vector<Named> out{{"franklin", franklin_lcf()}};
  for (std::size_t n = 5; n <= 8; ++n) out.push_back(named(family::Prism{n}));
  out.push_back(named(family::CrissCross{3}));
  out.push_back(named(family::HexChain{2}));
  return out;
}

Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (;;) {
    EdgeList e;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (coin(rng)) e.emplace_back(i, j);
      }
    }
    Graph g = Graph::from_edges(n, e);
    if (is_connected(g)) return g;
  }
}

// Connected graphs on 2..12 vertices for the leaf-count claim.
std::vector<Named> leafy_grid() {
  std::vector<Named> out;
  for (std::size_t n = 2; n <= 12; ++n) out.push_back(named(family::Path{n}));
  for (std::size_t n = 3; n <= 12; ++n) out.push_back(named(family::Star{n}));
  for (std::size_t n = 3; n <= 12; ++n) out.push_back(named(family::Cycle{n}));
  for (std::size_t n = 2; n <= 12; ++n) out.push_back(named(family::Complete{n}));
  for (std::size_t n = 3; n <= 6; ++n) out.push_back(named(family::Prism{n}));
  for (std::size_t n = 2; n <= 3; ++n) out.push_back(named(family::CrissCross{n}));
  for (std::size_t m = 1; m <= 2; ++m) out.push_back(named(family::HexChain{m}));
  for (std::size_t n = 5; n <= 12; ++n) out.push_back(named(family::CirculantPower{n, 2}));
  for (std::size_t n = 7; n <= 12; ++n) out.push_back(named(family::CirculantPower{n, 3}));
  for (std::size_t n = 5; n <= 6; ++n) out.push_back(named(family::CirculantPrism{n, 2}));
  for (std::size_t n = 4; n <= 12; n += 2) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      out.push_back({"random-cubic:" + std::to_string(n) + "#" + std::to_string(seed), random_regular_graph(n, 3, seed)});
    }
  }
  for (std::size_t n = 6; n <= 12; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      out.push_back({"random-gnp:" + std::to_string(n) + "#" + std::to_string(seed),
                     random_connected_graph(n, 0.35, 1000 * n + seed)});
    }
  }
  return out;
}

// Graphs without a degree-2 vertex on at most 16 vertices.
std::vector<Named> degree2_free_graphs() {
  std::vector<Named> out;
  for (std::size_t n = 4; n <= 16; ++n) out.push_back(named(family::Star{n}));
  for (std::size_t n = 4; n <= 16; ++n) out.push_back(named(family::Complete{n}));
  for (std::size_t n = 3; n <= 8; ++n) out.push_back(named(family::Prism{n}));
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(named(family::CrissCross{n}));
  for (std::size_t n = 5; n <= 16; ++n) out.push_back(named(family::CirculantPower{n, 2}));
  for (std::size_t n = 7; n <= 16; ++n) out.push_back(named(family::CirculantPower{n, 3}));
  for (std::size_t n = 5; n <= 8; ++n) out.push_back(named(family::CirculantPrism{n, 2}));
  out.push_back({"franklin", franklin_lcf()});
  for (std::size_t n = 4; n <= 16; n += 2) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      out.push_back({"random-cubic:" + std::to_string(n) + "#" + std::to_string(seed), random_regular_graph(n, 3, seed)});
    }
  }
  for (std::size_t n = 6; n <= 16; ++n) {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      out.push_back({"random-4-regular:" + std::to_string(n) + "#" + std::to_string(seed),
                     random_regular_graph(n, 4, seed)});
    }
  }
  return out;
}

void add(ClaimResult& claim, std::string label, bool pass, std::string detail) {
  claim.checks.push_back({std::move(label), pass, std::move(detail)});
}

// --- claims -----------------------------------------------------------------

void claim_exact_counts(ClaimResult& c, const CensusOptions& opt) {
  std::string bad;
  for (std::size_t n = 1; n <= 14 && bad.empty(); ++n) {
    Graph g = build(family::Path{n});
    mpz_class want = path_count(n);
    auto ring = census_ring(*chain_for(family::Path{n}));
    if (census_bruteforce(g, opt).count != want || census_rooted(g, opt).count != want || ring.count != want) {
      bad = "path:" + std::to_string(n);
    }
  }
  add(c, "N(P_n) = n(n+1)/2 for n <= 14, all three engines", bad.empty(), bad.empty() ? "14 orders agree" : "mismatch at " + bad);

  bad.clear();
  for (std::size_t n = 2; n <= 14 && bad.empty(); ++n) {
    Graph g = build(family::Star{n});
    mpz_class want = star_count(n);
    if (census_bruteforce(g, opt).count != want || census_rooted(g, opt).count != want) bad = "star:" + std::to_string(n);
  }
  add(c, "N(K_{1,n-1}) = 2^(n-1) + n - 1 for n <= 14", bad.empty(), bad.empty() ? "13 orders agree" : "mismatch at " + bad);

  mpz_class prism4 = census_bruteforce(build(family::Prism{4}), opt).count;
  mpz_class cc2 = census_bruteforce(build(family::CrissCross{2}), opt).count;
  add(c, "N(Prism(4)) = N(CrissCross(2)) = 167", prism4 == 167 && cc2 == 167 && prism_count(4) == 167,
      "prism:4 " + prism4.get_str() + ", crisscross:2 " + cc2.get_str() + ", closed form " + prism_count(4).get_str());
}

void claim_engine_agreement(ClaimResult& c, const CensusOptions& opt) {
  std::vector<FamilySpec> specs;
  for (std::size_t n = 3; n <= 6; ++n) specs.push_back(family::Prism{n});
  for (std::size_t n = 2; n <= 5; ++n) specs.push_back(family::CrissCross{n});
  for (std::size_t m = 1; m <= 3; ++m) specs.push_back(family::HexChain{m});
  for (std::size_t n = 4; n <= 12; ++n) specs.push_back(family::Cycle{n});
  for (const FamilySpec& spec : specs) {
    Graph g = build(spec);
    SetCensus b = census_bruteforce(g, opt), r = census_rooted(g, opt), d = census_ring(*chain_for(spec));
    bool ok = b == r && r == d;
    add(c, to_string(spec), ok,
        "N=" + b.count.get_str() + " total=" + b.total_order.get_str() +
            (ok ? "" : " rooted N=" + r.count.get_str() + " ring N=" + d.count.get_str()));
  }
}

void claim_crisscross_audit(ClaimResult& c) {
  std::ostringstream published;
  bool agrees = true;
  for (std::size_t n = 3; n <= 5; ++n) {
    mpz_class truth = census_ring(*chain_for(family::CrissCross{n})).count;
    mpq_class printed = crisscross_count_published(n);
    bool same = printed == mpq_class(truth);
    agrees = agrees && same;
    published << "n=" << n << ": " << printed.get_str() << (printed.get_den() == 1 ? "" : " (not an integer)") << " vs "
              << truth.get_str() << (same ? " ok" : " differs") << "; ";
  }

  bool fitted = false;
  std::string fit_detail;
  try {
    CrissCrossFit fit = fit_crisscross({}, {6, 7, 8});
    fitted = fit == crisscross_fit();
    fit_detail = "N = 7^n + (" + fit.count_lin.get_str() + ") n 7^(n-2) + (" + fit.count_const.get_str() +
                 ") n; total = (" + fit.total_quad.get_str() + ") n^2 7^(n-3) + (" + fit.total_lin.get_str() +
                 ") n 7^(n-3) + (" + fit.total_const.get_str() + ") n; matches ring DP at n=6,7,8" +
                 (fitted ? "" : " but differs from the shipped constants");
  } catch (const Error& e) {
    fit_detail = e.what();
  }
  add(c, "published count at n=3,4,5", true, published.str() + (agrees ? "exact agreement" : "disagreement reported"));
  add(c, "corrected constants fitted on n=3,4,5 and validated at n=6,7,8", fitted, fit_detail);
  add(c, "outcome internally consistent", agrees || fitted,
      agrees ? "published form confirmed" : (fitted ? "published form refuted, corrected form validated"
                                                    : "published form refuted and no validated correction"));
}

void claim_growth_limits(ClaimResult& c) {
  SetCensus prism = census_ring(*chain_for(family::Prism{200}));
  add(c, "ring DP equals Pell closed form at Prism(200)", prism.count == prism_count(200), "N has " +
      std::to_string(prism.count.get_str().size()) + " digits");
  long double lim = prism_growth_limit();
  long double diff = std::fabs(prism.growth - lim);
  add(c, "|c(Prism(200)) - sqrt(1+sqrt2)/2| <= 1e-3", diff <= 1e-3L,
      "c=" + fixed(prism.growth) + " limit=" + fixed(lim) + " diff=" + sci(diff));

  SetCensus cc = census_ring(*chain_for(family::CrissCross{40}));
  add(c, "ring DP equals validated closed form at CrissCross(40)", cc.count == crisscross_count_validated(40),
      "N has " + std::to_string(cc.count.get_str().size()) + " digits");
  long double cl = crisscross_growth_limit();
  diff = std::fabs(cc.growth - cl);
  add(c, "|c(CrissCross(40)) - 7^(1/4)/2| <= 1e-2", diff <= 1e-2L,
      "c=" + fixed(cc.growth) + " limit=" + fixed(cl) + " diff=" + sci(diff));
}

void claim_bound_constants(ClaimResult& c) {
  RootPair r3 = solve_yd(3);
  add(c, "y_3 residual <= 1e-9", r3.y.residual <= 1e-9L, "y_3=" + fixed(r3.y.value, 10) + " residual=" + sci(r3.y.residual));
  add(c, "y_3 < 0.9781", r3.y.value < 0.9781L, "y_3=" + fixed(r3.y.value, 10));
  long double low = crisscross_growth_limit();
  add(c, "7^(1/4)/2 > 0.813", low > 0.813L, "7^(1/4)/2=" + fixed(low, 10));
  long double a = solve_alpha(std::exp2(-0.75L));
  add(c, "alpha(2^(-3/4)) < 0.95831", a < 0.95831L, "alpha=" + fixed(a, 10));
  long double worst = 0;
  for (unsigned d = 2; d <= 8; ++d) {
    RootPair r = solve_yd(d);
    worst = std::max(worst, std::fabs(r.y.value * r.z.value - 1));
  }
  add(c, "|y_d z_d - 1| <= 1e-8 for d=2..8", worst <= 1e-8L, "largest deviation " + sci(worst));
}

void claim_binomial(ClaimResult& c) {
  std::size_t cases = 0;
  std::string bad;
  for (unsigned a = 11; a <= 19; ++a) {
    mpq_class alpha(a, 20);
    alpha.canonicalize();
    for (std::size_t n = 1; n <= 60; ++n) {
      BinomialTail t = binomial_tail_stats(n, alpha);
      ++cases;
      if ((!t.count_holds() || !t.average_holds()) && bad.empty()) {
        bad = "n=" + std::to_string(n) + " alpha=" + alpha.get_str();
      }
    }
  }
  add(c, "tail count and average bounds, n<=60, alpha=0.55..0.95", bad.empty(),
      bad.empty() ? std::to_string(cases) + " cases hold" : "fails at " + bad);
}

void claim_process(ClaimResult& c) {
  std::vector<StepDistribution> dists{StepDistribution::parse("0:1/4,1:1/2,2:1/4"), worst_case_distribution(2),
                                      StepDistribution::parse("0:1/3,1:1/6,3:1/2")};
  for (const auto& d : dists) {
    auto p = exact_pn(d, 6);
    bool ok = true;
    for (std::size_t n = 0; n <= 6; ++n) ok = ok && p[n] == process_tree_probability(d, n);
    add(c, "exact p_n equals process-tree expansion, n<=6, " + d.to_string(), ok, "p_6=" + p[6].get_str());
  }
  std::uint64_t seed = 20240601;
  for (const auto& d : dists) {
    for (std::size_t n : {2, 5}) {
      mpq_class exact = exact_pn(d, n)[n];
      MonteCarlo mc = simulate_process(d, n, 200000, seed++);
      double p = exact.get_d(), sigma = std::sqrt(p * (1 - p) / static_cast<double>(mc.trials));
      double dev = std::fabs(mc.estimate - p);
      add(c, "Monte Carlo within 3 sigma, n=" + std::to_string(n) + ", " + d.to_string(), dev <= 3 * sigma,
          "estimate " + fixed(mc.estimate) + " exact " + fixed(p) + " |dev|/sigma=" + fixed(dev / sigma, 2));
    }
  }
  for (unsigned d = 2; d <= 5; ++d) {
    QnCheck q = qn_bounds_check(worst_case_distribution(d), 500);
    add(c, "q_n in [c1-1e-8, c2+1e-8] for n<=500, worst case d=" + std::to_string(d), q.pass,
        "z=" + fixed(q.z, 10) + " c1=" + fixed(q.c1, 8) + " c2=" + fixed(q.c2, 8) + " worst excess " + sci(q.worst_excess));
  }
}

void claim_strategy(ClaimResult& c, const CensusOptions& opt) {
  for (const Named& ng : strategy_graphs()) {
    ConnectivityOdds odds = connected_vs_isolated(ng.graph, opt);
    mpq_class success = strategy_success_exact(ng.graph, opt.threads);
    bool ok = odds.p_connected <= odds.p_no_isolated && odds.p_no_isolated <= success;
    add(c, ng.name + " (n=" + std::to_string(ng.graph.order()) + ")", ok,
        "P(connected)=" + odds.p_connected.get_str() + " P(I=0)=" + odds.p_no_isolated.get_str() +
            " P(success)=" + success.get_str());
  }
}

void claim_dominance(ClaimResult& c, const CensusOptions& opt) {
  for (const Named& ng : strategy_graphs()) {
    DominanceReport r = stochastic_dominance_check(ng.graph);
    mpq_class replay = strategy_success_exact(ng.graph, opt.threads);
    const std::size_t d = r.max_degree;
    bool gains = r.max_gain_later <= 2 * d - 1 && r.max_gain_first <= 2 * d;
    bool ok = r.pass() && gains && r.success == replay;
    std::string detail = std::to_string(r.histories) + " histories, d=" + std::to_string(d) +
                         ", max X_1=" + std::to_string(r.max_gain_first) +
                         ", max later X_i=" + std::to_string(r.max_gain_later);
    if (!r.pass()) detail += "; " + r.first_violation;
    if (r.success != replay) detail += "; decision-tree success " + r.success.get_str() + " != replay " + replay.get_str();
    add(c, ng.name, ok, detail);
  }
}

void claim_leafy(ClaimResult& c) {
  std::size_t graphs = 0, greedy_ok = 0;
  std::string bad;
  for (const Named& ng : leafy_grid()) {
    DegreeProfile prof = degree_profile(ng.graph);
    LeafyTree best = max_leaf_spanning_tree_exact(ng.graph);
    std::size_t need = karpov_leaf_bound(prof.degree1or3, prof.degree4plus);
    ++graphs;
    if (best.leaf_count < need && bad.empty()) {
      bad = ng.name + " has " + std::to_string(best.leaf_count) + " < " + std::to_string(need);
    }
    if (leafy_spanning_tree_greedy(ng.graph).leaf_count <= best.leaf_count) ++greedy_ok;
    internal_superset_family(ng.graph, best);
  }
  add(c, "exact max-leaf tree meets the Karpov bound", bad.empty(),
      bad.empty() ? std::to_string(graphs) + " connected graphs with n<=12" : bad);
  add(c, "greedy never beats exact", greedy_ok == graphs, std::to_string(greedy_ok) + "/" + std::to_string(graphs));

  std::ostringstream hex;
  bool ok = true;
  std::uint64_t checked = 0;
  for (std::size_t m = 1; m <= 6; ++m) {
    LeafyTree t = spanning_tree_hexchain(m);
    ok = ok && t.leaf_count == 3 * m + 2;
    SupersetReport r = internal_superset_family(build(family::HexChain{m}), t);
    ok = ok && r.exhaustive;
    checked += r.checked;
    hex << "m=" << m << ":" << t.leaf_count << " ";
  }
  add(c, "HexChain(m) tree has n/2+2 leaves, supersets exhaustive, m=1..6", ok,
      hex.str() + "leaves; " + std::to_string(checked) + " supersets connected");

  Graph circ = build(family::CirculantPower{12, 3});
  VertexSet dom = circulant_dominating_set(12, 3);
  LeafyTree t = tree_from_dominating_set(circ, dom);
  SupersetReport r = internal_superset_family(circ, t);
  add(c, "CirculantPower(12,3) dominating-set tree", connected_dominating_check(circ, dom) && r.leaves >= 12 - dom.size(),
      std::to_string(r.leaves) + " leaves (at least 12-4), N >= " + r.implied_count_bound.get_str());
}

void claim_density(ClaimResult& c, const CensusOptions& opt) {
  SetCensus hex = census_ring(*chain_for(family::HexChain{10}));
  long double target = 41.0L / 54.0L, dv = static_cast<long double>(hex.density.get_d());
  add(c, "|D(HexChain(10)) - 41/54| <= 1e-2", std::fabs(dv - target) <= 1e-2L,
      "D=" + fixed(dv) + " target=" + fixed(target) + " diff=" + sci(std::fabs(dv - target)));

  SetCensus cc = census_ring(*chain_for(family::CrissCross{50}));
  bool same = cc.density == crisscross_density_validated(50);
  target = 5.0L / 7.0L;
  dv = static_cast<long double>(cc.density.get_d());
  add(c, "ring DP equals validated closed form for D(CrissCross(50))", same, "exact rational comparison");
  add(c, "|D(CrissCross(50)) - 5/7| <= 1e-2", std::fabs(dv - target) <= 1e-2L,
      "D=" + fixed(dv) + " target=" + fixed(target) + " diff=" + sci(std::fabs(dv - target)));

  const long double bound = 0.95831L;
  std::size_t graphs = 0;
  long double worst = 0;
  std::string worst_name, bad;
  for (const Named& ng : degree2_free_graphs()) {
    if (degree_profile(ng.graph).degree2 != 0) {
      bad = ng.name + " has a degree-2 vertex";
      break;
    }
    SetCensus s = census_bruteforce(ng.graph, opt);
    long double d = static_cast<long double>(s.density.get_d());
    ++graphs;
    if (d > worst) {
      worst = d;
      worst_name = ng.name;
    }
  }
  add(c, "D < 0.95831 on degree-2-free graphs with n <= 16", bad.empty() && worst < bound,
      bad.empty() ? std::to_string(graphs) + " graphs, largest D=" + fixed(worst) + " (" + worst_name + ")" : bad);
}

void claim_trend(ClaimResult& c, const CensusOptions& opt) {
  std::ostringstream seq;
  long double prev = 1;
  bool ok = true;
  for (std::size_t k : {16, 64, 256, 1024}) {
    MinDegreeBounds b = min_degree_density_bounds(k);
    ok = ok && b.upper < prev && b.upper > 0.5L;
    prev = b.upper;
    seq << "k=" << k << ":" << fixed(b.upper) << " ";
  }
  add(c, "min-degree upper bound strictly decreasing toward 1/2", ok, seq.str());

  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{24, 4}, {30, 5}}) {
    Graph g = build(family::CirculantPower{n, k});
    SetCensus s = census_rooted(g, opt);
    std::size_t dom = (n + k - 1) / k;
    long double lower = growth_from_leaves(n - dom, n);
    bool cds = connected_dominating_check(g, circulant_dominating_set(n, k));
    add(c, "c(C_" + std::to_string(n) + "^" + std::to_string(k) + ") > 2^((n-ceil(n/k))/n - 1)",
        cds && s.growth > lower, "c=" + fixed(s.growth) + " lower=" + fixed(lower) + (cds ? "" : " (dominating set invalid)"));
  }
}

const char* const kTitles[kClaimCount] = {
    "exact counts for paths, stars and the 8-vertex cubic graphs",
    "engine agreement",
    "criss-cross count formula audit",
    "growth limits for prisms and criss-cross prisms",
    "bound constants",
    "binomial tail lemma",
    "hitting-probability process",
    "revelation strategy soundness",
    "stochastic dominance of stage gains",
    "leafy spanning trees",
    "density targets",
    "asymptotic trends",
};

}  // namespace

bool ClaimResult::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool SuiteReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass(); });
}

std::string claim_title(int id) {
  if (id < 1 || id > kClaimCount) throw Error(ErrorCode::InvalidArgument, "no claim with id " + std::to_string(id));
  return kTitles[id - 1];
}

ClaimResult run_claim(int id, const SuiteOptions& opt) {
  ClaimResult c;
  c.id = id;
  c.title = claim_title(id);
  CensusOptions co;
  co.threads = opt.threads;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: claim_exact_counts(c, co); break;
      case 2: claim_engine_agreement(c, co); break;
      case 3: claim_crisscross_audit(c); break;
      case 4: claim_growth_limits(c); break;
      case 5: claim_bound_constants(c); break;
      case 6: claim_binomial(c); break;
      case 7: claim_process(c); break;
      case 8: claim_strategy(c, co); break;
      case 9: claim_dominance(c, co); break;
      case 10: claim_leafy(c); break;
      case 11: claim_density(c, co); break;
      case 12: claim_trend(c, co); break;
    }
  } catch (const std::exception& e) {
    add(c, "claim ran to completion", false, e.what());
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

SuiteReport run_suite(const SuiteOptions& opt) {
  SuiteReport report;
  for (int id = 1; id <= kClaimCount; ++id) {
    if (!opt.only.empty() && !opt.only.count(id)) continue;
    report.claims.push_back(run_claim(id, opt));
    if (opt.progress) opt.progress(report.claims.back());
  }
  return report;
}

void write_suite_text(std::ostream& out, const SuiteReport& report) {
  std::size_t passed = 0;
  for (const ClaimResult& c : report.claims) {
    passed += c.pass();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", c.seconds);
    out << (c.pass() ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << " (" << timing << ")\n";
    for (const Check& k : c.checks) {
      out << "      " << (k.pass ? "ok  " : "FAIL") << "  " << k.label;
      if (!k.detail.empty()) out << ": " << k.detail;
      out << '\n';
    }
  }
  out << passed << "/" << report.claims.size() << " claims passed\n";
}

bool FormulaReport::consistent() const {
  return std::all_of(lines.begin(), lines.end(), [](const FormulaLine& l) { return l.matches; });
}

FormulaReport formula_report(const FamilySpec& spec, Engine engine, const CensusOptions& opt) {
  Graph g = build(spec);
  FormulaReport r;
  r.family = to_string(spec);
  r.engine = resolve_engine(g, engine, spec);
  SetCensus truth = census(g, r.engine, spec, opt);
  r.oracle_count = truth.count.get_str();
  r.oracle_density = fraction_string(truth.density);
  auto line = [&](std::string name, const mpq_class& value, const mpq_class& want) {
    r.lines.push_back({std::move(name), value.get_str(), value == want});
  };
  mpq_class count(truth.count);
  if (auto* f = std::get_if<family::Path>(&spec)) {
    line("n(n+1)/2", mpq_class(path_count(f->n)), count);
  } else if (auto* s = std::get_if<family::Star>(&spec)) {
    line("2^(n-1)+n-1", mpq_class(star_count(s->n)), count);
  } else if (auto* p = std::get_if<family::Prism>(&spec)) {
    line("1-3n+a_n+3n b_n (Pell)", mpq_class(prism_count(p->n)), count);
  } else if (auto* x = std::get_if<family::CrissCross>(&spec)) {
    line("published 7^n+(191/3)n7^(n-2)-(16/3)n", crisscross_count_published(x->n), count);
    if (x->n >= 3) line("published density", crisscross_density_published(x->n), truth.density);
    const CrissCrossFit& fit = crisscross_fit();
    line("corrected 7^n+(191/3)n7^(n-2)-(14/3)n", mpq_class(fit.count(x->n)), count);
    line("corrected density", fit.density(x->n), truth.density);
  } else {
    throw Error(ErrorCode::InvalidArgument, "no closed form for family " + family_name(spec));
  }
  return r;
}

Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n || (n * d) % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "no " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    EdgeList e;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex a = std::min(points[i], points[i + 1]), b = std::max(points[i], points[i + 1]);
      simple = a != b && std::find(e.begin(), e.end(), std::pair{a, b}) == e.end();
      e.emplace_back(a, b);
    }
    if (!simple) continue;
    Graph g = Graph::from_edges(n, e);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::InvalidArgument, "pairing model did not produce a simple connected graph");
}

mpq_class process_tree_probability(const StepDistribution& dist, std::size_t n) {
  // Depth-first over every draw sequence; each leaf is a win or a loss.
  mpq_class won = 0;
  std::function<void(std::size_t, const mpq_class&)> expand = [&](std::size_t sum, const mpq_class& weight) {
    if (sum >= n) {
      won += weight;
      return;
    }
    for (const auto& [value, p] : dist.support()) {
      if (value == 0) continue;
      expand(sum + value, weight * p);
    }
  };
  expand(0, mpq_class(1));
  won.canonicalize();
  return won;
}

}  // namespace connset
