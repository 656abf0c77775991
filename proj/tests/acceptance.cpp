// Acceptance run: one PASS/FAIL line per criterion, each recomputed here from
// the independent oracles in oracles.hpp where one exists, followed by the
// library's own suite as a cross-check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "connset/bounds.hpp"
#include "connset/census.hpp"
#include "connset/closed_forms.hpp"
#include "connset/families.hpp"
#include "connset/leafy_tree.hpp"
#include "connset/revelation.hpp"
#include "connset/verify.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace connset;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    notes.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string name_of(const FamilySpec& s) { return to_string(s); }

// Franklin graph from its LCF notation [5,-5]^6, independent of the
// criss-cross constructor and with a different labelling.
oracle::Edges franklin_lcf() {
  oracle::Edges e;
  for (unsigned i = 0; i < 12; ++i) e.emplace_back(i, (i + 1) % 12);
  for (unsigned i = 0; i < 12; i += 2) e.emplace_back(i, (i + 5) % 12);
  return e;
}

std::uint64_t full(unsigned n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::vector<std::uint64_t> masks_of(const oracle::Adj& adj) {
  std::vector<std::uint64_t> m(adj.size(), 0);
  for (unsigned v = 0; v < adj.size(); ++v) {
    for (unsigned u : adj[v]) m[v] |= std::uint64_t{1} << u;
  }
  return m;
}

bool mask_connected(const std::vector<std::uint64_t>& nb, std::uint64_t s) {
  if (s == 0) return false;
  std::uint64_t seen = s & (~s + 1), frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= nb[__builtin_ctzll(f)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

// -- criterion 1 ------------------------------------------------------------

void exact_counts(Outcome& out) {
  bool paths = true, stars = true;
  for (std::size_t n = 1; n <= 14; ++n) {
    mpz_class expect = mpz_class(static_cast<unsigned long>(n * n + n)) / 2;
    Graph p = build(family::Path{n});
    paths = paths && census_bruteforce(p).count == expect && census_rooted(p).count == expect &&
            census_ring(*chain_for(family::Path{n})).count == expect;
    if (n >= 2) {
      mpz_class s = (mpz_class(1) << (n - 1)) + static_cast<unsigned long>(n - 1);
      Graph st = build(family::Star{n});
      stars = stars && census_bruteforce(st).count == s && census_rooted(st).count == s;
    }
  }
  out.require(paths, "N(P_n) = (n^2+n)/2 for n = 1..14 (brute, rooted, ring)");
  out.require(stars, "N(K_1,n-1) = 2^(n-1)+n-1 for n = 2..14 (brute, rooted)");
  Graph p4 = build(family::Prism{4});
  mpz_class b = census_bruteforce(p4).count, r = census_rooted(p4).count,
            g = census_ring(*chain_for(family::Prism{4})).count;
  out.require(b == 167 && r == 167 && g == 167, "N(prism 4) = 167 by all three engines");
}

// -- criterion 2 ------------------------------------------------------------

void engine_agreement(Outcome& out) {
  std::vector<FamilySpec> specs;
  for (std::size_t n = 3; n <= 6; ++n) specs.push_back(family::Prism{n});
  for (std::size_t n = 2; n <= 5; ++n) specs.push_back(family::CrissCross{n});
  for (std::size_t m = 1; m <= 3; ++m) specs.push_back(family::HexChain{m});
  for (std::size_t n = 4; n <= 12; ++n) specs.push_back(family::Cycle{n});
  std::size_t agree = 0;
  for (const FamilySpec& spec : specs) {
    Graph g = build(spec);
    SetCensus b = census_bruteforce(g), r = census_rooted(g), d = census_ring(*chain_for(spec));
    bool ok = b == r && r == d;
    if (g.order() <= 16) {
      oracle::Census o = oracle::subsets(static_cast<unsigned>(g.order()), edges_of(g));
      ok = ok && o.count == b.count && o.total == b.total_order;
    }
    if (ok) ++agree;
    else out.require(false, name_of(spec) + ": engines disagree");
  }
  out.require(agree == specs.size(), std::to_string(agree) + "/" + std::to_string(specs.size()) +
                                         " graphs with identical count and total order");
}

// -- criterion 3 ------------------------------------------------------------

void formula_audit(Outcome& out) {
  std::map<std::size_t, SetCensus> oracle_census;
  for (std::size_t n = 3; n <= 5; ++n) oracle_census[n] = census_bruteforce(build(family::CrissCross{n}));
  bool any_mismatch = false;
  for (std::size_t n = 3; n <= 5; ++n) {
    mpq_class published = crisscross_count_published(n);
    bool same = published == mpq_class(oracle_census[n].count);
    any_mismatch = any_mismatch || !same;
    out.notes.push_back("      n=" + std::to_string(n) + ": published " + published.get_str() + ", oracle " +
                        oracle_census[n].count.get_str() + (same ? " (equal)" : " (differs)"));
  }

  // Solve N(n) - 7^n = a n 7^(n-2) + b n from n = 3, 4 by hand.
  auto rhs = [&](std::size_t n) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 7, n);
    return mpq_class(oracle_census[n].count - p);
  };
  auto p7 = [](std::size_t e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 7, e);
    return mpq_class(p);
  };
  // [3*7, 3; 4*49, 4] [a; b] = [r3; r4]
  mpq_class m11 = 3 * p7(1), m12 = 3, m21 = 4 * p7(2), m22 = 4;
  mpq_class det = m11 * m22 - m12 * m21;
  mpq_class a = (rhs(3) * m22 - m12 * rhs(4)) / det;
  mpq_class b = (m11 * rhs(4) - m21 * rhs(3)) / det;
  a.canonicalize();
  b.canonicalize();
  const CrissCrossFit& fit = crisscross_fit();
  out.require(a == fit.count_lin && b == fit.count_const,
              "constants refitted from oracle counts: " + a.get_str() + ", " + b.get_str() +
                  " (library ships " + fit.count_lin.get_str() + ", " + fit.count_const.get_str() + ")");
  bool n5 = fit.count(5) == oracle_census[5].count;
  out.require(n5, "fitted count at n=5 equals the brute-force count");
  bool later = true;
  for (std::size_t n : {6u, 7u, 8u}) {
    SetCensus ring = census_ring(*chain_for(family::CrissCross{n}));
    later = later && fit.count(n) == ring.count && fit.total_order(n) == mpq_class(ring.total_order);
  }
  out.require(later, "fitted count and total order equal ring DP at n = 6, 7, 8");
  out.require(any_mismatch ? b != mpq_class(-16, 3) : a == mpq_class(191, 3) && b == mpq_class(-16, 3),
              any_mismatch ? "published form disagrees and the disagreement is reported with corrected constants"
                           : "published form agrees with the oracle");
}

// -- criterion 4 ------------------------------------------------------------

void growth_limits(Outcome& out) {
  const double prism_limit = std::sqrt(1 + std::sqrt(2.0)) / 2;
  long double c200 = growth_from_count(prism_count(200), 400);
  long double c200_ring = census_ring(*chain_for(family::Prism{200})).growth;
  out.require(std::abs(static_cast<double>(c200 - c200_ring)) < 1e-15, "prism 200: closed form and ring DP agree");
  double d1 = std::abs(static_cast<double>(c200) - 0.776887);
  out.require(d1 <= 1e-3, "c(prism 200) = " + fmt("%.6f", static_cast<double>(c200)) + ", limit " +
                               fmt("%.6f", prism_limit) + ", |diff| " + fmt("%.3g", d1) + " (tolerance 1e-3)");

  long double cc40 = growth_from_count(crisscross_count_validated(40), 160);
  long double cc40_ring = census_ring(*chain_for(family::CrissCross{40})).growth;
  out.require(std::abs(static_cast<double>(cc40 - cc40_ring)) < 1e-15,
              "criss-cross 40: fitted form and ring DP agree");
  double d2 = std::abs(static_cast<double>(cc40) - 0.813325);
  out.require(d2 <= 1e-2, "c(criss-cross 40) = " + fmt("%.6f", static_cast<double>(cc40)) + ", target 0.813325" +
                               " (7^(1/4)/2 = " + fmt("%.6f", std::pow(7.0, 0.25) / 2) + "), |diff| " +
                               fmt("%.3g", d2) + " (tolerance 1e-2)");
}

// -- criterion 5 ------------------------------------------------------------

void bound_constants(Outcome& out) {
  RootPair r3 = solve_yd(3);
  long double y = r3.y.value;
  long double residual = std::abs(16 * std::pow(y, 5.0L) - 8 * std::pow(y, 4.0L) + 1 - 8);
  out.require(residual <= 1e-9L, "y_3 = " + fmt("%.10f", static_cast<double>(y)) + ", residual " +
                                     fmt("%.3g", static_cast<double>(residual)));
  out.require(y < 0.9781L, "y_3 < 0.9781");

  long double a = solve_alpha(std::pow(2.0L, -0.75L));
  long double h = -a * std::log2(a) - (1 - a) * std::log2(1 - a);
  out.require(std::abs(h - 0.25L) < 1e-9L && a < 0.95831L,
              "alpha(2^-3/4) = " + fmt("%.8f", static_cast<double>(a)) + " < 0.95831 (h(alpha) = 1/4)");

  bool products = true;
  for (unsigned d = 2; d <= 8; ++d) {
    RootPair r = solve_yd(d);
    products = products && std::abs(static_cast<double>(r.y.value * r.z.value) - 1) <= 1e-8;
  }
  out.require(products, "y_d z_d = 1 within 1e-8 for d = 2..8");
}

// -- criterion 6 ------------------------------------------------------------

void binomial_lemma(Outcome& out) {
  std::size_t cases = 0, count_ok = 0, avg_ok = 0, exact_ok = 0;
  for (unsigned n = 1; n <= 60; ++n) {
    for (unsigned num = 55; num <= 95; num += 5) {
      if (num * n <= 50 * n) continue;
      ++cases;
      auto [count, avg] = oracle::binomial_tail(n, num, 100);
      BinomialTail lib = binomial_tail_stats(n, mpq_class(num, 100));
      if (lib.exact_count == count && lib.exact_average == avg) ++exact_ok;
      long double a = num / 100.0L;
      long double h = -a * std::log2(a) - (1 - a) * std::log2(1 - a);
      long double count_bound = a / (2 * a - 1) * std::exp2(n * h);
      long double avg_bound = a * n + 1 + a * (1 - a) / ((2 * a - 1) * (2 * a - 1));
      mpf_class exact_c(count, 256), exact_a(avg, 256);
      if (exact_c.get_d() <= static_cast<double>(count_bound)) ++count_ok;
      if (exact_a.get_d() <= static_cast<double>(avg_bound)) ++avg_ok;
    }
  }
  out.require(exact_ok == cases, "library tails equal Pascal-row sums in " + std::to_string(exact_ok) + "/" +
                                     std::to_string(cases) + " cases");
  out.require(count_ok == cases, "count bound holds in " + std::to_string(count_ok) + "/" + std::to_string(cases));
  out.require(avg_ok == cases, "average bound holds in " + std::to_string(avg_ok) + "/" + std::to_string(cases));
}

// -- criterion 7 ------------------------------------------------------------

void process_machinery(Outcome& out) {
  const char* dists[] = {"0:1/4,1:1/2,2:1/4", "0:1/3,1:1/3,3:1/3", "0:1/16,1:1/2,5:7/16"};
  bool tree = true;
  for (const char* text : dists) {
    StepDistribution d = StepDistribution::parse(text);
    std::vector<std::pair<unsigned, mpq_class>> plain;
    for (const auto& [x, p] : d.support()) plain.emplace_back(static_cast<unsigned>(x), p);
    auto p = exact_pn(d, 6);
    for (unsigned n = 0; n <= 6; ++n) tree = tree && p[n] == oracle::hitting(plain, n);
  }
  out.require(tree, "exact p_n equals process-tree enumeration for n <= 6 on three distributions");

  bool mc = true;
  for (const char* text : dists) {
    StepDistribution d = StepDistribution::parse(text);
    auto p = exact_pn(d, 10);
    for (std::size_t n : {2u, 5u, 10u}) {
      MonteCarlo m = simulate_process(d, n, 200000, 17 * n + 1);
      double e = p[n].get_d();
      double sigma = std::sqrt(e * (1 - e) / 200000);
      mc = mc && std::abs(m.estimate - e) <= 3 * sigma;
    }
  }
  out.require(mc, "Monte Carlo within 3 sigma at n = 2, 5, 10 (2e5 trials each)");

  bool envelope = true;
  long double worst = 0;
  for (unsigned d = 2; d <= 5; ++d) {
    StepDistribution w = worst_case_distribution(d);
    long double z = solve_z(w);
    auto p = exact_pn(w, 500);
    const std::size_t r = w.max_value();
    long double c1 = 1e300L, c2 = 0;
    for (std::size_t i = 0; i < r; ++i) {
      long double q = std::pow(z, static_cast<long double>(i)) * static_cast<long double>(p[i].get_d());
      c1 = std::min(c1, q);
      c2 = std::max(c2, q);
    }
    for (std::size_t n = 0; n <= 500; ++n) {
      mpf_class pf(p[n], 256);
      long double q = std::pow(z, static_cast<long double>(n)) * static_cast<long double>(pf.get_d());
      long double excess = std::max(c1 - q, q - c2);
      worst = std::max(worst, excess);
      envelope = envelope && q >= c1 - 1e-8L && q <= c2 + 1e-8L;
    }
  }
  out.require(envelope, "q_n in [c1 - 1e-8, c2 + 1e-8] for n <= 500, d = 2..5 (largest excess " +
                            fmt("%.3g", static_cast<double>(std::max(worst, 0.0L))) + ")");
}

// -- criteria 8 and 9 -------------------------------------------------------

struct StrategyGraph {
  std::string name;
  unsigned n;
  oracle::Edges edges;
};

std::vector<StrategyGraph> strategy_graphs() {
  std::vector<StrategyGraph> gs;
  gs.push_back({"franklin (LCF)", 12, franklin_lcf()});
  for (std::size_t n = 5; n <= 8; ++n) {
    gs.push_back({"prism:" + std::to_string(n), static_cast<unsigned>(2 * n), edges_of(build(family::Prism{n}))});
  }
  gs.push_back({"crisscross:3", 12, edges_of(build(family::CrissCross{3}))});
  gs.push_back({"hexchain:2", 12, edges_of(build(family::HexChain{2}))});
  return gs;
}

struct Stage {
  std::string history;  // revelations before the stage began
  unsigned gain;
};

// The strategy as in oracle::strategy_succeeds, recording each stage's gain
// together with everything revealed before that stage.
bool staged_run(const oracle::Adj& adj, std::uint64_t in, std::vector<Stage>& stages) {
  const unsigned n = static_cast<unsigned>(adj.size());
  std::vector<char> safe(n, 0), revealed(n, 0);
  unsigned safe_count = 0;
  std::string history;
  auto mark = [&](unsigned v) {
    if (!safe[v]) {
      safe[v] = 1;
      ++safe_count;
    }
  };
  auto reveal = [&](unsigned v) {
    revealed[v] = 1;
    history += std::to_string(v) + ((in >> v & 1) ? "+" : "-");
    return (in >> v & 1) != 0;
  };
  stages.clear();
  while (safe_count < n) {
    int pick = -1;
    for (unsigned v = 0; v < n && pick < 0; ++v) {
      if (safe[v]) continue;
      for (unsigned u : adj[v]) {
        if (safe[u]) {
          pick = static_cast<int>(v);
          break;
        }
      }
    }
    for (unsigned v = 0; v < n && pick < 0; ++v) {
      if (!safe[v]) pick = static_cast<int>(v);
    }
    unsigned v = static_cast<unsigned>(pick);
    std::string before = history;
    unsigned start = safe_count;
    std::vector<unsigned> ws;
    for (unsigned u : adj[v]) {
      if (!revealed[u]) ws.push_back(u);
    }
    if (!reveal(v)) {
      mark(v);
      stages.push_back({before, safe_count - start});
      continue;
    }
    std::vector<char> saved = safe;
    unsigned saved_count = safe_count;
    for (unsigned u : adj[v]) mark(u);
    bool rescued = false;
    for (unsigned w : ws) {
      if (reveal(w)) {
        for (unsigned u : adj[w]) mark(u);
        rescued = true;
        break;
      }
    }
    if (!rescued) {
      safe = saved;
      safe_count = saved_count;
      stages.push_back({before, 0});
      return false;
    }
    stages.push_back({before, safe_count - start});
  }
  return true;
}

void strategy_soundness(Outcome& out) {
  for (const StrategyGraph& sg : strategy_graphs()) {
    oracle::Adj adj = oracle::adjacency(sg.n, sg.edges);
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<std::uint64_t> nb = masks_of(adj);
    mpz_class connected = 0, no_isolated = 0, wins = 0;
    for (std::uint64_t s = 0; s <= full(sg.n); ++s) {
      if (mask_connected(nb, s)) connected += 1;
      bool iso = false;
      for (std::uint64_t t = s; t; t &= t - 1) iso = iso || (nb[__builtin_ctzll(t)] & s) == 0;
      if (!iso) no_isolated += 1;
      if (oracle::strategy_succeeds(sg.n, sg.edges, s)) wins += 1;
    }
    Graph g = graph_of(sg.n, sg.edges);
    mpq_class lib = strategy_success_exact(g);
    mpz_class denom = mpz_class(1) << sg.n;
    mpq_class pc(connected, denom), pi(no_isolated, denom), ps(wins, denom);
    pc.canonicalize();
    pi.canonicalize();
    ps.canonicalize();
    bool chain = pc <= pi && pi <= ps && lib == ps;
    out.require(chain, sg.name + ": " + pc.get_str() + " <= " + pi.get_str() + " <= " + ps.get_str() +
                           (lib == ps ? "" : " (library reports " + lib.get_str() + ")"));
  }
}

void stochastic_dominance(Outcome& out) {
  for (const StrategyGraph& sg : strategy_graphs()) {
    oracle::Adj adj = oracle::adjacency(sg.n, sg.edges);
    for (auto& a : adj) std::sort(a.begin(), a.end());
    unsigned d = 2;
    for (const auto& a : adj) d = std::max<unsigned>(d, static_cast<unsigned>(a.size()));

    // history -> gain -> number of membership vectors
    std::map<std::string, std::map<unsigned, std::uint64_t>> tally;
    std::vector<Stage> stages;
    for (std::uint64_t s = 0; s <= full(sg.n); ++s) {
      staged_run(adj, s, stages);
      for (std::size_t i = 1; i < stages.size(); ++i) ++tally[stages[i].history][stages[i].gain];
    }
    // worst case: P(W <= t) = p0 for t < 1, p0 + 1/2 for 1 <= t < 2d-1, then 1
    const std::uint64_t den = std::uint64_t{1} << (d + 1);
    const std::uint64_t w0 = 1, w1 = 1 + den / 2;
    std::size_t violations = 0;
    unsigned max_gain = 0;
    for (const auto& [history, gains] : tally) {
      std::uint64_t total = 0;
      for (const auto& [g, c] : gains) total += c;
      for (unsigned t = 0; t <= 2 * d; ++t) {
        std::uint64_t le = 0;
        for (const auto& [g, c] : gains) {
          if (g <= t) le += c;
          max_gain = std::max(max_gain, g);
        }
        std::uint64_t w = t == 0 ? w0 : (t < 2 * d - 1 ? w1 : den);
        // le / total >= w / den
        if (static_cast<unsigned __int128>(le) * den < static_cast<unsigned __int128>(w) * total) {
          ++violations;
          break;
        }
      }
    }
    DominanceReport lib = stochastic_dominance_check(graph_of(sg.n, sg.edges));
    out.require(violations == 0 && lib.pass(),
                sg.name + ": " + std::to_string(tally.size()) + " histories, " + std::to_string(violations) +
                    " violations (library walk: " + std::to_string(lib.histories) + " histories, " +
                    std::to_string(lib.violations) + " violations), d = " + std::to_string(d) +
                    ", max later gain " + std::to_string(max_gain));
  }
}

// -- criterion 10 -----------------------------------------------------------

std::size_t leaf_count(unsigned n, const EdgeList& tree) {
  std::vector<unsigned> deg(n, 0);
  for (auto [u, v] : tree) {
    ++deg[u];
    ++deg[v];
  }
  std::size_t leaves = 0;
  for (unsigned x : deg) leaves += x == 1;
  return leaves;
}

bool spanning_tree_of(const Graph& g, const EdgeList& tree) {
  const unsigned n = static_cast<unsigned>(g.order());
  if (tree.size() + 1 != n) return false;
  for (auto [u, v] : tree) {
    if (!g.adjacent(u, v)) return false;
  }
  oracle::Edges e(tree.begin(), tree.end());
  return mask_connected(masks_of(oracle::adjacency(n, e)), full(n));
}

// Best leaf count over all (n-1)-edge subsets forming a spanning tree.
std::size_t best_leaves_by_edges(unsigned n, const oracle::Edges& edges) {
  const std::size_t m = edges.size();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    if (static_cast<unsigned>(__builtin_popcountll(s)) + 1 != n) continue;
    oracle::Edges pick;
    for (std::size_t i = 0; i < m; ++i) {
      if (s >> i & 1) pick.push_back(edges[i]);
    }
    if (!mask_connected(masks_of(oracle::adjacency(n, pick)), full(n))) continue;
    EdgeList t(pick.begin(), pick.end());
    best = std::max(best, leaf_count(n, t));
  }
  return best;
}

// Every superset of the internal vertices is connected, by flood fill.
bool supersets_connected(unsigned n, const oracle::Edges& edges, const VertexSet& internal) {
  std::vector<std::uint64_t> nb = masks_of(oracle::adjacency(n, edges));
  std::uint64_t base = internal.to_mask();
  std::uint64_t rest = full(n) & ~base;
  for (std::uint64_t extra = rest;; extra = (extra - 1) & rest) {
    std::uint64_t s = base | extra;
    if (s != 0 && !mask_connected(nb, s)) return false;
    if (extra == 0) break;
  }
  return true;
}

bool no_degree_two(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) return false;
  }
  return true;
}

// Random tree without degree-2 vertices (rejection sampling).
oracle::Edges series_reduced_tree(unsigned n, std::mt19937_64& rng) {
  for (;;) {
    oracle::Edges e = oracle::random_tree(n, rng());
    std::vector<unsigned> deg(n, 0);
    for (auto [u, v] : e) {
      ++deg[u];
      ++deg[v];
    }
    if (std::none_of(deg.begin(), deg.end(), [](unsigned x) { return x == 2; })) return e;
  }
}

oracle::Edges random_sparse(unsigned n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    oracle::Edges e;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) {
        if (coin(rng)) e.emplace_back(i, j);
      }
    }
    Graph g = graph_of(n, e);
    if (is_connected(g) && no_degree_two(g)) return e;
  }
}

std::vector<std::pair<std::string, Graph>> degree2_free(std::size_t max_n, std::uint64_t seed) {
  std::vector<std::pair<std::string, Graph>> out;
  auto add = [&](const FamilySpec& s) {
    Graph g = build(s);
    if (g.order() <= max_n && g.order() >= 2 && no_degree_two(g)) out.emplace_back(to_string(s), g);
  };
  for (std::size_t n = 3; n <= 8; ++n) add(family::Prism{n});
  for (std::size_t n = 2; n <= 4; ++n) add(family::CrissCross{n});
  for (std::size_t m = 1; m <= 2; ++m) add(family::HexChain{m});
  for (std::size_t n = 2; n <= 16; ++n) add(family::Complete{n});
  for (std::size_t n = 4; n <= 16; ++n) add(family::Star{n});
  for (std::size_t n = 5; n <= 16; ++n) {
    for (std::size_t k = 2; 2 * k < n; ++k) add(family::CirculantPower{n, k});
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::size_t k = 1; 2 * k < n; ++k) add(family::CirculantPrism{n, k});
  }
  out.emplace_back("franklin (LCF)", graph_of(12, franklin_lcf()));
  std::mt19937_64 rng(seed);
  for (unsigned n = 4; n <= max_n; n += 2) {
    for (std::uint64_t s = 0; s < 2; ++s) {
      out.emplace_back("cubic:" + std::to_string(n), graph_of(n, oracle::random_regular(n, 3, rng())));
    }
  }
  for (unsigned n = 4; n <= max_n; ++n) {
    out.emplace_back("sparse:" + std::to_string(n), graph_of(n, random_sparse(n, 0.35, rng)));
    out.emplace_back("tree:" + std::to_string(n), graph_of(n, series_reduced_tree(n, rng)));
  }
  return out;
}

void leafy_trees(Outcome& out) {
  std::size_t graphs = 0, meets = 0, cross_checked = 0, optimal = 0, closed = 0;
  for (const auto& [name, g] : degree2_free(12, 0xacce55)) {
    if (g.order() < 3) continue;
    ++graphs;
    const unsigned n = static_cast<unsigned>(g.order());
    LeafyTree t = max_leaf_spanning_tree_exact(g);
    DegreeProfile p = degree_profile(g);
    std::size_t leaves = leaf_count(n, t.edges);
    bool valid = spanning_tree_of(g, t.edges) && leaves == t.leaf_count;
    if (valid && leaves >= karpov_leaf_bound(p.degree1or3, p.degree4plus)) ++meets;
    else out.require(false, name + ": " + std::to_string(leaves) + " leaves, bound " +
                                std::to_string(karpov_leaf_bound(p.degree1or3, p.degree4plus)));
    oracle::Edges e = edges_of(g);
    if (e.size() <= 20) {
      ++cross_checked;
      if (best_leaves_by_edges(n, e) == leaves) ++optimal;
      else out.require(false, name + ": exact search is not optimal");
    }
    if (supersets_connected(n, e, t.internal)) ++closed;
    else out.require(false, name + ": a superset of the internal vertices is disconnected");
  }
  out.require(meets == graphs, "exact max-leaf tree meets the Karpov bound on " + std::to_string(meets) + "/" +
                                   std::to_string(graphs) + " degree-2-free graphs with n <= 12");
  out.require(optimal == cross_checked, "exact search matches all-spanning-trees enumeration on " +
                                            std::to_string(optimal) + "/" + std::to_string(cross_checked) +
                                            " graphs with <= 20 edges");

  bool hex = true, hex_closed = true, hex_count = true;
  for (std::size_t m = 1; m <= 6; ++m) {
    Graph h = build(family::HexChain{m});
    LeafyTree t = spanning_tree_hexchain(h);
    const unsigned n = static_cast<unsigned>(6 * m);
    std::size_t leaves = leaf_count(n, t.edges);
    hex = hex && spanning_tree_of(h, t.edges) && leaves == n / 2 + 2;
    hex_closed = hex_closed && supersets_connected(n, edges_of(h), t.internal);
    mpz_class count = m <= 3 ? census_bruteforce(h).count : census_ring(*chain_for(family::HexChain{m})).count;
    hex_count = hex_count && count >= (mpz_class(1) << leaves);
  }
  out.require(hex, "explicit hexchain tree has exactly n/2+2 leaves for m = 1..6");
  out.require(hex_closed && closed == graphs,
              "every superset of the internal vertices is connected (exhaustive, up to 2^20 supersets)");
  out.require(hex_count, "N(G) >= 2^leaves on the hexchain graphs");
}

// -- criterion 11 -----------------------------------------------------------

void density_targets(Outcome& out) {
  mpq_class dh = census_ring(*chain_for(family::HexChain{10})).density;
  double diff_h = std::abs(dh.get_d() - 41.0 / 54);
  out.require(diff_h <= 1e-2, "D(hexchain 10) = " + fmt("%.6f", dh.get_d()) + ", target 41/54 = " +
                                  fmt("%.6f", 41.0 / 54) + ", |diff| " + fmt("%.3g", diff_h) + " (tolerance 1e-2)");
  mpq_class dc = census_ring(*chain_for(family::CrissCross{50})).density;
  out.require(dc == crisscross_density_validated(50), "D(criss-cross 50): ring DP equals the fitted form");
  double diff_c = std::abs(dc.get_d() - 5.0 / 7);
  out.require(diff_c <= 1e-2, "D(criss-cross 50) = " + fmt("%.6f", dc.get_d()) + ", target 5/7 = " +
                                  fmt("%.6f", 5.0 / 7) + ", |diff| " + fmt("%.3g", diff_c) + " (tolerance 1e-2)");

  std::size_t graphs = 0, below = 0;
  double highest = 0;
  std::string argmax;
  for (const auto& [name, g] : degree2_free(16, 0xd2f7ee)) {
    ++graphs;
    oracle::Census o = oracle::subsets(static_cast<unsigned>(g.order()), edges_of(g));
    mpq_class d(o.total, o.count * static_cast<unsigned long>(g.order()));
    d.canonicalize();
    if (d.get_d() > highest) {
      highest = d.get_d();
      argmax = name;
    }
    if (d < mpq_class(95831, 100000)) ++below;
  }
  out.require(below == graphs, "D < 0.95831 on " + std::to_string(below) + "/" + std::to_string(graphs) +
                                   " degree-2-free graphs with n <= 16 (largest " + fmt("%.6f", highest) +
                                   " on " + argmax + ")");
}

// -- criterion 12 -----------------------------------------------------------

void asymptotic_trend(Outcome& out) {
  long double prev = 1;
  bool decreasing = true;
  std::string values;
  for (std::size_t k : {16u, 64u, 256u, 1024u}) {
    long double u = min_degree_density_bounds(k).upper;
    decreasing = decreasing && u < prev && u > 0.5L;
    values += (values.empty() ? "" : ", ") + fmt("%.6f", static_cast<double>(u));
    prev = u;
  }
  out.require(decreasing, "upper bound " + values + " strictly decreasing above 1/2");

  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{24, 4}, {30, 5}}) {
    Graph g = build(family::CirculantPower{n, k});
    SetCensus c = census_rooted(g);
    std::size_t dom = (n + k - 1) / k;
    long double bound = std::exp2(static_cast<long double>(n - dom) / n - 1);
    out.require(c.growth > bound, "c(C_" + std::to_string(n) + "^" + std::to_string(k) + ") = " +
                                      fmt("%.6f", static_cast<double>(c.growth)) + " > " +
                                      fmt("%.6f", static_cast<double>(bound)));
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "exact counts against closed forms", 1, exact_counts},
      {2, "engine agreement", 60, engine_agreement},
      {3, "criss-cross formula audit", 120, formula_audit},
      {4, "growth limits", 60, growth_limits},
      {5, "bound constants", 1, bound_constants},
      {6, "binomial tail lemma", 10, binomial_lemma},
      {7, "hitting process machinery", 60, process_machinery},
      {8, "strategy soundness", 300, strategy_soundness},
      {9, "stochastic dominance", 300, stochastic_dominance},
      {10, "leafy spanning trees", 300, leafy_trees},
      {11, "density targets", 300, density_targets},
      {12, "asymptotic trend", 300, asymptotic_trend},
  };

  std::map<int, bool> verdict;
  int passed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs <= c.budget_seconds, "runtime " + fmt("%.2f", secs) + " s within " +
                                              fmt("%g", c.budget_seconds) + " s");
    verdict[c.id] = out.pass;
    passed += out.pass;
    std::printf("%s  criterion %d: %s\n", out.pass ? "PASS" : "FAIL", c.id, c.title.c_str());
    for (const std::string& note : out.notes) std::printf("        %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", passed, criteria.size());

  SuiteReport suite = run_suite();
  int agree = 0;
  for (const ClaimResult& r : suite.claims) agree += r.pass() == verdict[r.id];
  std::printf("library suite agrees on %d/%d verdicts\n", agree, kClaimCount);
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
