#include "connset.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "connset/bounds.hpp"
#include "connset/census.hpp"
#include "connset/error.hpp"
#include "connset/families.hpp"
#include "connset/graph.hpp"
#include "connset/leafy_tree.hpp"
#include "connset/revelation.hpp"
#include "connset/sweep.hpp"
#include "connset/verify.hpp"

using namespace connset;

struct cs_graph {
  Graph graph;
  std::optional<FamilySpec> family;
  std::string family_text;
};

struct cs_census {
  SetCensus census;
  std::string count, total, average, density, growth;
  Engine engine;
};

struct cs_dist {
  StepDistribution dist;
  std::string text;
};

struct cs_process {
  ProcessResult result;
  std::vector<std::string> p;
};

struct cs_tree {
  LeafyTree tree;
};

struct cs_report {
  SuiteReport report;
  std::string text;
};

struct cs_formula {
  FormulaReport report;
};

namespace {

thread_local std::string last_error;

cs_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CS_INVALID_ARGUMENT;
    case ErrorCode::Parse: return CS_PARSE_ERROR;
    case ErrorCode::TooLarge: return CS_TOO_LARGE;
    case ErrorCode::BudgetExceeded: return CS_BUDGET_EXCEEDED;
    case ErrorCode::VerificationMismatch: return CS_VERIFICATION_MISMATCH;
    case ErrorCode::Counterexample: return CS_COUNTEREXAMPLE;
    case ErrorCode::Io: return CS_IO_ERROR;
  }
  return CS_INTERNAL_ERROR;
}

template <typename Fn>
cs_status guarded(Fn&& fn) {
  try {
    fn();
    return CS_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CS_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CS_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Engine engine_or_auto(const char* name) { return name ? parse_engine(name) : Engine::Auto; }

const ClaimResult* claim_at(const cs_report* r, size_t i) {
  return r && i < r->report.claims.size() ? &r->report.claims[i] : nullptr;
}

const Check* check_at(const cs_report* r, size_t i, size_t j) {
  const ClaimResult* c = claim_at(r, i);
  return c && j < c->checks.size() ? &c->checks[j] : nullptr;
}

}  // namespace

extern "C" {

const char* cs_last_error(void) { return last_error.c_str(); }

const char* cs_version(void) { return "0.1.0"; }

const char* cs_status_name(cs_status status) {
  switch (status) {
    case CS_OK: return "ok";
    case CS_INVALID_ARGUMENT: return "invalid argument";
    case CS_PARSE_ERROR: return "parse error";
    case CS_TOO_LARGE: return "graph too large";
    case CS_BUDGET_EXCEEDED: return "budget exceeded";
    case CS_VERIFICATION_MISMATCH: return "verification mismatch";
    case CS_COUNTEREXAMPLE: return "counterexample";
    case CS_IO_ERROR: return "i/o error";
    case CS_INTERNAL_ERROR: return "internal error";
  }
  return "unknown";
}

void cs_string_free(char* s) { std::free(s); }

cs_status cs_graph_from_family(const char* spec, cs_graph** out) {
  return guarded([&] {
    need(spec, "family spec");
    need(out, "out");
    FamilySpec f = parse_family(spec);
    *out = new cs_graph{build(f), f, to_string(f)};
  });
}

cs_status cs_graph_from_file(const char* path, cs_graph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new cs_graph{read_edge_list_file(path), std::nullopt, {}};
  });
}

cs_status cs_graph_from_text(const char* edge_list, cs_graph** out) {
  return guarded([&] {
    need(edge_list, "edge list");
    need(out, "out");
    *out = new cs_graph{parse_edge_list_text(edge_list), std::nullopt, {}};
  });
}

void cs_graph_free(cs_graph* g) { delete g; }
size_t cs_graph_order(const cs_graph* g) { return g ? g->graph.order() : 0; }
size_t cs_graph_size(const cs_graph* g) { return g ? g->graph.size() : 0; }
const char* cs_graph_family(const cs_graph* g) { return g && g->family ? g->family_text.c_str() : nullptr; }

size_t cs_graph_max_degree(const cs_graph* g) {
  return g && g->graph.order() ? degree_profile(g->graph).max_degree : 0;
}

void cs_graph_degree_counts(const cs_graph* g, size_t* deg1or3, size_t* deg2, size_t* deg4plus) {
  DegreeProfile p = g && g->graph.order() ? degree_profile(g->graph) : DegreeProfile{};
  if (deg1or3) *deg1or3 = p.degree1or3;
  if (deg2) *deg2 = p.degree2;
  if (deg4plus) *deg4plus = p.degree4plus;
}

cs_status cs_census_run(const cs_graph* g, const char* engine, unsigned threads, cs_census** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    CensusOptions opt;
    opt.threads = threads;
    Engine e = resolve_engine(g->graph, engine_or_auto(engine), g->family);
    SetCensus c = census(g->graph, e, g->family, opt);
    *out = new cs_census{c,
                         c.count.get_str(),
                         c.total_order.get_str(),
                         fraction_string(c.average),
                         fraction_string(c.density),
                         format_growth(c.growth),
                         e};
  });
}

void cs_census_free(cs_census* c) { delete c; }
size_t cs_census_order(const cs_census* c) { return c ? c->census.order : 0; }
const char* cs_census_count(const cs_census* c) { return c ? c->count.c_str() : nullptr; }
const char* cs_census_total_order(const cs_census* c) { return c ? c->total.c_str() : nullptr; }
const char* cs_census_average(const cs_census* c) { return c ? c->average.c_str() : nullptr; }
const char* cs_census_density(const cs_census* c) { return c ? c->density.c_str() : nullptr; }
double cs_census_density_value(const cs_census* c) { return c ? c->census.density.get_d() : 0; }
double cs_census_growth(const cs_census* c) { return c ? static_cast<double>(c->census.growth) : 0; }
const char* cs_census_growth_text(const cs_census* c) { return c ? c->growth.c_str() : nullptr; }
const char* cs_census_engine(const cs_census* c) { return c ? engine_name(c->engine) : nullptr; }

cs_status cs_connectivity_odds(const cs_graph* g, unsigned threads, char** p_connected, char** p_no_isolated) {
  return guarded([&] {
    need(g, "graph");
    CensusOptions opt;
    opt.threads = threads;
    ConnectivityOdds odds = connected_vs_isolated(g->graph, opt);
    if (p_connected) *p_connected = dup(fraction_string(odds.p_connected));
    if (p_no_isolated) *p_no_isolated = dup(fraction_string(odds.p_no_isolated));
  });
}

cs_status cs_formula_run(const cs_graph* g, const char* engine, unsigned threads, cs_formula** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    if (!g->family) throw Error(ErrorCode::InvalidArgument, "closed forms need a named family, not an edge list");
    CensusOptions opt;
    opt.threads = threads;
    *out = new cs_formula{formula_report(*g->family, engine_or_auto(engine), opt)};
  });
}

void cs_formula_free(cs_formula* f) { delete f; }
const char* cs_formula_oracle_count(const cs_formula* f) { return f ? f->report.oracle_count.c_str() : nullptr; }
const char* cs_formula_oracle_density(const cs_formula* f) { return f ? f->report.oracle_density.c_str() : nullptr; }
const char* cs_formula_engine(const cs_formula* f) { return f ? engine_name(f->report.engine) : nullptr; }
size_t cs_formula_lines(const cs_formula* f) { return f ? f->report.lines.size() : 0; }

const char* cs_formula_line_name(const cs_formula* f, size_t i) {
  return f && i < f->report.lines.size() ? f->report.lines[i].name.c_str() : nullptr;
}

const char* cs_formula_line_value(const cs_formula* f, size_t i) {
  return f && i < f->report.lines.size() ? f->report.lines[i].value.c_str() : nullptr;
}

int cs_formula_line_matches(const cs_formula* f, size_t i) {
  return f && i < f->report.lines.size() && f->report.lines[i].matches;
}

int cs_formula_consistent(const cs_formula* f) { return f && f->report.consistent(); }

cs_status cs_solve_yd(unsigned d, double* y, double* z, double* residual_y, double* residual_z) {
  return guarded([&] {
    RootPair r = solve_yd(d);
    if (y) *y = static_cast<double>(r.y.value);
    if (z) *z = static_cast<double>(r.z.value);
    if (residual_y) *residual_y = static_cast<double>(r.y.residual);
    if (residual_z) *residual_z = static_cast<double>(r.z.residual);
  });
}

cs_status cs_solve_alpha(double c, double* alpha, double* residual) {
  return guarded([&] {
    BoundReport r = solve_alpha_report(c);
    if (alpha) *alpha = static_cast<double>(r.value);
    if (residual) *residual = static_cast<double>(r.residual);
  });
}

cs_status cs_crisscross_growth_limit(double* value) {
  return guarded([&] {
    need(value, "value");
    *value = static_cast<double>(crisscross_growth_limit());
  });
}

cs_status cs_prism_growth_limit(double* value) {
  return guarded([&] {
    need(value, "value");
    *value = static_cast<double>(prism_growth_limit());
  });
}

cs_status cs_min_degree_bounds(size_t k, double* leaf_fraction, double* growth, double* upper, double* lower) {
  return guarded([&] {
    MinDegreeBounds b = min_degree_density_bounds(k);
    if (leaf_fraction) *leaf_fraction = static_cast<double>(b.leaf_fraction);
    if (growth) *growth = static_cast<double>(b.growth);
    if (upper) *upper = static_cast<double>(b.upper);
    if (lower) *lower = static_cast<double>(b.lower);
  });
}

cs_status cs_degree2_density_bound(double x, double* bound) {
  return guarded([&] {
    need(bound, "bound");
    *bound = static_cast<double>(degree2_density_bound(x));
  });
}

size_t cs_karpov_leaf_bound(size_t s, size_t t) { return karpov_leaf_bound(s, t); }

cs_status cs_growth_from_leaves(size_t leaves, size_t n, double* growth) {
  return guarded([&] {
    need(growth, "growth");
    *growth = static_cast<double>(growth_from_leaves(leaves, n));
  });
}

cs_status cs_binomial_tail(size_t n, const char* alpha, char** exact_count, double* count_bound,
                           char** exact_average, double* average_bound, int* holds) {
  return guarded([&] {
    need(alpha, "alpha");
    BinomialTail t = binomial_tail_stats(n, parse_rational(alpha));
    if (count_bound) *count_bound = static_cast<double>(t.count_bound);
    if (average_bound) *average_bound = static_cast<double>(t.average_bound);
    if (holds) *holds = t.count_holds() && t.average_holds();
    if (exact_count) *exact_count = dup(t.exact_count.get_str());
    if (exact_average) *exact_average = dup(fraction_string(t.exact_average));
  });
}

cs_status cs_dist_parse(const char* text, cs_dist** out) {
  return guarded([&] {
    need(text, "distribution");
    need(out, "out");
    StepDistribution d = StepDistribution::parse(text);
    *out = new cs_dist{d, d.to_string()};
  });
}

cs_status cs_dist_worst_case(unsigned d, cs_dist** out) {
  return guarded([&] {
    need(out, "out");
    StepDistribution dist = worst_case_distribution(d);
    *out = new cs_dist{dist, dist.to_string()};
  });
}

void cs_dist_free(cs_dist* d) { delete d; }
const char* cs_dist_text(const cs_dist* d) { return d ? d->text.c_str() : nullptr; }

cs_status cs_process_run(const cs_dist* d, size_t n_max, uint64_t trials, uint64_t seed, cs_process** out) {
  return guarded([&] {
    need(d, "distribution");
    need(out, "out");
    ProcessResult r;
    r.p = exact_pn(d->dist, n_max);
    r.q = qn_bounds_check(d->dist, n_max);
    if (trials > 0) r.monte_carlo = simulate_process(d->dist, n_max, trials, seed);
    auto* h = new cs_process{std::move(r), {}};
    for (const auto& p : h->result.p) h->p.push_back(fraction_string(p));
    *out = h;
  });
}

void cs_process_free(cs_process* p) { delete p; }
size_t cs_process_n_max(const cs_process* p) { return p ? p->p.size() - 1 : 0; }
const char* cs_process_p(const cs_process* p, size_t n) { return p && n < p->p.size() ? p->p[n].c_str() : nullptr; }
double cs_process_z(const cs_process* p) { return p ? static_cast<double>(p->result.q.z) : 0; }
double cs_process_c1(const cs_process* p) { return p ? static_cast<double>(p->result.q.c1) : 0; }
double cs_process_c2(const cs_process* p) { return p ? static_cast<double>(p->result.q.c2) : 0; }
double cs_process_worst_excess(const cs_process* p) { return p ? static_cast<double>(p->result.q.worst_excess) : 0; }
int cs_process_q_pass(const cs_process* p) { return p && p->result.q.pass; }

int cs_process_monte_carlo(const cs_process* p, double* estimate, uint64_t* trials, uint64_t* seed) {
  if (!p || !p->result.monte_carlo) return 0;
  const MonteCarlo& mc = *p->result.monte_carlo;
  if (estimate) *estimate = mc.estimate;
  if (trials) *trials = mc.trials;
  if (seed) *seed = mc.seed;
  return 1;
}

cs_status cs_strategy_exact(const cs_graph* g, unsigned threads, char** success) {
  return guarded([&] {
    need(g, "graph");
    need(success, "success");
    *success = dup(fraction_string(strategy_success_exact(g->graph, threads)));
  });
}

cs_status cs_strategy_dominance(const cs_graph* g, uint64_t* histories, uint64_t* violations, size_t* max_gain_first,
                                size_t* max_gain_later, size_t* degree) {
  return guarded([&] {
    need(g, "graph");
    DominanceReport r = stochastic_dominance_check(g->graph);
    if (histories) *histories = r.histories;
    if (violations) *violations = r.violations;
    if (max_gain_first) *max_gain_first = r.max_gain_first;
    if (max_gain_later) *max_gain_later = r.max_gain_later;
    if (degree) *degree = r.max_degree;
  });
}

cs_status cs_strategy_run(const cs_graph* g, uint64_t seed, int* success, size_t* stages) {
  return guarded([&] {
    need(g, "graph");
    StrategyTrace t = reveal_strategy_run(g->graph, seed);
    if (success) *success = t.success;
    if (stages) *stages = t.stages.size();
  });
}

cs_status cs_tree_build(const cs_graph* g, const char* method, cs_tree** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    std::string m = method ? method : "exact";
    if (m == "exact") {
      *out = new cs_tree{max_leaf_spanning_tree_exact(g->graph)};
    } else if (m == "greedy") {
      *out = new cs_tree{leafy_spanning_tree_greedy(g->graph)};
    } else if (m == "hexchain") {
      const auto* hex = g->family ? std::get_if<family::HexChain>(&*g->family) : nullptr;
      if (!hex) throw Error(ErrorCode::InvalidArgument, "the hexchain tree needs a hexchain family graph");
      *out = new cs_tree{spanning_tree_hexchain(hex->m)};
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown tree method `" + m + "` (exact, greedy, hexchain)");
    }
  });
}

void cs_tree_free(cs_tree* t) { delete t; }
size_t cs_tree_leaves(const cs_tree* t) { return t ? t->tree.leaf_count : 0; }
size_t cs_tree_edge_count(const cs_tree* t) { return t ? t->tree.edges.size() : 0; }

void cs_tree_edge(const cs_tree* t, size_t i, uint32_t* u, uint32_t* v) {
  if (!t || i >= t->tree.edges.size()) return;
  if (u) *u = t->tree.edges[i].first;
  if (v) *v = t->tree.edges[i].second;
}

cs_status cs_tree_supersets(const cs_graph* g, const cs_tree* t, uint64_t seed, int* exhaustive, uint64_t* checked,
                            char** count_bound, double* growth_bound) {
  return guarded([&] {
    need(g, "graph");
    need(t, "tree");
    SupersetReport r = internal_superset_family(g->graph, t->tree, seed);
    if (exhaustive) *exhaustive = r.exhaustive;
    if (checked) *checked = r.checked;
    if (growth_bound) *growth_bound = static_cast<double>(r.implied_growth);
    if (count_bound) *count_bound = dup(r.implied_count_bound.get_str());
  });
}

cs_status cs_sweep(const char* pattern, size_t from, size_t to, const char* engine, unsigned threads,
                   const char* path, char** csv) {
  return guarded([&] {
    need(pattern, "pattern");
    CensusOptions opt;
    opt.threads = threads;
    auto rows = sweep(pattern, from, to, engine_or_auto(engine), opt);
    std::ostringstream text;
    write_sweep_csv(text, rows);
    if (path && std::string(path) != "-") {
      std::ofstream file(path);
      if (!file) throw Error(ErrorCode::Io, std::string("cannot open ") + path + " for writing");
      file << text.str();
      if (!file.flush()) throw Error(ErrorCode::Io, std::string("write to ") + path + " failed");
    } else {
      need(csv, "csv");
      *csv = dup(text.str());
    }
  });
}

cs_status cs_verify_run(const char* only, unsigned threads, cs_report** out) {
  return guarded([&] {
    need(out, "out");
    SuiteOptions opt;
    opt.threads = threads;
    if (only) {
      std::istringstream in(only);
      std::string item;
      while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        int id = 0;
        try {
          std::size_t pos = 0;
          id = std::stoi(item, &pos);
          if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw Error(ErrorCode::Parse, "claim id `" + item + "` is not a number");
        }
        claim_title(id);
        opt.only.insert(id);
      }
    }
    auto* h = new cs_report{run_suite(opt), {}};
    std::ostringstream text;
    write_suite_text(text, h->report);
    h->text = text.str();
    *out = h;
  });
}

void cs_report_free(cs_report* r) { delete r; }
int cs_report_pass(const cs_report* r) { return r && r->report.pass(); }
size_t cs_report_claims(const cs_report* r) { return r ? r->report.claims.size() : 0; }

int cs_report_claim_id(const cs_report* r, size_t i) { return claim_at(r, i) ? claim_at(r, i)->id : 0; }
const char* cs_report_claim_title(const cs_report* r, size_t i) {
  return claim_at(r, i) ? claim_at(r, i)->title.c_str() : nullptr;
}
int cs_report_claim_pass(const cs_report* r, size_t i) { return claim_at(r, i) && claim_at(r, i)->pass(); }
double cs_report_claim_seconds(const cs_report* r, size_t i) { return claim_at(r, i) ? claim_at(r, i)->seconds : 0; }
size_t cs_report_checks(const cs_report* r, size_t i) { return claim_at(r, i) ? claim_at(r, i)->checks.size() : 0; }
const char* cs_report_check_label(const cs_report* r, size_t i, size_t j) {
  return check_at(r, i, j) ? check_at(r, i, j)->label.c_str() : nullptr;
}
const char* cs_report_check_detail(const cs_report* r, size_t i, size_t j) {
  return check_at(r, i, j) ? check_at(r, i, j)->detail.c_str() : nullptr;
}
int cs_report_check_pass(const cs_report* r, size_t i, size_t j) { return check_at(r, i, j) && check_at(r, i, j)->pass; }
const char* cs_report_text(const cs_report* r) { return r ? r->text.c_str() : nullptr; }

}  // extern "C"
