/* C interface to the connset library.
 *
 * Every fallible call returns a cs_status. On failure, cs_last_error()
 * returns a message for the calling thread that stays valid until the next
 * failing call on that thread. Strings returned through `char**` out
 * parameters are owned by the caller and released with cs_string_free();
 * `const char*` getters point into the handle and live as long as it does.
 */
#ifndef CONNSET_H
#define CONNSET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CS_API __attribute__((visibility("default")))
#else
#define CS_API
#endif

typedef enum cs_status {
  CS_OK = 0,
  CS_INVALID_ARGUMENT = 1,
  CS_PARSE_ERROR = 2,
  CS_TOO_LARGE = 3,
  CS_BUDGET_EXCEEDED = 4,
  CS_VERIFICATION_MISMATCH = 5,
  CS_COUNTEREXAMPLE = 6,
  CS_IO_ERROR = 7,
  CS_INTERNAL_ERROR = 99
} cs_status;

typedef struct cs_graph cs_graph;
typedef struct cs_census cs_census;
typedef struct cs_dist cs_dist;
typedef struct cs_process cs_process;
typedef struct cs_tree cs_tree;
typedef struct cs_report cs_report;
typedef struct cs_formula cs_formula;

CS_API const char* cs_last_error(void);
CS_API const char* cs_version(void);
CS_API const char* cs_status_name(cs_status status);
CS_API void cs_string_free(char* s);

/* graphs */
CS_API cs_status cs_graph_from_family(const char* spec, cs_graph** out);
CS_API cs_status cs_graph_from_file(const char* path, cs_graph** out);
CS_API cs_status cs_graph_from_text(const char* edge_list, cs_graph** out);
CS_API void cs_graph_free(cs_graph* g);
CS_API size_t cs_graph_order(const cs_graph* g);
CS_API size_t cs_graph_size(const cs_graph* g);
/* Canonical family string, or NULL for graphs read from an edge list. */
CS_API const char* cs_graph_family(const cs_graph* g);
CS_API size_t cs_graph_max_degree(const cs_graph* g);
/* Counts of vertices with degree 1 or 3, degree 2, degree >= 4. */
CS_API void cs_graph_degree_counts(const cs_graph* g, size_t* deg1or3, size_t* deg2, size_t* deg4plus);

/* census; engine is "auto", "brute", "rooted" or "ring"; threads 0 = all */
CS_API cs_status cs_census_run(const cs_graph* g, const char* engine, unsigned threads, cs_census** out);
CS_API void cs_census_free(cs_census* c);
CS_API size_t cs_census_order(const cs_census* c);
CS_API const char* cs_census_count(const cs_census* c);
CS_API const char* cs_census_total_order(const cs_census* c);
CS_API const char* cs_census_average(const cs_census* c); /* "p/q" */
CS_API const char* cs_census_density(const cs_census* c); /* "p/q" */
CS_API double cs_census_density_value(const cs_census* c);
CS_API double cs_census_growth(const cs_census* c);
CS_API const char* cs_census_growth_text(const cs_census* c); /* 12 significant digits */
CS_API const char* cs_census_engine(const cs_census* c);

/* connected sets versus subsets without isolated vertices, as "p/q" */
CS_API cs_status cs_connectivity_odds(const cs_graph* g, unsigned threads, char** p_connected, char** p_no_isolated);

/* closed forms; consistent = 1 when every closed form equals the census */
CS_API cs_status cs_formula_run(const cs_graph* g, const char* engine, unsigned threads, cs_formula** out);
CS_API void cs_formula_free(cs_formula* f);
CS_API const char* cs_formula_oracle_count(const cs_formula* f);
CS_API const char* cs_formula_oracle_density(const cs_formula* f);
CS_API const char* cs_formula_engine(const cs_formula* f);
CS_API size_t cs_formula_lines(const cs_formula* f);
CS_API const char* cs_formula_line_name(const cs_formula* f, size_t i);
CS_API const char* cs_formula_line_value(const cs_formula* f, size_t i);
CS_API int cs_formula_line_matches(const cs_formula* f, size_t i);
CS_API int cs_formula_consistent(const cs_formula* f);

/* bound constants */
CS_API cs_status cs_solve_yd(unsigned d, double* y, double* z, double* residual_y, double* residual_z);
CS_API cs_status cs_solve_alpha(double c, double* alpha, double* residual);
CS_API cs_status cs_crisscross_growth_limit(double* value);
CS_API cs_status cs_prism_growth_limit(double* value);
CS_API cs_status cs_min_degree_bounds(size_t k, double* leaf_fraction, double* growth, double* upper,
                                      double* lower);
CS_API cs_status cs_degree2_density_bound(double x, double* bound);
CS_API size_t cs_karpov_leaf_bound(size_t s, size_t t);
CS_API cs_status cs_growth_from_leaves(size_t leaves, size_t n, double* growth);
/* alpha as exact text ("7/10", "0.7"); counts and averages returned exactly */
CS_API cs_status cs_binomial_tail(size_t n, const char* alpha, char** exact_count, double* count_bound,
                                  char** exact_average, double* average_bound, int* holds);

/* step distributions and the hitting process */
CS_API cs_status cs_dist_parse(const char* text, cs_dist** out);
CS_API cs_status cs_dist_worst_case(unsigned d, cs_dist** out);
CS_API void cs_dist_free(cs_dist* d);
CS_API const char* cs_dist_text(const cs_dist* d);
/* trials = 0 skips the Monte Carlo estimate of p_{n_max} */
CS_API cs_status cs_process_run(const cs_dist* d, size_t n_max, uint64_t trials, uint64_t seed, cs_process** out);
CS_API void cs_process_free(cs_process* p);
CS_API size_t cs_process_n_max(const cs_process* p);
CS_API const char* cs_process_p(const cs_process* p, size_t n); /* exact "p/q" */
CS_API double cs_process_z(const cs_process* p);
CS_API double cs_process_c1(const cs_process* p);
CS_API double cs_process_c2(const cs_process* p);
CS_API double cs_process_worst_excess(const cs_process* p);
CS_API int cs_process_q_pass(const cs_process* p);
/* returns 0 when no Monte Carlo run was requested */
CS_API int cs_process_monte_carlo(const cs_process* p, double* estimate, uint64_t* trials, uint64_t* seed);

/* revelation strategy on a graph */
CS_API cs_status cs_strategy_exact(const cs_graph* g, unsigned threads, char** success);
CS_API cs_status cs_strategy_dominance(const cs_graph* g, uint64_t* histories, uint64_t* violations,
                                       size_t* max_gain_first, size_t* max_gain_later, size_t* degree);
CS_API cs_status cs_strategy_run(const cs_graph* g, uint64_t seed, int* success, size_t* stages);

/* spanning trees; method is "exact", "greedy" or "hexchain" */
CS_API cs_status cs_tree_build(const cs_graph* g, const char* method, cs_tree** out);
CS_API void cs_tree_free(cs_tree* t);
CS_API size_t cs_tree_leaves(const cs_tree* t);
CS_API size_t cs_tree_edge_count(const cs_tree* t);
CS_API void cs_tree_edge(const cs_tree* t, size_t i, uint32_t* u, uint32_t* v);
/* confirms every superset of the internal vertices is connected */
CS_API cs_status cs_tree_supersets(const cs_graph* g, const cs_tree* t, uint64_t seed, int* exhaustive,
                                   uint64_t* checked, char** count_bound, double* growth_bound);

/* parameter sweep written as CSV to `path` ("-" or NULL returns it in csv) */
CS_API cs_status cs_sweep(const char* pattern, size_t from, size_t to, const char* engine, unsigned threads,
                          const char* path, char** csv);

/* acceptance suite; only = comma separated claim ids, NULL or "" for all */
CS_API cs_status cs_verify_run(const char* only, unsigned threads, cs_report** out);
CS_API void cs_report_free(cs_report* r);
CS_API int cs_report_pass(const cs_report* r);
CS_API size_t cs_report_claims(const cs_report* r);
CS_API int cs_report_claim_id(const cs_report* r, size_t i);
CS_API const char* cs_report_claim_title(const cs_report* r, size_t i);
CS_API int cs_report_claim_pass(const cs_report* r, size_t i);
CS_API double cs_report_claim_seconds(const cs_report* r, size_t i);
CS_API size_t cs_report_checks(const cs_report* r, size_t i);
CS_API const char* cs_report_check_label(const cs_report* r, size_t i, size_t j);
CS_API const char* cs_report_check_detail(const cs_report* r, size_t i, size_t j);
CS_API int cs_report_check_pass(const cs_report* r, size_t i, size_t j);
CS_API const char* cs_report_text(const cs_report* r);

#ifdef __cplusplus
}
#endif

#endif
