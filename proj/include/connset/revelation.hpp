#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "connset/graph.hpp"

namespace connset {

/// A finitely supported distribution on the non-negative integers with exact
/// rational probabilities.
class StepDistribution {
 public:
  /// Validates: distinct values, positive probabilities summing to exactly 1,
  /// P(X=0) < 1 and a maximum value r >= 1. Entries are sorted by value.
  static StepDistribution make(std::vector<std::pair<std::size_t, mpq_class>> support);
  /// "0:1/4,1:1/2,2:1/4"
  static StepDistribution parse(const std::string& text);

  const std::vector<std::pair<std::size_t, mpq_class>>& support() const { return support_; }
  std::size_t max_value() const { return support_.back().first; }
  mpq_class probability(std::size_t value) const;
  std::string to_string() const;

 private:
  std::vector<std::pair<std::size_t, mpq_class>> support_;
};

/// {0: 1/2^(d+1), 1: 1/2, 2d-1: (2^d-1)/2^(d+1)}.
StepDistribution worst_case_distribution(unsigned d);

/// p_0..p_{n_max}: the probability that partial sums of i.i.d. copies of X
/// reach n before a zero is drawn. Uses p_m = 1 for every m <= 0.
std::vector<mpq_class> exact_pn(const StepDistribution& dist, std::size_t n_max);

/// Positive root of sum_{i>=1} P(X=i) z^i = 1, bisected until the bracket
/// stops shrinking in long double.
long double solve_z(const StepDistribution& dist);

struct QnCheck {
  long double z = 0;
  long double c1 = 0;  // min of q_i = z^i p_i over 0 <= i < r
  long double c2 = 0;  // max of the same
  long double worst_excess = 0;  // largest distance of any q_n outside [c1, c2]
  std::size_t worst_n = 0;
  bool pass = false;
};

inline constexpr long double kQnSlack = 1e-8L;

QnCheck qn_bounds_check(const StepDistribution& dist, std::size_t n_max,
                        long double slack = kQnSlack);

struct MonteCarlo {
  double estimate = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
};

/// Fraction of `trials` runs whose partial sums reach n before a zero.
MonteCarlo simulate_process(const StepDistribution& dist, std::size_t n, std::uint64_t trials,
                            std::uint64_t seed);

struct ProcessResult {
  std::vector<mpq_class> p;
  QnCheck q;
  std::optional<MonteCarlo> monte_carlo;
};

struct StageRecord {
  Vertex v = 0;
  std::size_t unrevealed_neighbors = 0;  // r_v
  std::vector<std::pair<Vertex, bool>> revealed;  // (vertex, in S) in order
  std::size_t gain = 0;  // vertices newly marked safe, 0 on failure
};

struct StrategyTrace {
  std::vector<StageRecord> stages;
  bool success = false;
  std::size_t max_degree = 0;
};

/// One run of the staged revelation strategy with fair coins drawn lazily
/// from a seeded generator. Requires a connected graph on at most 64 vertices.
StrategyTrace reveal_strategy_run(const Graph& g, std::uint64_t seed);

/// The same strategy with membership read from a fixed vector (bit v of
/// `members` says whether v is in S).
StrategyTrace reveal_strategy_replay(const Graph& g, Mask members);

inline constexpr std::size_t kStrategyExactCap = 22;

/// Exact success probability by replaying the strategy on all 2^n vectors.
mpq_class strategy_success_exact(const Graph& g, unsigned threads = 0);

struct DominanceReport {
  std::size_t max_degree = 0;
  std::uint64_t histories = 0;      // stage-2+ decision points examined
  std::uint64_t violations = 0;
  std::size_t max_gain_first = 0;   // largest X_1
  std::size_t max_gain_later = 0;   // largest X_i, i >= 2
  mpq_class success;                // success probability from the same walk
  std::string first_violation;      // description of the first failing history
  bool pass() const { return violations == 0; }
};

inline constexpr std::size_t kDominanceCap = 24;

/// Walks the strategy's decision tree (every reachable revelation history)
/// and compares the exact conditional law of each later-stage gain with
/// worst_case_distribution(max degree): P(X_i <= t | history) >= P(X <= t)
/// for every t.
DominanceReport stochastic_dominance_check(const Graph& g);

}  // namespace connset
