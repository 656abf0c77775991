#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "connset/census.hpp"
#include "connset/families.hpp"
#include "connset/revelation.hpp"

namespace connset {

struct Check {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct ClaimResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  bool pass() const;
};

struct SuiteReport {
  std::vector<ClaimResult> claims;
  bool pass() const;
};

struct SuiteOptions {
  unsigned threads = 0;
  /// Claim ids to run; empty runs all twelve.
  std::set<int> only;
  /// Called after each claim finishes.
  std::function<void(const ClaimResult&)> progress;
};

inline constexpr int kClaimCount = 12;

std::string claim_title(int id);
ClaimResult run_claim(int id, const SuiteOptions& opt = {});
SuiteReport run_suite(const SuiteOptions& opt = {});

/// One line per claim, indented lines per check.
void write_suite_text(std::ostream& out, const SuiteReport& report);

/// A closed form evaluated next to the census oracle.
struct FormulaLine {
  std::string name;
  std::string value;       // exact, as p/q when not an integer
  bool matches = false;    // equals the oracle value
};

struct FormulaReport {
  std::string family;
  std::string oracle_count;
  std::string oracle_density;
  Engine engine = Engine::Auto;
  std::vector<FormulaLine> lines;
  bool consistent() const;  // every line matches
};

/// Closed forms known for path, star, prism and crisscross families.
FormulaReport formula_report(const FamilySpec& spec, Engine engine = Engine::Auto,
                             const CensusOptions& opt = {});

/// Draws a uniform d-regular graph on n vertices from the pairing model,
/// retrying until it is simple and connected.
Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed);

/// Probability that the partial sums reach n before a zero, computed by
/// expanding every sequence of draws explicitly.
mpq_class process_tree_probability(const StepDistribution& dist, std::size_t n);

}  // namespace connset
