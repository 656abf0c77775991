#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "connset/families.hpp"
#include "connset/graph.hpp"

namespace connset {

/// Exact statistics of the family of connected sets of a graph.
struct SetCensus {
  std::size_t order = 0;     // n
  mpz_class count;           // N(G)
  mpz_class total_order;     // sum of |S| over connected S
  mpq_class average;         // A(G)
  mpq_class density;         // D(G) = A(G) / n
  long double growth = 0;    // c(G) = N(G)^(1/n) / 2

  static SetCensus from_totals(std::size_t order, mpz_class count,
                               mpz_class total_order);

  bool operator==(const SetCensus& o) const {
    return order == o.order && count == o.count && total_order == o.total_order;
  }
};

struct CensusOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  std::size_t brute_force_cap = 28;
  /// Maximum number of enumeration nodes for the rooted engine.
  std::optional<std::uint64_t> node_budget;
  /// Use the list-based enumeration even when the graph fits a bitmask.
  bool force_generic = false;
};

enum class Engine { Brute, Rooted, Ring, Auto };

const char* engine_name(Engine e);
Engine parse_engine(const std::string& name);

/// Vertex blocks B_1..B_m arranged in a cycle; every edge lies inside one block
/// or joins two cyclically consecutive blocks.
class CircularBlockChain {
 public:
  static constexpr std::size_t kMaxInterface = 8;
  static constexpr std::size_t kMaxBlock = 16;

  /// Validates the partition and the no-skip condition, and that each block's
  /// interface has at most kMaxInterface vertices.
  static CircularBlockChain make(Graph graph,
                                 std::vector<std::vector<Vertex>> blocks);

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  std::size_t block_of(Vertex v) const { return block_of_[v]; }
  /// Vertices of block i with a neighbour in another block.
  const std::vector<Vertex>& interface(std::size_t i) const {
    return interfaces_[i];
  }

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<Vertex>> interfaces_;
};

/// The canonical block decomposition for families that admit one
/// (cycle, path, prism, crisscross, hexchain, small-k circulants).
std::optional<CircularBlockChain> chain_for(const FamilySpec& spec);

SetCensus census_bruteforce(const Graph& g, const CensusOptions& opt = {});
SetCensus census_rooted(const Graph& g, const CensusOptions& opt = {});
SetCensus census_ring(const CircularBlockChain& chain);

/// The engine `census` will run for this request (Auto resolved).
Engine resolve_engine(const Graph& g, Engine engine,
                      const std::optional<FamilySpec>& family = std::nullopt);

/// Dispatches on `engine`. Ring needs a family with a block decomposition;
/// Auto prefers ring, then brute force for n <= 20, then rooted.
SetCensus census(const Graph& g, Engine engine,
                 const std::optional<FamilySpec>& family = std::nullopt,
                 const CensusOptions& opt = {});

/// Always `p/q`, also for integers (`5/1`).
std::string fraction_string(const mpq_class& q);

/// N^(1/n) / 2 evaluated through the integer's binary exponent, so counts far
/// beyond the double range keep full relative precision.
long double growth_from_count(const mpz_class& count, std::size_t n);

struct ConnectivityOdds {
  mpz_class connected;         // #connected sets
  mpz_class no_isolated;       // #subsets (empty included) with I(S) = 0
  mpq_class p_connected;       // connected / 2^n
  mpq_class p_no_isolated;     // no_isolated / 2^n
};

ConnectivityOdds connected_vs_isolated(const Graph& g,
                                       const CensusOptions& opt = {});

}  // namespace connset
