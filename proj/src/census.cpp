#include "connset/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "connset/error.hpp"
#include "parallel.hpp"

namespace connset {

namespace {

mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

struct Tally {
  std::uint64_t count = 0;
  std::uint64_t total = 0;

  Tally& operator+=(const Tally& o) {
    count += o.count;
    total += o.total;
    return *this;
  }
};

// ---------------------------------------------------------------------------
// Rooted enumeration. Each connected set is generated exactly once, from its
// minimum vertex, by extending through the exclusive neighbourhood of the
// newest vertex (vertices above the root not adjacent to anything chosen so
// far). The same template runs on single-word masks and on multi-word sets.

class WideBits {
 public:
  WideBits() = default;
  explicit WideBits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= Mask{1} << (i % 64); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Mask w) { return w != 0; });
  }
  std::size_t pop_lowest() {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) {
        auto bit = static_cast<std::size_t>(std::countr_zero(words_[i]));
        words_[i] &= words_[i] - 1;
        return i * 64 + bit;
      }
    }
    return words_.size() * 64;
  }
  // this | (a & b & ~c)
  WideBits with_masked(const WideBits& a, const WideBits& b, const WideBits& c) const {
    WideBits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= a.words_[i] & b.words_[i] & ~c.words_[i];
    return out;
  }
  WideBits united(const WideBits& a, std::size_t v) const {
    WideBits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= a.words_[i];
    out.set(v);
    return out;
  }

 private:
  std::vector<Mask> words_;
};

struct NarrowOps {
  using Bits = Mask;
  static Bits zero(std::size_t) { return 0; }
  static bool any(Bits b) { return b != 0; }
  static std::size_t pop_lowest(Bits& b) {
    auto v = static_cast<std::size_t>(std::countr_zero(b));
    b &= b - 1;
    return v;
  }
  static Bits with_masked(Bits self, Bits a, Bits b, Bits c) { return self | (a & b & ~c); }
  static Bits united(Bits self, Bits a, std::size_t v) { return self | a | (Mask{1} << v); }
};

struct WideOps {
  using Bits = WideBits;
  static Bits zero(std::size_t n) { return WideBits(n); }
  static bool any(const Bits& b) { return b.any(); }
  static std::size_t pop_lowest(Bits& b) { return b.pop_lowest(); }
  static Bits with_masked(const Bits& self, const Bits& a, const Bits& b, const Bits& c) {
    return self.with_masked(a, b, c);
  }
  static Bits united(const Bits& self, const Bits& a, std::size_t v) { return self.united(a, v); }
};

struct BudgetHit {};

template <class Ops>
struct RootedSearch {
  using Bits = typename Ops::Bits;

  const std::vector<Bits>& adj;
  Bits allowed;
  std::uint64_t budget;
  std::atomic<std::uint64_t>* used;
  std::uint64_t pending = 0;
  Tally tally;

  void visit(std::size_t size) {
    ++tally.count;
    tally.total += size;
    if (++pending == 4096) flush();
  }
  void flush() {
    if (used && (*used += pending) > budget) throw BudgetHit{};
    pending = 0;
  }

  void extend(std::size_t size, Bits ext, const Bits& nbhd) {
    visit(size);
    while (Ops::any(ext)) {
      std::size_t w = Ops::pop_lowest(ext);
      extend(size + 1, Ops::with_masked(ext, adj[w], allowed, nbhd),
             Ops::united(nbhd, adj[w], w));
    }
  }
};

template <class Ops>
Tally rooted_tally(std::size_t n, const std::vector<typename Ops::Bits>& adj,
                   const std::vector<typename Ops::Bits>& above,
                   const CensusOptions& opt) {
  using Bits = typename Ops::Bits;
  std::atomic<std::uint64_t> used{0};
  const std::uint64_t budget = opt.node_budget.value_or(~std::uint64_t{0});
  std::atomic<std::uint64_t>* budget_counter = opt.node_budget ? &used : nullptr;

  // One task per (root, first extension vertex); the root singleton itself is
  // counted separately. This evens out the heavy low-numbered roots.
  struct Task { std::size_t root; Bits ext; Bits nbhd; };
  std::vector<Task> tasks;
  Tally singletons;
  for (std::size_t r = 0; r < n; ++r) {
    ++singletons.count;
    ++singletons.total;
    const Bits zero = Ops::zero(n);
    Bits ext = Ops::with_masked(zero, adj[r], above[r], zero);
    Bits nbhd = Ops::united(zero, adj[r], r);
    while (Ops::any(ext)) {
      std::size_t w = Ops::pop_lowest(ext);
      tasks.push_back({r, Ops::with_masked(ext, adj[w], above[r], nbhd), Ops::united(nbhd, adj[w], w)});
    }
  }
  if (opt.node_budget && singletons.count > budget) throw Error(ErrorCode::BudgetExceeded, "node budget exhausted");
  used = singletons.count;

  std::vector<Tally> results(tasks.size());
  std::atomic<bool> exhausted{false};
  detail::parallel_tasks(tasks.size(), opt.threads, [&](std::size_t i) {
    if (exhausted) return;
    RootedSearch<Ops> search{adj, above[tasks[i].root], budget, budget_counter, 0, {}};
    try {
      search.extend(2, tasks[i].ext, tasks[i].nbhd);
      search.flush();
    } catch (const BudgetHit&) {
      exhausted = true;
    }
    results[i] = search.tally;
  });
  Tally total = singletons;
  for (const auto& t : results) total += t;
  if (exhausted || (opt.node_budget && total.count > budget)) {
    throw Error(ErrorCode::BudgetExceeded,
                "rooted enumeration exceeded its node budget of " + std::to_string(budget));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Block-chain dynamic programming.

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Accumulator {
  mpz_class count;
  mpz_class total;
};

}  // namespace

// ---------------------------------------------------------------------------

SetCensus SetCensus::from_totals(std::size_t order, mpz_class count, mpz_class total_order) {
  if (order == 0 || count <= 0) {
    throw Error(ErrorCode::InvalidArgument, "census needs a non-empty graph and a positive count");
  }
  SetCensus c;
  c.order = order;
  c.count = std::move(count);
  c.total_order = std::move(total_order);
  c.average = mpq_class(c.total_order, c.count);
  c.average.canonicalize();
  c.density = c.average / mpq_class(static_cast<unsigned long>(order));
  c.density.canonicalize();
  c.growth = growth_from_count(c.count, order);
  return c;
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Brute: return "brute";
    case Engine::Rooted: return "rooted";
    case Engine::Ring: return "ring";
    case Engine::Auto: return "auto";
  }
  return "?";
}

Engine parse_engine(const std::string& name) {
  if (name == "brute") return Engine::Brute;
  if (name == "rooted") return Engine::Rooted;
  if (name == "ring") return Engine::Ring;
  if (name == "auto") return Engine::Auto;
  throw Error(ErrorCode::Parse, "unknown engine `" + name + "` (brute, rooted, ring, auto)");
}

long double growth_from_count(const mpz_class& count, std::size_t n) {
  if (count < 1 || n == 0) {
    throw Error(ErrorCode::InvalidArgument, "growth needs count >= 1 and n >= 1");
  }
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, count.get_mpz_t());
  long double log_count =
      std::log(static_cast<long double>(mantissa)) + exponent * std::log(2.0L);
  return std::exp(log_count / static_cast<long double>(n)) / 2;
}

SetCensus census_bruteforce(const Graph& g, const CensusOptions& opt) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
  if (n > opt.brute_force_cap || n > 62) {
    throw Error(ErrorCode::TooLarge,
                "brute-force census is capped at n=" + std::to_string(opt.brute_force_cap) +
                    ", graph has " + std::to_string(n) + " vertices");
  }
  const Mask limit = Mask{1} << n;
  const std::size_t chunks = n > 12 ? std::size_t{1} << (n - 12) : 1;
  const Mask chunk_size = limit / chunks;
  std::vector<Tally> parts(chunks);
  detail::parallel_tasks(chunks, opt.threads, [&](std::size_t c) {
    Tally t;
    Mask lo = std::max<Mask>(1, c * chunk_size), hi = (c + 1) * chunk_size;
    for (Mask s = lo; s < hi; ++s) {
      if (induced_connected(g, s)) {
        ++t.count;
        t.total += static_cast<std::uint64_t>(std::popcount(s));
      }
    }
    parts[c] = t;
  });
  Tally sum;
  for (const auto& p : parts) sum += p;
  return SetCensus::from_totals(n, to_mpz(sum.count), to_mpz(sum.total));
}

SetCensus census_rooted(const Graph& g, const CensusOptions& opt) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
  Tally t;
  if (g.fits_mask() && !opt.force_generic) {
    const auto& adj = g.neighbor_masks();
    std::vector<Mask> above(n);
    for (std::size_t r = 0; r < n; ++r) above[r] = r + 1 >= 64 ? 0 : ~((Mask{1} << (r + 1)) - 1);
    t = rooted_tally<NarrowOps>(n, adj, above, opt);
  } else {
    std::vector<WideBits> adj(n, WideBits(n)), above(n, WideBits(n));
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) adj[v].set(u);
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t u = r + 1; u < n; ++u) above[r].set(u);
    }
    t = rooted_tally<WideOps>(n, adj, above, opt);
  }
  return SetCensus::from_totals(n, to_mpz(t.count), to_mpz(t.total));
}

// ---------------------------------------------------------------------------

CircularBlockChain CircularBlockChain::make(Graph graph, std::vector<std::vector<Vertex>> blocks) {
  const std::size_t n = graph.order();
  const std::size_t m = blocks.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "block chain needs at least one block");
  CircularBlockChain chain;
  chain.block_of_.assign(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (blocks[i].empty()) throw Error(ErrorCode::InvalidArgument, "block " + std::to_string(i) + " is empty");
    if (blocks[i].size() > kMaxBlock) {
      throw Error(ErrorCode::TooLarge, "block " + std::to_string(i) + " has " +
                                           std::to_string(blocks[i].size()) + " vertices, limit " +
                                           std::to_string(kMaxBlock));
    }
    std::sort(blocks[i].begin(), blocks[i].end());
    for (Vertex v : blocks[i]) {
      if (v >= n || chain.block_of_[v] != m) {
        throw Error(ErrorCode::InvalidArgument, "blocks do not partition the vertex set (vertex " +
                                                    std::to_string(v) + ")");
      }
      chain.block_of_[v] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (chain.block_of_[v] == m) {
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " is in no block");
    }
  }
  chain.interfaces_.assign(m, {});
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex v : blocks[i]) {
      bool outward = false;
      for (Vertex u : graph.neighbors(v)) {
        std::size_t j = chain.block_of_[u];
        std::size_t gap = (j + m - i) % m;
        if (gap != 0 && gap != 1 && gap != m - 1) {
          throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(v) + "-" + std::to_string(u) +
                                                      " skips a block");
        }
        outward = outward || gap != 0;
      }
      if (outward) chain.interfaces_[i].push_back(v);
    }
    if (chain.interfaces_[i].size() > kMaxInterface) {
      throw Error(ErrorCode::TooLarge, "block " + std::to_string(i) + " interface has " +
                                           std::to_string(chain.interfaces_[i].size()) +
                                           " vertices, limit " + std::to_string(kMaxInterface));
    }
  }
  chain.graph_ = std::move(graph);
  chain.blocks_ = std::move(blocks);
  return chain;
}

namespace {

std::vector<std::vector<Vertex>> consecutive_blocks(std::size_t n, std::size_t width,
                                                    std::size_t copies = 1) {
  std::size_t m = n / width;
  std::vector<std::vector<Vertex>> blocks(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t b = std::min(i / width, m - 1);
    for (std::size_t c = 0; c < copies; ++c) blocks[b].push_back(static_cast<Vertex>(c * n + i));
  }
  return blocks;
}

}  // namespace

std::optional<CircularBlockChain> chain_for(const FamilySpec& spec) {
  Graph g = build(spec);
  std::vector<std::vector<Vertex>> blocks;
  if (auto* f = std::get_if<family::Path>(&spec)) {
    blocks = consecutive_blocks(f->n, 1);
  } else if (auto* f = std::get_if<family::Cycle>(&spec)) {
    blocks = consecutive_blocks(f->n, 1);
  } else if (auto* f = std::get_if<family::Prism>(&spec)) {
    blocks = consecutive_blocks(f->n, 1, 2);
  } else if (auto* f = std::get_if<family::CrissCross>(&spec)) {
    // V_i = {v_{2i-1}, v_{2i}, w_{2i-1}, w_{2i}}.
    blocks = consecutive_blocks(2 * f->n, 2, 2);
  } else if (auto* f = std::get_if<family::HexChain>(&spec)) {
    blocks = consecutive_blocks(6 * f->m, 6);
  } else if (auto* f = std::get_if<family::CirculantPower>(&spec)) {
    blocks = consecutive_blocks(f->n, f->k);
  } else if (auto* f = std::get_if<family::CirculantPrism>(&spec)) {
    blocks = consecutive_blocks(f->n, f->k, 2);
  } else if (g.order() <= CircularBlockChain::kMaxBlock) {
    blocks = {std::vector<Vertex>(g.order())};
    std::iota(blocks[0].begin(), blocks[0].end(), Vertex{0});
  } else {
    return std::nullopt;
  }
  try {
    return CircularBlockChain::make(std::move(g), std::move(blocks));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TooLarge) return std::nullopt;
    throw;
  }
}

// The DP sweeps the blocks in order. After block i the state records, for each
// processed vertex that still has an unprocessed neighbour (the frontier),
// whether it is chosen and which connectivity class of the chosen prefix it is
// in. A class that loses all frontier vertices is finished; that is allowed
// only when it is the sole class, after which nothing more may be chosen (the
// `done` flag). Sets living inside one block are exactly the ones that finish
// early through this flag.
SetCensus census_ring(const CircularBlockChain& chain) {
  const Graph& g = chain.graph();
  const auto& blocks = chain.blocks();
  const std::size_t n = g.order();
  const std::size_t m = blocks.size();

  // frontier[i]: processed vertices (blocks 0..i) with a neighbour in a later
  // block, sorted.
  std::vector<std::vector<Vertex>> frontier(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t b = 0; b <= i; ++b) {
      for (Vertex v : blocks[b]) {
        auto nb = g.neighbors(v);
        if (std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return chain.block_of(u) > i; })) {
          frontier[i].push_back(v);
        }
      }
    }
    std::sort(frontier[i].begin(), frontier[i].end());
    if (frontier[i].size() > 2 * CircularBlockChain::kMaxInterface) {
      throw Error(ErrorCode::TooLarge, "block chain frontier too wide at block " + std::to_string(i));
    }
  }

  // Key: one byte per frontier vertex (0 = not chosen, else class id), then
  // the done flag.
  std::map<std::string, Accumulator> states;
  states[std::string(1, '\0')] = {1, 0};

  std::vector<Vertex> prev_frontier;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& block = blocks[i];
    const auto& next_frontier = frontier[i];
    const std::size_t p = prev_frontier.size(), b = block.size();

    // Local indices: [0, p) previous frontier, [p, p+b) block vertices.
    std::vector<std::vector<int>> links(b);
    for (std::size_t j = 0; j < b; ++j) {
      for (Vertex u : g.neighbors(block[j])) {
        if (chain.block_of(u) == i) {
          auto it = std::lower_bound(block.begin(), block.end(), u);
          links[j].push_back(static_cast<int>(p + (it - block.begin())));
        } else {
          auto it = std::lower_bound(prev_frontier.begin(), prev_frontier.end(), u);
          if (it != prev_frontier.end() && *it == u) links[j].push_back(static_cast<int>(it - prev_frontier.begin()));
        }
      }
    }
    std::vector<int> source_of(next_frontier.size());  // local index of each next-frontier vertex
    std::vector<char> stays(p + b, 0);
    for (std::size_t f = 0; f < next_frontier.size(); ++f) {
      Vertex v = next_frontier[f];
      auto it = std::lower_bound(prev_frontier.begin(), prev_frontier.end(), v);
      source_of[f] = (it != prev_frontier.end() && *it == v)
                         ? static_cast<int>(it - prev_frontier.begin())
                         : static_cast<int>(p + (std::lower_bound(block.begin(), block.end(), v) - block.begin()));
      stays[source_of[f]] = 1;
    }

    const std::string done_key = std::string(next_frontier.size(), '\0') + '\1';
    const std::string empty_key = std::string(next_frontier.size(), '\0') + '\0';
    std::map<std::string, Accumulator> next;
    auto deposit = [&](const std::string& key, const Accumulator& acc, std::size_t added) {
      auto& slot = next[key];
      slot.count += acc.count;
      slot.total += acc.total;
      if (added) slot.total += acc.count * static_cast<unsigned long>(added);
    };

    for (const auto& [key, acc] : states) {
      if (key.back() == '\1') {
        deposit(done_key, acc, 0);
        continue;
      }
      for (Mask t = 0; t < (Mask{1} << b); ++t) {
        UnionFind uf(p + b);
        std::vector<char> chosen(p + b, 0);
        std::vector<int> first_of_label(p + b + 1, -1);
        for (std::size_t k = 0; k < p; ++k) {
          auto label = static_cast<unsigned char>(key[k]);
          if (!label) continue;
          chosen[k] = 1;
          if (first_of_label[label] < 0) first_of_label[label] = static_cast<int>(k);
          else uf.unite(first_of_label[label], static_cast<int>(k));
        }
        for (std::size_t j = 0; j < b; ++j) {
          if (t >> j & 1) chosen[p + j] = 1;
        }
        for (std::size_t j = 0; j < b; ++j) {
          if (!(t >> j & 1)) continue;
          for (int l : links[j]) {
            if (chosen[l]) uf.unite(static_cast<int>(p + j), l);
          }
        }
        std::vector<char> is_root(p + b, 0), root_stays(p + b, 0);
        std::size_t classes = 0, finished = 0, any_chosen = 0;
        for (std::size_t k = 0; k < p + b; ++k) {
          if (!chosen[k]) continue;
          ++any_chosen;
          int r = uf.find(static_cast<int>(k));
          if (!is_root[r]) {
            is_root[r] = 1;
            ++classes;
          }
          if (stays[k]) root_stays[r] = 1;
        }
        for (std::size_t k = 0; k < p + b; ++k) {
          if (is_root[k] && !root_stays[k]) ++finished;
        }
        const auto added = static_cast<std::size_t>(std::popcount(t));
        if (!any_chosen) {
          deposit(empty_key, acc, 0);
        } else if (finished > 0) {
          if (classes == 1) deposit(done_key, acc, added);
        } else {
          std::string out(next_frontier.size() + 1, '\0');
          std::vector<unsigned char> label_of_root(p + b, 0);
          unsigned char labels = 0;
          for (std::size_t f = 0; f < next_frontier.size(); ++f) {
            int src = source_of[f];
            if (!chosen[src]) continue;
            int r = uf.find(src);
            if (!label_of_root[r]) label_of_root[r] = ++labels;
            out[f] = static_cast<char>(label_of_root[r]);
          }
          deposit(out, acc, added);
        }
      }
    }
    states = std::move(next);
    prev_frontier = next_frontier;
  }

  auto it = states.find(std::string(1, '\1'));
  if (it == states.end()) throw Error(ErrorCode::InvalidArgument, "block chain graph has no connected sets");
  return SetCensus::from_totals(n, it->second.count, it->second.total);
}

std::string fraction_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Engine resolve_engine(const Graph& g, Engine engine, const std::optional<FamilySpec>& family) {
  if (engine != Engine::Auto) return engine;
  if (family && chain_for(*family)) return Engine::Ring;
  return g.order() <= 20 ? Engine::Brute : Engine::Rooted;
}

SetCensus census(const Graph& g, Engine engine, const std::optional<FamilySpec>& family,
                 const CensusOptions& opt) {
  switch (engine) {
    case Engine::Brute:
      return census_bruteforce(g, opt);
    case Engine::Rooted:
      return census_rooted(g, opt);
    case Engine::Ring: {
      std::optional<CircularBlockChain> chain = family ? chain_for(*family) : std::nullopt;
      if (!chain) {
        throw Error(ErrorCode::InvalidArgument,
                    "ring engine needs a graph family with a block decomposition");
      }
      return census_ring(*chain);
    }
    case Engine::Auto:
      return census(g, resolve_engine(g, engine, family), family, opt);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown engine");
}

ConnectivityOdds connected_vs_isolated(const Graph& g, const CensusOptions& opt) {
  const std::size_t n = g.order();
  if (n == 0 || n > opt.brute_force_cap || n > 62) {
    throw Error(ErrorCode::TooLarge, "connected-vs-isolated comparison is capped at n=" +
                                         std::to_string(opt.brute_force_cap));
  }
  const Mask limit = Mask{1} << n;
  const std::size_t chunks = n > 12 ? std::size_t{1} << (n - 12) : 1;
  const Mask chunk_size = limit / chunks;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts(chunks);
  detail::parallel_tasks(chunks, opt.threads, [&](std::size_t c) {
    std::uint64_t conn = 0, no_iso = 0;
    for (Mask s = c * chunk_size; s < (c + 1) * chunk_size; ++s) {
      if (isolated_count(g, s) == 0) ++no_iso;
      if (induced_connected(g, s)) ++conn;
    }
    parts[c] = {conn, no_iso};
  });
  ConnectivityOdds odds;
  for (auto [c, i] : parts) {
    odds.connected += to_mpz(c);
    odds.no_isolated += to_mpz(i);
  }
  mpz_class subsets = mpz_class(1) << static_cast<mp_bitcnt_t>(n);
  odds.p_connected = mpq_class(odds.connected, subsets);
  odds.p_connected.canonicalize();
  odds.p_no_isolated = mpq_class(odds.no_isolated, subsets);
  odds.p_no_isolated.canonicalize();
  return odds;
}

}  // namespace connset
