#include "connset/revelation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "connset/error.hpp"
#include "parallel.hpp"

namespace connset {

namespace {

mpq_class pow2_inverse(std::size_t e) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(e);
  return mpq_class(mpz_class(1), den);
}

long double to_long_double(const mpq_class& q) {
  // Scale through the binary exponents so tiny p_n keep their precision.
  if (q == 0) return 0;
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed));
}

// Strategy state on bitmasks. `safe` and `revealed` only grow.
struct Walker {
  const std::vector<Mask>& adj;
  Mask all;
  Mask safe = 0;
  Mask revealed = 0;

  Vertex choose() const {
    Mask unsafe = all & ~safe;
    for (Mask m = unsafe; m; m &= m - 1) {
      auto v = static_cast<Vertex>(std::countr_zero(m));
      if (adj[v] & safe) return v;
    }
    return static_cast<Vertex>(std::countr_zero(unsafe));
  }
};

template <typename Coin>
StrategyTrace run_strategy(const Graph& g, Coin&& coin) {
  const std::size_t n = g.order();
  if (n == 0 || !is_connected(g)) throw Error(ErrorCode::InvalidArgument, "strategy needs a connected graph");
  if (!g.fits_mask()) throw Error(ErrorCode::TooLarge, "strategy runs are limited to 64 vertices");
  Walker w{g.neighbor_masks(), n == 64 ? ~Mask{0} : (Mask{1} << n) - 1};
  StrategyTrace trace;
  trace.max_degree = degree_profile(g).max_degree;

  while (w.safe != w.all) {
    StageRecord stage;
    stage.v = w.choose();
    const Mask vbit = Mask{1} << stage.v;
    Mask pending = w.adj[stage.v] & ~w.revealed;
    stage.unrevealed_neighbors = static_cast<std::size_t>(std::popcount(pending));
    w.revealed |= vbit;
    bool in = coin(stage.v);
    stage.revealed.emplace_back(stage.v, in);
    if (!in) {
      w.safe |= vbit;
      stage.gain = 1;
      trace.stages.push_back(std::move(stage));
      continue;
    }
    Mask marked = w.adj[stage.v];
    bool rescued = false;
    for (; pending; pending &= pending - 1) {
      auto u = static_cast<Vertex>(std::countr_zero(pending));
      w.revealed |= Mask{1} << u;
      bool u_in = coin(u);
      stage.revealed.emplace_back(u, u_in);
      if (u_in) {
        marked |= w.adj[u];
        rescued = true;
        break;
      }
    }
    if (!rescued) {
      stage.gain = 0;
      trace.stages.push_back(std::move(stage));
      return trace;
    }
    stage.gain = static_cast<std::size_t>(std::popcount(marked & ~w.safe));
    w.safe |= marked;
    trace.stages.push_back(std::move(stage));
  }
  trace.success = true;
  return trace;
}

// CDF of a finite distribution given as (value, probability) pairs.
mpq_class cdf(const std::vector<std::pair<std::size_t, mpq_class>>& law, std::size_t t) {
  mpq_class out = 0;
  for (const auto& [value, p] : law) {
    if (value <= t) out += p;
  }
  return out;
}

struct DominanceWalk {
  const std::vector<Mask>& adj;
  Mask all;
  std::size_t n;
  std::vector<std::pair<std::size_t, mpq_class>> worst;
  std::size_t worst_max;
  DominanceReport report;
  mpz_class success_weight = 0;  // in units of 2^-n

  void stage(Mask safe, Mask revealed, std::size_t index) {
    if (safe == all) {
      success_weight += mpz_class(1) << static_cast<mp_bitcnt_t>(n - std::popcount(revealed));
      return;
    }
    Walker w{adj, all, safe, revealed};
    const Vertex v = w.choose();
    const Mask vbit = Mask{1} << v;
    std::vector<Vertex> pending;
    for (Mask m = adj[v] & ~revealed; m; m &= m - 1) pending.push_back(static_cast<Vertex>(std::countr_zero(m)));

    // Conditional law of this stage's gain: v out; v in and w_j the first in;
    // v in and every w out.
    std::vector<std::pair<std::size_t, mpq_class>> law;
    law.emplace_back(1, mpq_class(1, 2));
    Mask seen = revealed | vbit;
    std::vector<std::pair<Mask, Mask>> children;  // (safe, revealed) per rescue
    for (std::size_t j = 0; j < pending.size(); ++j) {
      seen |= Mask{1} << pending[j];
      Mask marked = adj[v] | adj[pending[j]];
      std::size_t gain = static_cast<std::size_t>(std::popcount(marked & ~safe));
      law.emplace_back(gain, pow2_inverse(j + 2));
      children.emplace_back(safe | marked, seen);
    }
    law.emplace_back(0, pow2_inverse(pending.size() + 1));

    for (const auto& [gain, p] : law) {
      if (index == 1) report.max_gain_first = std::max(report.max_gain_first, gain);
      else report.max_gain_later = std::max(report.max_gain_later, gain);
    }
    if (index >= 2) {
      ++report.histories;
      for (std::size_t t = 0; t <= worst_max; ++t) {
        if (cdf(law, t) < cdf(worst, t)) {
          if (report.violations++ == 0) {
            std::ostringstream out;
            out << "stage " << index << " at vertex " << v << ": P(X_i <= " << t << ") = " << cdf(law, t)
                << " < " << cdf(worst, t);
            report.first_violation = out.str();
          }
          break;
        }
      }
    }

    stage(safe | vbit, revealed | vbit, index + 1);
    for (const auto& [s, r] : children) stage(s, r, index + 1);
  }
};

}  // namespace

StepDistribution StepDistribution::make(std::vector<std::pair<std::size_t, mpq_class>> support) {
  if (support.empty()) throw Error(ErrorCode::InvalidArgument, "distribution has empty support");
  std::sort(support.begin(), support.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  mpq_class sum = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    support[i].second.canonicalize();
    if (i > 0 && support[i].first == support[i - 1].first) {
      throw Error(ErrorCode::InvalidArgument, "value " + std::to_string(support[i].first) + " listed twice");
    }
    if (support[i].second <= 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "probability of value " + std::to_string(support[i].first) + " must be positive");
    }
    sum += support[i].second;
  }
  if (sum != 1) throw Error(ErrorCode::InvalidArgument, "probabilities sum to " + sum.get_str() + ", not 1");
  if (support.back().first < 1) throw Error(ErrorCode::InvalidArgument, "maximum value r must be at least 1");
  StepDistribution d;
  d.support_ = std::move(support);
  return d;
}

StepDistribution StepDistribution::parse(const std::string& text) {
  std::vector<std::pair<std::size_t, mpq_class>> support;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Parse, "distribution entry `" + item + "` needs value:prob");
    try {
      std::size_t pos = 0;
      unsigned long value = std::stoul(item.substr(0, colon), &pos);
      if (pos != colon) throw std::invalid_argument("trailing text");
      mpq_class p(item.substr(colon + 1));
      support.emplace_back(value, p);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "cannot read distribution entry `" + item + "`");
    }
  }
  return make(std::move(support));
}

mpq_class StepDistribution::probability(std::size_t value) const {
  for (const auto& [v, p] : support_) {
    if (v == value) return p;
  }
  return 0;
}

std::string StepDistribution::to_string() const {
  std::string out;
  for (const auto& [v, p] : support_) {
    if (!out.empty()) out += ',';
    out += std::to_string(v) + ':' + p.get_str();
  }
  return out;
}

StepDistribution worst_case_distribution(unsigned d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "worst-case distribution needs d >= 2");
  mpz_class two_d = mpz_class(1) << d;
  mpq_class p0(mpz_class(1), two_d * 2), big(two_d - 1, two_d * 2);
  p0.canonicalize();
  big.canonicalize();
  return StepDistribution::make({{0, p0}, {1, mpq_class(1, 2)}, {2 * d - 1, big}});
}

std::vector<mpq_class> exact_pn(const StepDistribution& dist, std::size_t n_max) {
  std::vector<mpq_class> p(n_max + 1);
  p[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    mpq_class acc = 0;
    for (const auto& [value, prob] : dist.support()) {
      if (value == 0) continue;
      acc += value >= n ? prob : prob * p[n - value];
    }
    p[n] = acc;
  }
  return p;
}

long double solve_z(const StepDistribution& dist) {
  std::vector<std::pair<std::size_t, long double>> terms;
  for (const auto& [value, prob] : dist.support()) {
    if (value > 0) terms.emplace_back(value, to_long_double(prob));
  }
  auto f = [&](long double z) {
    long double s = 0;
    for (const auto& [value, p] : terms) s += p * std::pow(z, static_cast<long double>(value));
    return s - 1;
  };
  // f is increasing on z > 0 and f(1) = -P(X=0) <= 0.
  if (dist.probability(0) == 0) return 1;
  long double lo = 1, hi = 2;
  while (f(hi) < 0) hi *= 2;
  for (int i = 0; i < 400; ++i) {
    long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0) lo = mid;
    else hi = mid;
  }
  return lo + (hi - lo) / 2;
}

QnCheck qn_bounds_check(const StepDistribution& dist, std::size_t n_max, long double slack) {
  const std::size_t r = dist.max_value();
  std::vector<mpq_class> p = exact_pn(dist, std::max(n_max, r));
  QnCheck out;
  out.z = solve_z(dist);
  std::vector<long double> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = std::pow(out.z, static_cast<long double>(i)) * to_long_double(p[i]);
  out.c1 = *std::min_element(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(r));
  out.c2 = *std::max_element(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(r));
  for (std::size_t n = 0; n <= n_max; ++n) {
    long double excess = std::max(out.c1 - q[n], q[n] - out.c2);
    if (excess > out.worst_excess) {
      out.worst_excess = excess;
      out.worst_n = n;
    }
  }
  out.pass = out.worst_excess <= slack;
  return out;
}

MonteCarlo simulate_process(const StepDistribution& dist, std::size_t n, std::uint64_t trials,
                            std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  MonteCarlo out;
  out.trials = trials;
  out.seed = seed;
  std::vector<std::pair<std::size_t, double>> cumulative;
  mpq_class acc = 0;
  for (const auto& [value, p] : dist.support()) {
    acc += p;
    cumulative.emplace_back(value, acc.get_d());
  }
  cumulative.back().second = 2;  // guard against rounding in the last step

  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::size_t sum = 0;
    bool alive = true;
    while (alive && sum < n) {
      double u = static_cast<double>(rng() >> 11) * 0x1p-53;
      std::size_t x = 0;
      for (const auto& [value, c] : cumulative) {
        if (u < c) {
          x = value;
          break;
        }
      }
      if (x == 0) alive = false;
      else sum += x;
    }
    out.successes += alive ? 1 : 0;
  }
  out.estimate = static_cast<double>(out.successes) / static_cast<double>(trials);
  return out;
}

StrategyTrace reveal_strategy_run(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return run_strategy(g, [&](Vertex) { return (rng() >> 63) != 0; });
}

StrategyTrace reveal_strategy_replay(const Graph& g, Mask members) {
  return run_strategy(g, [&](Vertex v) { return (members >> v & 1) != 0; });
}

mpq_class strategy_success_exact(const Graph& g, unsigned threads) {
  const std::size_t n = g.order();
  if (n > kStrategyExactCap) {
    throw Error(ErrorCode::TooLarge, "exact strategy replay is capped at n=" + std::to_string(kStrategyExactCap));
  }
  if (n == 0 || !is_connected(g)) throw Error(ErrorCode::InvalidArgument, "strategy needs a connected graph");
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t chunk = std::uint64_t{1} << 12;
  const std::size_t tasks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<std::uint64_t> wins(tasks, 0);
  detail::parallel_tasks(tasks, threads, [&](std::size_t t) {
    std::uint64_t end = std::min(total, (t + 1) * chunk);
    for (std::uint64_t m = t * chunk; m < end; ++m) wins[t] += reveal_strategy_replay(g, m).success ? 1 : 0;
  });
  mpz_class count = 0;
  for (auto w : wins) count += mpz_class(static_cast<unsigned long>(w));
  mpq_class out(count, mpz_class(1) << static_cast<mp_bitcnt_t>(n));
  out.canonicalize();
  return out;
}

DominanceReport stochastic_dominance_check(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kDominanceCap) {
    throw Error(ErrorCode::TooLarge, "dominance walk is capped at n=" + std::to_string(kDominanceCap));
  }
  if (n == 0 || !is_connected(g)) throw Error(ErrorCode::InvalidArgument, "strategy needs a connected graph");
  const std::size_t d = std::max<std::size_t>(2, degree_profile(g).max_degree);
  StepDistribution worst = worst_case_distribution(static_cast<unsigned>(d));
  DominanceWalk walk{g.neighbor_masks(), (Mask{1} << n) - 1, n, worst.support(), worst.max_value(), {}};
  walk.report.max_degree = d;
  walk.stage(0, 0, 1);
  walk.report.success = mpq_class(walk.success_weight, mpz_class(1) << static_cast<mp_bitcnt_t>(n));
  walk.report.success.canonicalize();
  return walk.report;
}

}  // namespace connset
