#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace connset {

/// A solved constant together with how well it satisfies its defining
/// equation.
struct BoundReport {
  std::string name;
  std::map<std::string, double> inputs;
  long double value = 0;
  long double residual = 0;   // |defining equation| at value
  long double tolerance = 0;  // bracket width the solver stopped at
};

struct RootPair {
  BoundReport y;  // root in (0, 1)
  BoundReport z;  // companion root > 1, z = 1/y
};

inline constexpr long double kRootTolerance = 1e-10L;
inline constexpr int kMaxBisections = 200;

/// Binary entropy h(a) in bits.
long double binary_entropy(long double a);

/// The unique a in (1/2, 1) with a^-a (1-a)^(a-1) = 2c, via 2^h(a) = 2c.
long double solve_alpha(long double c);
BoundReport solve_alpha_report(long double c);

/// y_d: positive root of 2^(d+1) y^(2d-1) - 2^d y^(2d-2) + 1 - 2^d, and
/// z_d: positive root of 2^d z + (2^d - 1) z^(2d-1) - 2^(d+1).
RootPair solve_yd(unsigned d);

struct BinomialTail {
  mpz_class exact_count;      // #subsets of [n] of size >= ceil(alpha n)
  long double count_bound;    // alpha/(2alpha-1) * 2^(n h(alpha))
  mpq_class exact_average;    // average size of those subsets
  long double average_bound;  // alpha n + 1 + alpha(1-alpha)/(2alpha-1)^2
  bool count_holds() const;
  bool average_holds() const;
};

/// alpha is taken exactly (e.g. 7/10) so that ceil(alpha n) is exact.
BinomialTail binomial_tail_stats(std::size_t n, const mpq_class& alpha);

/// Parses "0.7", "7/10" or "1e-1" style text into an exact rational.
mpq_class parse_rational(const std::string& text);

/// (upper, lower) = (alpha(c), 1 - alpha(c)).
std::pair<long double, long double> density_bounds_from_growth(long double c);

/// ceil(s/4 + t/3 + 3/2), evaluated in integers.
std::size_t karpov_leaf_bound(std::size_t s, std::size_t t);

/// A spanning tree with `leaves` leaves gives c >= 2^(leaves/n - 1).
long double growth_from_leaves(std::size_t leaves, std::size_t n);

/// alpha(2^(-(x+2)/3)) for a degree-2 proportion x in [0, 1).
long double degree2_density_bound(long double x);

struct MinDegreeBounds {
  long double leaf_fraction;  // 1 - 3 log2(k)/k
  long double growth;         // 2^(-3 log2(k)/k)
  long double upper;
  long double lower;
};

/// Bounds on D for minimum degree k, with base-2 logarithms in the leaf
/// fraction. Domain error when the leaf fraction is not positive.
MinDegreeBounds min_degree_density_bounds(std::size_t k);

/// 7^(1/4)/2, the criss-cross limit that bounds c_3 from below.
long double crisscross_growth_limit();
/// sqrt(1 + sqrt 2)/2, the prism limit.
long double prism_growth_limit();

}  // namespace connset
