#include "connset/bounds.hpp"

#include <cmath>
#include <functional>

#include "connset/error.hpp"

namespace connset {

namespace {

struct Bracket {
  long double root;
  long double width;
};

// Bisection on a function with f(lo) < 0 < f(hi). Stops at `tol` bracket
// width, at kMaxBisections, or when the midpoint no longer moves.
Bracket bisect(const std::function<long double(long double)>& f, long double lo, long double hi,
               long double tol) {
  long double flo = f(lo), fhi = f(hi);
  if (!(flo < 0 && fhi > 0)) {
    throw Error(ErrorCode::InvalidArgument, "bisection bracket does not straddle a sign change");
  }
  for (int i = 0; i < kMaxBisections && hi - lo > tol; ++i) {
    long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0) lo = mid;
    else hi = mid;
  }
  return {lo + (hi - lo) / 2, hi - lo};
}

void domain(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

long double binary_entropy(long double a) {
  if (a <= 0 || a >= 1) return 0;
  return -(a * std::log2(a) + (1 - a) * std::log2(1 - a));
}

long double solve_alpha(long double c) { return solve_alpha_report(c).value; }

BoundReport solve_alpha_report(long double c) {
  domain(c > 0.5L && c < 1, "alpha(c) needs 1/2 < c < 1");
  const long double target = 1 + std::log2(c);  // h(alpha) = log2(2c)
  // h is decreasing on (1/2, 1), so negate to get an increasing function.
  auto f = [&](long double a) { return target - binary_entropy(a); };
  // Tighter than the reporting tolerance; the bracket is cheap.
  Bracket b = bisect(f, 0.5L, 1.0L, kRootTolerance * 1e-3L);
  BoundReport r;
  r.name = "alpha";
  r.inputs["c"] = static_cast<double>(c);
  r.value = b.root;
  r.residual = std::fabs(std::pow(b.root, -b.root) * std::pow(1 - b.root, b.root - 1) - 2 * c);
  r.tolerance = b.width;
  return r;
}

RootPair solve_yd(unsigned d) {
  domain(d >= 2, "y_d needs d >= 2");
  const long double p = std::ldexp(1.0L, static_cast<int>(d));  // 2^d
  const int e = static_cast<int>(2 * d - 1);
  auto fy = [&](long double y) { return 2 * p * std::pow(y, e) - p * std::pow(y, e - 1) + 1 - p; };
  auto fz = [&](long double z) { return p * z + (p - 1) * std::pow(z, e) - 2 * p; };

  RootPair out;
  Bracket by = bisect(fy, 0.0L, 1.0L, kRootTolerance * 1e-3L);
  out.y.name = "y_d";
  out.y.inputs["d"] = d;
  out.y.value = by.root;
  out.y.residual = std::fabs(fy(by.root));
  out.y.tolerance = by.width;

  Bracket bz = bisect(fz, 1.0L, 2.0L, kRootTolerance * 1e-3L);
  out.z.name = "z_d";
  out.z.inputs["d"] = d;
  out.z.value = bz.root;
  out.z.residual = std::fabs(fz(bz.root));
  out.z.tolerance = bz.width;
  return out;
}

mpq_class parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      mpq_class q(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      return q;
    }
    // Decimal: split mantissa digits and exponent, then scale by 10^k exactly.
    std::string mant = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
      mant = text.substr(0, e);
      exp10 = std::stol(text.substr(e + 1));
    }
    bool negative = !mant.empty() && mant[0] == '-';
    if (negative || (!mant.empty() && mant[0] == '+')) mant.erase(0, 1);
    std::string digits;
    for (char ch : mant) {
      if (ch == '.') {
        continue;
      }
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit");
      digits += ch;
    }
    if (auto dot = mant.find('.'); dot != std::string::npos) exp10 -= static_cast<long>(mant.size() - dot - 1);
    if (digits.empty()) throw std::invalid_argument("no digits");
    mpz_class num(digits), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    mpq_class q = exp10 >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "cannot read `" + text + "` as an exact number");
  }
}

bool BinomialTail::count_holds() const {
  return static_cast<long double>(exact_count.get_d()) < count_bound;
}

bool BinomialTail::average_holds() const {
  return static_cast<long double>(exact_average.get_d()) < average_bound;
}

BinomialTail binomial_tail_stats(std::size_t n, const mpq_class& alpha) {
  domain(n >= 1, "binomial tail needs n >= 1");
  domain(alpha > mpq_class(1, 2) && alpha < 1, "binomial tail needs 1/2 < alpha < 1");
  mpq_class an = alpha * mpq_class(static_cast<unsigned long>(n));
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), an.get_num_mpz_t(), an.get_den_mpz_t());

  BinomialTail out;
  mpz_class total = 0;
  for (unsigned long j = k.get_ui(); j <= n; ++j) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), j);
    out.exact_count += c;
    total += c * j;
  }
  out.exact_average = mpq_class(total, out.exact_count);
  out.exact_average.canonicalize();

  const long double a = alpha.get_d();
  out.count_bound = a / (2 * a - 1) * std::exp2(static_cast<long double>(n) * binary_entropy(a));
  out.average_bound = a * static_cast<long double>(n) + 1 + a * (1 - a) / ((2 * a - 1) * (2 * a - 1));
  return out;
}

std::pair<long double, long double> density_bounds_from_growth(long double c) {
  long double upper = solve_alpha(c);
  return {upper, 1 - upper};
}

std::size_t karpov_leaf_bound(std::size_t s, std::size_t t) {
  // s/4 + t/3 + 3/2 = (3s + 4t + 18) / 12
  std::size_t num = 3 * s + 4 * t + 18;
  return (num + 11) / 12;
}

long double growth_from_leaves(std::size_t leaves, std::size_t n) {
  domain(n >= 1 && leaves <= n, "growth_from_leaves needs 0 <= leaves <= n, n >= 1");
  return std::exp2(static_cast<long double>(leaves) / static_cast<long double>(n) - 1);
}

long double degree2_density_bound(long double x) {
  domain(x >= 0 && x < 1, "degree-2 proportion must lie in [0, 1)");
  return solve_alpha(std::exp2(-(x + 2) / 3));
}

MinDegreeBounds min_degree_density_bounds(std::size_t k) {
  domain(k >= 2, "minimum degree must be at least 2");
  const long double kk = static_cast<long double>(k);
  const long double loss = 3 * std::log2(kk) / kk;
  MinDegreeBounds b;
  b.leaf_fraction = 1 - loss;
  domain(b.leaf_fraction > 0, "leaf fraction 1 - 3 log2(k)/k is not positive for k=" + std::to_string(k));
  b.growth = std::exp2(-loss);
  b.upper = solve_alpha(b.growth);
  b.lower = 1 - b.upper;
  return b;
}

long double crisscross_growth_limit() { return std::pow(7.0L, 0.25L) / 2; }

long double prism_growth_limit() { return std::sqrt(1 + std::sqrt(2.0L)) / 2; }

}  // namespace connset
