#include "connset/closed_forms.hpp"

#include <array>

#include "connset/error.hpp"

namespace connset {

namespace {

mpz_class ui(std::size_t v) { return mpz_class(static_cast<unsigned long>(v)); }

mpz_class pow_ui(unsigned long base, std::size_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(e));
  return out;
}

// 7^e for any integer e, as an exact rational.
mpq_class pow7(long e) {
  if (e >= 0) return mpq_class(pow_ui(7, static_cast<std::size_t>(e)));
  mpq_class out(mpz_class(1), pow_ui(7, static_cast<std::size_t>(-e)));
  return out;
}

mpq_class rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

void require(bool ok, const char* what, std::size_t n) {
  if (!ok) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + ": n=" + std::to_string(n) + " out of range");
  }
}

// Gaussian elimination over the rationals; the systems here are tiny and
// non-singular by construction.
template <std::size_t K>
std::array<mpq_class, K> solve(std::array<std::array<mpq_class, K>, K> a, std::array<mpq_class, K> rhs) {
  for (std::size_t col = 0; col < K; ++col) {
    std::size_t pivot = col;
    while (pivot < K && a[pivot][col] == 0) ++pivot;
    if (pivot == K) throw Error(ErrorCode::VerificationMismatch, "singular fitting system");
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t row = 0; row < K; ++row) {
      if (row == col || a[row][col] == 0) continue;
      mpq_class factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < K; ++k) a[row][k] -= factor * a[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::array<mpq_class, K> x;
  for (std::size_t i = 0; i < K; ++i) {
    x[i] = rhs[i] / a[i][i];
    x[i].canonicalize();
  }
  return x;
}

SetCensus ring_crisscross(std::size_t n) {
  auto chain = chain_for(family::CrissCross{n});
  return census_ring(*chain);
}

}  // namespace

PellPair pell_pair(std::size_t n) {
  mpz_class a0 = 2, a1 = 2, b0 = 0, b1 = 1;
  if (n == 0) return {a0, b0};
  for (std::size_t i = 1; i < n; ++i) {
    mpz_class a2 = 2 * a1 + a0, b2 = 2 * b1 + b0;
    a0 = a1;
    a1 = a2;
    b0 = b1;
    b1 = b2;
  }
  return {a1, b1};
}

mpz_class path_count(std::size_t n) {
  require(n >= 1, "path_count", n);
  return ui(n) * ui(n + 1) / 2;
}

mpz_class star_count(std::size_t n) {
  require(n >= 2, "star_count", n);
  return pow_ui(2, n - 1) + ui(n - 1);
}

mpz_class prism_count(std::size_t n) {
  require(n >= 3, "prism_count", n);
  PellPair p = pell_pair(n);
  return 1 - 3 * ui(n) + p.a + 3 * ui(n) * p.b;
}

mpq_class crisscross_count_published(std::size_t n) {
  require(n >= 2, "crisscross_count_published", n);
  if (n == 2) return mpq_class(167);
  mpq_class nn(ui(n));
  mpq_class out = pow7(static_cast<long>(n)) + rational(191, 3) * nn * pow7(static_cast<long>(n) - 2) -
                  rational(16, 3) * nn;
  out.canonicalize();
  return out;
}

mpq_class crisscross_density_published(std::size_t n) {
  require(n >= 3, "crisscross_density_published", n);
  mpq_class nn(ui(n));
  mpq_class s = pow7(static_cast<long>(n) - 3);
  mpq_class numer = rational(3820, 3) * nn * nn * s - rational(292, 9) * nn * s + rational(320, 9) * nn;
  mpq_class out = numer / (4 * nn * crisscross_count_published(n));
  out.canonicalize();
  return out;
}

mpz_class CrissCrossFit::count(std::size_t n) const {
  mpq_class nn(ui(n));
  mpq_class value = pow7(static_cast<long>(n)) + count_lin * nn * pow7(static_cast<long>(n) - 2) + count_const * nn;
  value.canonicalize();
  if (value.get_den() != 1) {
    throw Error(ErrorCode::VerificationMismatch,
                "fitted criss-cross count is not an integer at n=" + std::to_string(n));
  }
  return value.get_num();
}

mpq_class CrissCrossFit::total_order(std::size_t n) const {
  mpq_class nn(ui(n));
  mpq_class s = pow7(static_cast<long>(n) - 3);
  mpq_class value = total_quad * nn * nn * s + total_lin * nn * s + total_const * nn;
  value.canonicalize();
  return value;
}

mpq_class CrissCrossFit::density(std::size_t n) const {
  mpq_class d = total_order(n) / (4 * mpq_class(ui(n)) * mpq_class(count(n)));
  d.canonicalize();
  return d;
}

CrissCrossFit fit_crisscross(const CrissCrossOracle& oracle, const std::vector<std::size_t>& validate_at) {
  const CrissCrossOracle& source = oracle ? oracle : CrissCrossOracle(ring_crisscross);
  SetCensus c3 = source(3), c4 = source(4), c5 = source(5);

  auto count_row = [](std::size_t n) {
    mpq_class nn(ui(n));
    return std::array<mpq_class, 2>{nn * pow7(static_cast<long>(n) - 2), nn};
  };
  auto count_rhs = [](const SetCensus& c, std::size_t n) -> mpq_class {
    return mpq_class(c.count) - pow7(static_cast<long>(n));
  };
  auto counts = solve<2>({count_row(3), count_row(4)}, {count_rhs(c3, 3), count_rhs(c4, 4)});

  auto total_row = [](std::size_t n) {
    mpq_class nn(ui(n));
    mpq_class s = pow7(static_cast<long>(n) - 3);
    return std::array<mpq_class, 3>{nn * nn * s, nn * s, nn};
  };
  auto totals = solve<3>({total_row(3), total_row(4), total_row(5)},
                         {mpq_class(c3.total_order), mpq_class(c4.total_order), mpq_class(c5.total_order)});

  CrissCrossFit fit{counts[0], counts[1], totals[0], totals[1], totals[2]};
  for (std::size_t n : validate_at) {
    SetCensus truth = source(n);
    mpq_class fitted_total = fit.total_order(n);
    mpz_class fitted_count;
    try {
      fitted_count = fit.count(n);
    } catch (const Error&) {
      fitted_count = -1;
    }
    if (fitted_count != truth.count || fitted_total != mpq_class(truth.total_order)) {
      throw Error(ErrorCode::VerificationMismatch,
                  "criss-cross fitted form disagrees with the oracle at n=" + std::to_string(n) +
                      " (count " + fitted_count.get_str() + " vs " + truth.count.get_str() + ")");
    }
  }
  return fit;
}

const CrissCrossFit& crisscross_fit() {
  static const CrissCrossFit fit{
      rational(191, 3), rational(-14, 3),
      rational(3820, 3), rational(292, 9), rational(-40, 9),
  };
  return fit;
}

mpz_class crisscross_count_validated(std::size_t n) {
  require(n >= 2, "crisscross_count_validated", n);
  if (n <= 5) return ring_crisscross(n).count;
  return crisscross_fit().count(n);
}

mpq_class crisscross_density_validated(std::size_t n) {
  require(n >= 2, "crisscross_density_validated", n);
  if (n <= 5) return ring_crisscross(n).density;
  return crisscross_fit().density(n);
}

}  // namespace connset
