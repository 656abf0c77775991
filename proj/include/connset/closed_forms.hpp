#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "connset/census.hpp"

namespace connset {

/// a_n = (1+r)^n + (1-r)^n and b_n = ((1+r)^n - (1-r)^n) / (2r) with r = sqrt 2,
/// both from x_n = 2 x_{n-1} + x_{n-2}.
struct PellPair {
  mpz_class a;
  mpz_class b;
};

PellPair pell_pair(std::size_t n);

mpz_class path_count(std::size_t n);
mpz_class star_count(std::size_t n);
/// N of the circular ladder on 2n vertices: 1 - 3n + a_n + 3n b_n.
mpz_class prism_count(std::size_t n);

/// The published criss-cross count 7^n + (191/3) n 7^(n-2) - (16/3) n, kept
/// verbatim (it is not an integer when 3 does not divide n). n = 2 gives 167.
mpq_class crisscross_count_published(std::size_t n);

/// The published density expression for the criss-cross prism, verbatim.
mpq_class crisscross_density_published(std::size_t n);

/// Constants of the corrected criss-cross forms
///   N(n) = 7^n + count_lin * n 7^(n-2) + count_const * n
///   T(n) = total_quad * n^2 7^(n-3) + total_lin * n 7^(n-3) + total_const * n
/// where T is the total order of all connected sets.
struct CrissCrossFit {
  mpq_class count_lin;
  mpq_class count_const;
  mpq_class total_quad;
  mpq_class total_lin;
  mpq_class total_const;

  mpz_class count(std::size_t n) const;
  mpq_class total_order(std::size_t n) const;
  mpq_class density(std::size_t n) const;

  bool operator==(const CrissCrossFit&) const = default;
};

using CrissCrossOracle = std::function<SetCensus(std::size_t n)>;

/// Solves the count constants from oracle values at n = 3, 4 and the total
/// order constants from n = 3, 4, 5, then checks both forms against the oracle
/// at every n in `validate_at`. Throws Error(VerificationMismatch) on the first
/// disagreement. The default oracle is the block-chain engine.
CrissCrossFit fit_crisscross(const CrissCrossOracle& oracle = {},
                             const std::vector<std::size_t>& validate_at = {2, 5, 6, 7, 8});

/// The constants shipped with the library (count_lin = 191/3,
/// count_const = -14/3, ...), produced by fit_crisscross().
const CrissCrossFit& crisscross_fit();

/// True N of the criss-cross prism: the block-chain engine for n <= 5, the
/// shipped fitted form beyond.
mpz_class crisscross_count_validated(std::size_t n);
mpq_class crisscross_density_validated(std::size_t n);

}  // namespace connset
