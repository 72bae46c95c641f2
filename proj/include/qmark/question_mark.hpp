#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "qmark/fraction.hpp"

namespace qmark {

/// Continued fraction [n_1, n_2, ...] of a value in [0,1]; the empty list
/// encodes 0. Canonical form has the last term >= 2 whenever there are at
/// least two terms; the evaluator also accepts non-canonical expansions.
struct ContinuedFraction {
  std::vector<mpz_class> terms;
};

/// Exact dyadic rational num / 2^exponent in lowest terms
/// (numerator odd, or the value is 0 or 1 with exponent 0).
class DyadicRational {
public:
  DyadicRational() : num_(0), exp_(0) {}

  static DyadicRational make(mpz_class num, unsigned long exponent);
  static DyadicRational zero() { return {}; }
  static DyadicRational one() { return make(1, 0); }

  const mpz_class& num() const { return num_; }
  unsigned long exponent() const { return exp_; }

  bool in_unit_interval() const;

  DyadicRational operator+(const DyadicRational& o) const;
  DyadicRational operator-(const DyadicRational& o) const;
  bool operator==(const DyadicRational& o) const = default;
  std::strong_ordering operator<=>(const DyadicRational& o) const;

  Fraction to_fraction() const;
  double to_double() const;

  /// Serialized form "m/2^k".
  std::string str() const;
  static DyadicRational parse(std::string_view text);

private:
  mpz_class num_;
  unsigned long exp_;
};

/// Euclidean expansion of x in [0,1], in canonical form.
ContinuedFraction cf_of_rational(const Fraction& x);

/// Reconstructs the value of a continued fraction (inverse of the above).
Fraction fraction_of_cf(const ContinuedFraction& cf);

/// Alternating series sum_j (-1)^(j+1) 2^(1-N_j), N_j = n_1 + ... + n_j,
/// evaluated exactly. Accepts non-canonical expansions.
DyadicRational qm_of_cf(const ContinuedFraction& cf);

/// Minkowski's question mark function, exact on rationals in [0,1].
DyadicRational qm_rational(const Fraction& x);

/// Approximate ?(x) with |result - ?(x)| < eps, via floating-point term
/// extraction. Approximate only; all certification paths use rationals.
double qm_real(double x, double eps);

/// The unique rational x with ?(x) = y: the binary digits of y, padded to
/// the exponent length, name a word sigma and x = M_sigma(0).
Fraction qm_inverse_dyadic(const DyadicRational& y);

/// mu([a,b]) = ?(b) - ?(a). Requires a <= b, both in [0,1].
DyadicRational measure_interval(const Fraction& a, const Fraction& b);

/// The dyadic side of the conjugacy: P_0(y) = y/2, P_1(y) = (y+1)/2.
DyadicRational dyadic_map(int i, const DyadicRational& y);

}  // namespace qmark
