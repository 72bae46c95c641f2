#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace qmark {

/// Exact rational number backed by arbitrary-precision integers.
///
/// Values are always kept canonical: gcd(num, den) = 1 and den > 0.
/// Partition machinery only ever produces values in [0,1], but the type
/// itself is not range-restricted (differences of endpoints are legal).
class Fraction {
public:
  Fraction() : num_(0), den_(1) {}
  Fraction(mpz_class num, mpz_class den);
  Fraction(long num, long den) : Fraction(mpz_class(num), mpz_class(den)) {}
  explicit Fraction(long n) : num_(n), den_(1) {}

  /// Construct without reducing. The caller must guarantee canonical form
  /// (e.g. mediants of Farey neighbours); checked by assert in debug builds.
  static Fraction unchecked(mpz_class num, mpz_class den);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool in_unit_interval() const;

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;

  bool operator==(const Fraction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Fraction& o) const;

  double to_double() const;

  /// Serialized form "p/q" (decimal digits, no spaces).
  std::string str() const;

  /// Accepts "p/q", a plain integer, or a decimal string like "0.05".
  static Fraction parse(std::string_view text);

private:
  mpz_class num_;
  mpz_class den_;
};

/// Farey sum (p+p')/(q+q'). Strictly between its arguments when they differ;
/// already irreducible whenever farey_det(f, g) = ±1.
Fraction mediant(const Fraction& f, const Fraction& g);

/// g.num * f.den - g.den * f.num. Equals 1 for adjacent Stern-Brocot points.
mpz_class farey_det(const Fraction& f, const Fraction& g);

}  // namespace qmark
