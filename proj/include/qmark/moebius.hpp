#pragma once

#include <gmpxx.h>

#include <string>

#include "qmark/fraction.hpp"

namespace qmark {

/// Integer Moebius map x -> (a*x + b)/(c*x + d) with determinant 1.
///
/// The two generators
///   m0: x -> x/(1+x)      (matrix (1,0,1,1))
///   m1: x -> 1/(2-x)      (matrix (0,1,-1,2))
/// map [0,1] onto [0,1/2] and [1/2,1]; all their compositions keep
/// determinant 1 and a positive denominator on [0,1].
struct UnimodularMap {
  mpz_class a, b, c, d;

  static UnimodularMap identity() { return {1, 0, 0, 1}; }
  static UnimodularMap m0() { return {1, 0, 1, 1}; }
  static UnimodularMap m1() { return {0, 1, -1, 2}; }
  static UnimodularMap generator(int bit) { return bit ? m1() : m0(); }

  /// Map with M(0) = left and M(1) = right, assuming farey_det(left,right)=1.
  static UnimodularMap from_endpoints(const Fraction& left,
                                      const Fraction& right);

  mpz_class det() const { return a * d - b * c; }

  bool operator==(const UnimodularMap& o) const = default;

  /// Serialized form "[[a,b],[c,d]]".
  std::string str() const;
};

/// Map composition m1 after m2 (matrix product).
UnimodularMap compose(const UnimodularMap& m1, const UnimodularMap& m2);

/// Exact image of x in [0,1]. Throws std::domain_error outside the domain.
Fraction apply(const UnimodularMap& m, const Fraction& x);

}  // namespace qmark
