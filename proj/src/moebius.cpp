#include "qmark/moebius.hpp"

#include <cassert>
#include <stdexcept>

namespace qmark {

UnimodularMap UnimodularMap::from_endpoints(const Fraction& left,
                                            const Fraction& right) {
  // On [p/q, p'/q'] with p'q - q'p = 1 the map is ((p'-p)x + p)/((q'-q)x + q).
  UnimodularMap m{right.num() - left.num(), left.num(),
                  right.den() - left.den(), left.den()};
  assert(m.det() == 1);
  return m;
}

std::string UnimodularMap::str() const {
  return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," +
         d.get_str() + "]]";
}

UnimodularMap compose(const UnimodularMap& m1, const UnimodularMap& m2) {
  UnimodularMap r{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                  m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
  assert(r.det() == m1.det() * m2.det());
  return r;
}

Fraction apply(const UnimodularMap& m, const Fraction& x) {
  if (!x.in_unit_interval())
    throw std::domain_error("apply: argument outside [0,1]");
  mpz_class num = m.a * x.num() + m.b * x.den();
  mpz_class den = m.c * x.num() + m.d * x.den();
  // For |det| = 1 the image of an irreducible fraction is irreducible.
  if (m.det() == 1 || m.det() == -1) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Fraction::unchecked(std::move(num), std::move(den));
  }
  return Fraction(std::move(num), std::move(den));
}

}  // namespace qmark
