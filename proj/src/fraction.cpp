#include "qmark/fraction.hpp"

#include <cassert>
#include <stdexcept>

namespace qmark {

Fraction::Fraction(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Fraction: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction Fraction::unchecked(mpz_class num, mpz_class den) {
  Fraction f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
#ifndef NDEBUG
  assert(f.den_ > 0);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), f.num_.get_mpz_t(), f.den_.get_mpz_t());
  assert(g == 1);
#endif
  return f;
}

bool Fraction::in_unit_interval() const {
  return num_ >= 0 && num_ <= den_;
}

Fraction Fraction::operator+(const Fraction& o) const {
  return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
  return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
  return Fraction(num_ * o.num_, den_ * o.den_);
}

std::strong_ordering Fraction::operator<=>(const Fraction& o) const {
  // Cross-multiplication; denominators are positive.
  mpz_class lhs = num_ * o.den_;
  mpz_class rhs = o.num_ * den_;
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Fraction::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::string Fraction::str() const {
  return num_.get_str() + "/" + den_.get_str();
}

Fraction Fraction::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Fraction: empty string");
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class p, q;
    if (p.set_str(s.substr(0, slash), 10) != 0 ||
        q.set_str(s.substr(slash + 1), 10) != 0)
      throw std::invalid_argument("Fraction: bad rational '" + s + "'");
    return Fraction(p, q);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("Fraction: bad decimal '" + s + "'");
    mpz_class p;
    if (p.set_str(digits, 10) != 0)
      throw std::invalid_argument("Fraction: bad decimal '" + s + "'");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), 10, frac_len);
    return Fraction(p, q);
  }
  mpz_class p;
  if (p.set_str(s, 10) != 0)
    throw std::invalid_argument("Fraction: bad integer '" + s + "'");
  return Fraction(p, mpz_class(1));
}

Fraction mediant(const Fraction& f, const Fraction& g) {
  // Reduction is a no-op on Farey neighbours but required in general.
  return Fraction(f.num() + g.num(), f.den() + g.den());
}

mpz_class farey_det(const Fraction& f, const Fraction& g) {
  return g.num() * f.den() - g.den() * f.num();
}

}  // namespace qmark
