#include "qmark/question_mark.hpp"

#include <cassert>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmark {

namespace {

// Ceiling on the dyadic exponent produced by exact evaluation; the exponent
// equals the sum of continued-fraction terms, which is bounded by the
// denominator of the input.
constexpr unsigned long kDyadicExponentBudget = 1ul << 26;

}  // namespace

DyadicRational DyadicRational::make(mpz_class num, unsigned long exponent) {
  DyadicRational d;
  if (num == 0) {
    return d;
  }
  unsigned long tz = mpz_scan1(num.get_mpz_t(), 0);
  if (tz > exponent) tz = exponent;
  if (tz > 0) {
    num >>= tz;
    exponent -= tz;
  }
  d.num_ = std::move(num);
  d.exp_ = exponent;
  return d;
}

bool DyadicRational::in_unit_interval() const {
  if (num_ < 0) return false;
  mpz_class cap(1);
  cap <<= exp_;
  return num_ <= cap;
}

DyadicRational DyadicRational::operator+(const DyadicRational& o) const {
  unsigned long e = std::max(exp_, o.exp_);
  mpz_class a = num_ << (e - exp_);
  mpz_class b = o.num_ << (e - o.exp_);
  return make(a + b, e);
}

DyadicRational DyadicRational::operator-(const DyadicRational& o) const {
  unsigned long e = std::max(exp_, o.exp_);
  mpz_class a = num_ << (e - exp_);
  mpz_class b = o.num_ << (e - o.exp_);
  return make(a - b, e);
}

std::strong_ordering DyadicRational::operator<=>(
    const DyadicRational& o) const {
  unsigned long e = std::max(exp_, o.exp_);
  mpz_class a = num_ << (e - exp_);
  mpz_class b = o.num_ << (e - o.exp_);
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Fraction DyadicRational::to_fraction() const {
  mpz_class den(1);
  den <<= exp_;
  return Fraction(num_, den);
}

double DyadicRational::to_double() const { return to_fraction().to_double(); }

std::string DyadicRational::str() const {
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

DyadicRational DyadicRational::parse(std::string_view text) {
  std::string s(text);
  auto pos = s.find("/2^");
  if (pos == std::string::npos) {
    mpz_class m;
    if (m.set_str(s, 10) != 0 || m < 0 || m > 1)
      throw std::invalid_argument("DyadicRational: expected m/2^k, got '" + s +
                                  "'");
    return make(m, 0);
  }
  mpz_class m;
  if (m.set_str(s.substr(0, pos), 10) != 0)
    throw std::invalid_argument("DyadicRational: bad numerator in '" + s + "'");
  unsigned long e = 0;
  try {
    size_t used = 0;
    e = std::stoul(s.substr(pos + 3), &used);
    if (used != s.size() - pos - 3) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("DyadicRational: bad exponent in '" + s + "'");
  }
  return make(std::move(m), e);
}

ContinuedFraction cf_of_rational(const Fraction& x) {
  if (!x.in_unit_interval())
    throw std::domain_error("cf_of_rational: argument outside [0,1]");
  ContinuedFraction cf;
  mpz_class num = x.num();
  mpz_class den = x.den();
  while (num != 0) {
    mpz_class a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(),
                num.get_mpz_t());
    cf.terms.push_back(std::move(a));
    den = num;
    num = std::move(r);
  }
  return cf;
}

Fraction fraction_of_cf(const ContinuedFraction& cf) {
  // Evaluate [n_1, ..., n_k] back to front.
  mpz_class num(0), den(1);
  for (auto it = cf.terms.rbegin(); it != cf.terms.rend(); ++it) {
    if (*it < 1) throw std::invalid_argument("fraction_of_cf: term < 1");
    // x -> 1/(n + x)
    mpz_class new_den = *it * den + num;
    num = den;
    den = std::move(new_den);
  }
  return Fraction(num, den);
}

DyadicRational qm_of_cf(const ContinuedFraction& cf) {
  if (cf.terms.empty()) return DyadicRational::zero();
  mpz_class total(0);
  for (const auto& t : cf.terms) {
    if (t < 1) throw std::invalid_argument("qm_of_cf: term < 1");
    total += t;
  }
  if (total > kDyadicExponentBudget)
    throw std::overflow_error("qm_of_cf: dyadic exponent exceeds budget");
  unsigned long nk = total.get_ui();
  // Common denominator 2^(N_k - 1): term j contributes +-2^(N_k - N_j).
  mpz_class numerator(0);
  unsigned long prefix = 0;
  bool positive = true;
  for (const auto& t : cf.terms) {
    prefix += t.get_ui();
    mpz_class term(1);
    term <<= (nk - prefix);
    if (positive)
      numerator += term;
    else
      numerator -= term;
    positive = !positive;
  }
  return DyadicRational::make(std::move(numerator), nk - 1);
}

DyadicRational qm_rational(const Fraction& x) {
  return qm_of_cf(cf_of_rational(x));
}

double qm_real(double x, double eps) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("qm_real: argument outside [0,1]");
  if (!(eps > 0.0)) throw std::invalid_argument("qm_real: eps must be > 0");
  if (eps < 1e-15)
    throw std::invalid_argument(
        "qm_real: eps below attainable floating-point precision (1e-15)");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  // Term extraction becomes unreliable once the fractional part drops to the
  // rounding floor; by then the series tail is far below any legal eps.
  const long double instability = 1e-18L;
  long double t = x;
  long double result = 0.0L;
  unsigned long n_sum = 0;
  bool positive = true;
  while (true) {
    if (t <= instability) break;
    long double inv = 1.0L / t;
    long double fl = floorl(inv);
    n_sum += static_cast<unsigned long>(fl);
    int e = (n_sum > 20000) ? -20000 : 1 - static_cast<int>(n_sum);
    long double term = ldexpl(1.0L, e);
    result += positive ? term : -term;
    positive = !positive;
    // |tail| <= 2^(1 - N_{j+1}) <= 2^(-N_j).
    if (ldexpl(1.0L, e - 1) <= 0.5L * eps) break;
    t = inv - fl;
  }
  if (result < 0.0L) result = 0.0L;
  if (result > 1.0L) result = 1.0L;
  return static_cast<double>(result);
}

Fraction qm_inverse_dyadic(const DyadicRational& y) {
  if (!y.in_unit_interval())
    throw std::domain_error("qm_inverse_dyadic: argument outside [0,1]");
  if (y.num() == 0) return Fraction(0, 1);
  if (y == DyadicRational::one()) return Fraction(1, 1);
  // Digits of y, most significant first, name the word sigma; evaluate
  // M_sigma(0) by folding the generators from the innermost letter out.
  mpz_class p(0), q(1);
  for (unsigned long j = 0; j < y.exponent(); ++j) {
    bool bit = mpz_tstbit(y.num().get_mpz_t(), j) != 0;
    if (bit) {
      // m1: p/q -> q/(2q - p)
      mpz_class nd = 2 * q - p;
      p = q;
      q = std::move(nd);
    } else {
      // m0: p/q -> p/(p + q)
      q += p;
    }
  }
  return Fraction::unchecked(std::move(p), std::move(q));
}

DyadicRational measure_interval(const Fraction& a, const Fraction& b) {
  if (!a.in_unit_interval() || !b.in_unit_interval())
    throw std::domain_error("measure_interval: endpoints outside [0,1]");
  if (a > b) throw std::domain_error("measure_interval: a > b");
  return qm_rational(b) - qm_rational(a);
}

DyadicRational dyadic_map(int i, const DyadicRational& y) {
  if (!y.in_unit_interval())
    throw std::domain_error("dyadic_map: argument outside [0,1]");
  if (i == 0) return DyadicRational::make(y.num(), y.exponent() + 1);
  if (i == 1) {
    mpz_class shifted(1);
    shifted <<= y.exponent();
    return DyadicRational::make(y.num() + shifted, y.exponent() + 1);
  }
  throw std::invalid_argument("dyadic_map: index must be 0 or 1");
}

}  // namespace qmark
