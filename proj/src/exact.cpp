#include "ruledwalls/exact.hpp"

#include <mpfr.h>

#include <cmath>
#include <utility>

namespace ruledwalls {

int sign_of(const Int& n) { return sgn(n); }

std::pair<Int, Int> squarefree_split(const Int& n) {
  if (n < 0) throw std::domain_error("squarefree_split: negative input");
  if (n == 0) return {Int(1), Int(0)};
  Int s = 1, m = 1, rest = n;
  for (Int p = 2; p * p <= rest; p == 2 ? p = 3 : p += 2) {
    if (!mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) continue;
    unsigned e = 0;
    do {
      rest /= p;
      ++e;
    } while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()));
    for (unsigned k = 0; k + 1 < e; k += 2) s *= p;
    if (e % 2) m *= p;
  }
  if (rest > 1) m *= rest;  // leftover cofactor is prime
  return {s, m};
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Int Rational::floor_int() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Int Rational::ceil_int() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

Rational operator+(Rational a, const Rational& b) { return a += b; }
Rational operator-(Rational a, const Rational& b) { return a -= b; }
Rational operator*(Rational a, const Rational& b) { return a *= b; }
Rational operator/(Rational a, const Rational& b) { return a /= b; }
bool operator==(const Rational& a, const Rational& b) {
  return a.raw() == b.raw();
}
bool operator!=(const Rational& a, const Rational& b) {
  return a.raw() != b.raw();
}
bool operator<(const Rational& a, const Rational& b) {
  return a.raw() < b.raw();
}
bool operator<=(const Rational& a, const Rational& b) {
  return a.raw() <= b.raw();
}
bool operator>(const Rational& a, const Rational& b) {
  return a.raw() > b.raw();
}
bool operator>=(const Rational& a, const Rational& b) {
  return a.raw() >= b.raw();
}

static Rational rational_abs(const Rational& r) {
  return r.sign() < 0 ? -r : r;
}

// ------------------------------------------------------- QuadraticNumber

namespace {

// Sign of r + s*sqrt(d) for squarefree d (s == 0 or d == 0 both collapse to
// the rational case).  When r and s disagree in sign the decision squares
// once: |r| vs |s|*sqrt(d)  <=>  r^2 vs s^2*d.
int sign_one_radical(const Rational& r, const Rational& s, const Int& d) {
  if (s.sign() == 0 || d == 0) return r.sign();
  if (r.sign() == 0) return s.sign();
  if (r.sign() == s.sign()) return r.sign();
  Rational lhs = r * r, rhs = s * s * Rational(d);
  if (lhs == rhs) return 0;  // sqrt(d) rational: impossible for squarefree d >= 2
  return lhs > rhs ? r.sign() : s.sign();
}

}  // namespace

QuadraticNumber::QuadraticNumber(const Rational& p, const Rational& q,
                                 const Int& d)
    : p_(p), q_(q), d_(d) {
  if (d_ < 0) throw std::domain_error("QuadraticNumber: negative radicand");
  if (q_.sign() == 0 || d_ == 0) {
    q_ = Rational(0);
    d_ = 0;
    return;
  }
  auto [s, m] = squarefree_split(d_);
  q_ *= Rational(s);
  d_ = m;
  if (d_ == 1) {
    p_ += q_;
    q_ = Rational(0);
    d_ = 0;
  }
}

QuadraticNumber QuadraticNumber::sqrt_of(const Int& n) {
  return QuadraticNumber(Rational(0), Rational(1), n);
}

int QuadraticNumber::sign() const { return sign_one_radical(p_, q_, d_); }

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r;
  r.p_ = -p_;
  r.q_ = -q_;
  r.d_ = d_;
  return r;
}

QuadraticNumber QuadraticNumber::squared() const {
  QuadraticNumber r;
  r.p_ = p_ * p_ + q_ * q_ * Rational(d_);
  r.q_ = Rational(2) * p_ * q_;
  r.d_ = r.q_.sign() == 0 ? Int(0) : d_;
  return r;
}

QuadraticNumber QuadraticNumber::inverse() const {
  if (sign() == 0) throw std::domain_error("QuadraticNumber: inverse of zero");
  if (d_ == 0) {
    return QuadraticNumber(Rational(1) / p_);
  }
  // norm p^2 - q^2 d vanishes only at zero in a real quadratic field
  Rational norm = p_ * p_ - q_ * q_ * Rational(d_);
  QuadraticNumber r;
  r.p_ = p_ / norm;
  r.q_ = -q_ / norm;
  r.d_ = r.q_.sign() == 0 ? Int(0) : d_;
  return r;
}

static const Int& shared_radicand(const QuadraticNumber& a,
                                  const QuadraticNumber& b) {
  if (!a.is_rational() && !b.is_rational() && a.radicand() != b.radicand())
    throw std::domain_error("QuadraticNumber: incompatible radicands");
  return a.is_rational() ? b.radicand() : a.radicand();
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
  Int d = shared_radicand(*this, o);
  QuadraticNumber r;
  r.p_ = p_ + o.p_;
  r.q_ = q_ + o.q_;
  r.d_ = r.q_.sign() == 0 ? Int(0) : d;
  return r;
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
  return *this + (-o);
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
  Int d = shared_radicand(*this, o);
  QuadraticNumber r;
  r.p_ = p_ * o.p_ + q_ * o.q_ * Rational(d);
  r.q_ = p_ * o.q_ + q_ * o.p_;
  r.d_ = r.q_.sign() == 0 ? Int(0) : d;
  return r;
}

QuadraticNumber QuadraticNumber::operator/(const QuadraticNumber& o) const {
  return *this * o.inverse();
}

Int QuadraticNumber::floor_int() const {
  if (d_ == 0) return p_.floor_int();
  // double estimate, then exact adjustment (the estimate is off by at most
  // a few units for the magnitudes in play; each step is an exact compare)
  Int n;
  double est = to_double();
  mpz_set_d(n.get_mpz_t(), std::floor(est));
  while (qn_compare(*this, QuadraticNumber(Rational(n))) < 0) --n;
  while (qn_compare(*this, QuadraticNumber(Rational(n + 1))) >= 0) ++n;
  return n;
}

Int QuadraticNumber::ceil_int() const { return -((-*this).floor_int()); }

double QuadraticNumber::to_double() const {
  return p_.raw().get_d() + q_.raw().get_d() * std::sqrt(d_.get_d());
}

std::string QuadraticNumber::decimal(int places) const {
  mpfr_t acc, t;
  mpfr_init2(acc, 256);
  mpfr_init2(t, 256);
  mpfr_set_z(acc, d_.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(acc, acc, MPFR_RNDN);
  mpfr_set_q(t, q_.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_mul(acc, acc, t, MPFR_RNDN);
  mpfr_set_q(t, p_.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc, acc, t, MPFR_RNDN);
  char buf[160];
  mpfr_snprintf(buf, sizeof buf, "%.*Rf", places, acc);
  mpfr_clear(acc);
  mpfr_clear(t);
  std::string s(buf);
  // never print a signed zero
  if (!s.empty() && s[0] == '-' &&
      s.find_first_not_of("0.", 1) == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string QuadraticNumber::str() const {
  if (d_ == 0) return p_.str();
  std::string rad = "sqrt(" + d_.get_str() + ")";
  std::string radical;
  Rational qa = rational_abs(q_);
  if (qa == Rational(1)) {
    radical = rad;
  } else {
    radical = qa.str() + "*" + rad;
  }
  if (p_.sign() == 0) {
    return (q_.sign() < 0 ? "-" : "") + radical;
  }
  return p_.str() + (q_.sign() < 0 ? " - " : " + ") + radical;
}

int qn_compare(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.radicand() == y.radicand() || x.is_rational() || y.is_rational()) {
    Rational r = x.rational_part() - y.rational_part();
    Rational s = x.radical_coefficient() - y.radical_coefficient();
    const Int& d = x.is_rational() ? y.radicand() : x.radicand();
    return sign_one_radical(r, s, d);
  }
  // x - y = P + A*sqrt(d1) + B*sqrt(d2) with distinct squarefree d1, d2 >= 2
  // and A, B both nonzero.  First squaring decides u = A*sqrt(d1)+B*sqrt(d2);
  // the second (inside sign_one_radical) decides u^2 vs P^2.
  const Rational P = x.rational_part() - y.rational_part();
  const Rational& A = x.radical_coefficient();
  const Rational B = -y.radical_coefficient();
  const Int& d1 = x.radicand();
  const Int& d2 = y.radicand();
  int su;
  if (A.sign() == B.sign()) {
    su = A.sign();
  } else {
    Rational lhs = A * A * Rational(d1), rhs = B * B * Rational(d2);
    su = (lhs == rhs) ? 0 : (lhs > rhs ? A.sign() : B.sign());
  }
  if (P.sign() == 0) return su;
  if (su == 0) return P.sign();
  if (su == P.sign()) return su;
  Int g = gcd(d1, d2);
  Int m = (d1 / g) * (d2 / g);  // sqrt(d1*d2) = g*sqrt(m), m squarefree
  Rational u2_rat = A * A * Rational(d1) + B * B * Rational(d2);
  Rational u2_coef = Rational(2) * A * B * Rational(g);
  int c = sign_one_radical(u2_rat - P * P, u2_coef, m);
  if (c == 0) return 0;  // |u| == |P|: impossible for distinct radicands
  return c > 0 ? su : P.sign();
}

bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
  return qn_compare(a, b) == 0;
}
bool operator!=(const QuadraticNumber& a, const QuadraticNumber& b) {
  return qn_compare(a, b) != 0;
}
bool operator<(const QuadraticNumber& a, const QuadraticNumber& b) {
  return qn_compare(a, b) < 0;
}
bool operator<=(const QuadraticNumber& a, const QuadraticNumber& b) {
  return qn_compare(a, b) <= 0;
}
bool operator>(const QuadraticNumber& a, const QuadraticNumber& b) {
  return qn_compare(a, b) > 0;
}
bool operator>=(const QuadraticNumber& a, const QuadraticNumber& b) {
  return qn_compare(a, b) >= 0;
}

std::vector<QuadraticNumber> quadratic_roots(const Int& A, const Int& B,
                                             const Int& C) {
  if (A == 0 && B == 0 && C == 0)
    throw std::invalid_argument("quadratic_roots: all coefficients are zero");
  std::vector<QuadraticNumber> out;
  if (A == 0) {
    if (B == 0) return out;  // constant C != 0: no roots
    out.emplace_back(Rational(-C, B));
    return out;
  }
  Int disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  Rational center(-B, 2 * A);
  if (disc == 0) {
    out.emplace_back(center);
    out.emplace_back(center);
    return out;
  }
  auto [s, m] = squarefree_split(disc);
  Rational spread = rational_abs(Rational(s, 2 * A));
  if (m == 1) {  // perfect-square discriminant: rational pair
    out.emplace_back(center - spread);
    out.emplace_back(center + spread);
  } else {
    out.emplace_back(QuadraticNumber(center, -spread, m));
    out.emplace_back(QuadraticNumber(center, spread, m));
  }
  return out;
}

QuadraticNumber eval_quadratic(const Int& A, const Int& B, const Int& C,
                               const QuadraticNumber& x) {
  QuadraticNumber x2 = x.squared();
  Rational p = Rational(A) * x2.rational_part() +
               Rational(B) * x.rational_part() + Rational(C);
  Rational q = Rational(A) * x2.radical_coefficient() +
               Rational(B) * x.radical_coefficient();
  return QuadraticNumber(p, q, x.radicand());
}

}  // namespace ruledwalls
