#pragma once

// Exact scalar arithmetic for the wall-and-chamber engine.
//
// Two number types:
//
//   Rational         arbitrary-precision fraction, always reduced, den > 0.
//   QuadraticNumber  p + q*sqrt(d) with rational p, q and a squarefree
//                    integer radicand d >= 0.  d == 0 means the value is
//                    rational (then q == 0 as well); d == 1 never occurs,
//                    the constructor folds sqrt(1) into the rational part.
//
// Every comparison is decided exactly.  Comparing two values with distinct
// radicands tracks signs through at most two squarings; no floating point
// is consulted anywhere on a decision path.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ruledwalls {

using Int = mpz_class;

int sign_of(const Int& n);

// Splits n >= 0 as n = s^2 * m with m squarefree; returns {s, m}.
// squarefree_split(0) = {1, 0} so that s*sqrt(m) still names the value.
std::pair<Int, Int> squarefree_split(const Int& n);

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors Int
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den);

  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  Int floor_int() const;
  Int ceil_int() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on 0

  std::string str() const;

 private:
  mpq_class v_;  // canonical: reduced, positive denominator
};

Rational operator+(Rational a, const Rational& b);
Rational operator-(Rational a, const Rational& b);
Rational operator*(Rational a, const Rational& b);
Rational operator/(Rational a, const Rational& b);
bool operator==(const Rational& a, const Rational& b);
bool operator!=(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);
bool operator>(const Rational& a, const Rational& b);
bool operator>=(const Rational& a, const Rational& b);

class QuadraticNumber {
 public:
  QuadraticNumber() : p_(0), q_(0), d_(0) {}
  QuadraticNumber(const Rational& p) : p_(p), q_(0), d_(0) {}  // NOLINT
  QuadraticNumber(long n) : p_(n), q_(0), d_(0) {}             // NOLINT

  // General form p + q*sqrt(d).  d may carry square factors; they are
  // extracted, and d in {0, 1} (after extraction) folds into p.
  // Negative d throws std::domain_error.
  QuadraticNumber(const Rational& p, const Rational& q, const Int& d);

  static QuadraticNumber sqrt_of(const Int& n);  // exact sqrt(n), n >= 0

  const Rational& rational_part() const { return p_; }
  const Rational& radical_coefficient() const { return q_; }
  const Int& radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  int sign() const;
  QuadraticNumber operator-() const;
  QuadraticNumber squared() const;
  QuadraticNumber inverse() const;  // throws std::domain_error on 0

  // Field arithmetic inside one quadratic field: both operands must be
  // rational or share the same radicand, otherwise std::domain_error.
  QuadraticNumber operator+(const QuadraticNumber& o) const;
  QuadraticNumber operator-(const QuadraticNumber& o) const;
  QuadraticNumber operator*(const QuadraticNumber& o) const;
  QuadraticNumber operator/(const QuadraticNumber& o) const;

  Int floor_int() const;
  Int ceil_int() const;

  double to_double() const;
  // Fixed-point rendering with the given number of fractional digits,
  // evaluated at 256-bit precision (error well under half an ulp of the
  // last printed digit for the magnitudes this library produces).
  std::string decimal(int places) const;
  std::string str() const;  // e.g. "3 + 2*sqrt(3)", "-5/2"

 private:
  Rational p_, q_;
  Int d_;
};

// Exact three-way comparison: sign of x - y as -1 / 0 / +1.
int qn_compare(const QuadraticNumber& x, const QuadraticNumber& y);

bool operator==(const QuadraticNumber& a, const QuadraticNumber& b);
bool operator!=(const QuadraticNumber& a, const QuadraticNumber& b);
bool operator<(const QuadraticNumber& a, const QuadraticNumber& b);
bool operator<=(const QuadraticNumber& a, const QuadraticNumber& b);
bool operator>(const QuadraticNumber& a, const QuadraticNumber& b);
bool operator>=(const QuadraticNumber& a, const QuadraticNumber& b);

// All real roots of A x^2 + B x + C = 0 with integer coefficients, in
// ascending order, as exact surds.  A double root is listed twice; a linear
// equation (A == 0, B != 0) yields one root; no real root yields an empty
// list.  All coefficients zero throws std::invalid_argument.
std::vector<QuadraticNumber> quadratic_roots(const Int& A, const Int& B,
                                             const Int& C);

// A x^2 + B x + C evaluated exactly at a surd argument.
QuadraticNumber eval_quadratic(const Int& A, const Int& B, const Int& C,
                               const QuadraticNumber& x);

}  // namespace ruledwalls
