#pragma once

// Test-side oracle: evaluates p + q*sqrt(d) in directed-rounding interval
// arithmetic (MPFR) and decides signs from the interval endpoints.  This is
// an independent code path from the exact comparison under test: it never
// squares, it only rounds.  200 bits is ~60 decimal digits.

#include <mpfr.h>

#include "ruledwalls/exact.hpp"

namespace ruledwalls::testing {

struct Interval {
  mpfr_t lo, hi;
  explicit Interval(mpfr_prec_t bits) {
    mpfr_init2(lo, bits);
    mpfr_init2(hi, bits);
  }
  ~Interval() {
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  Interval(const Interval&) = delete;
  Interval& operator=(const Interval&) = delete;
};

// [lo, hi] enclosing p + q*sqrt(d).
inline void enclose(const QuadraticNumber& x, Interval& out,
                    mpfr_prec_t bits) {
  mpfr_t sq_lo, sq_hi, t;
  mpfr_init2(sq_lo, bits);
  mpfr_init2(sq_hi, bits);
  mpfr_init2(t, bits);

  mpfr_set_z(t, x.radicand().get_mpz_t(), MPFR_RNDD);
  mpfr_sqrt(sq_lo, t, MPFR_RNDD);
  mpfr_set_z(t, x.radicand().get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(sq_hi, t, MPFR_RNDU);

  const mpq_class& q = x.radical_coefficient().raw();
  // lower endpoint of q*sqrt(d): pair q with the sqrt bound of matching sign
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDD);
  mpfr_mul(out.lo, t, sgn(q) >= 0 ? sq_lo : sq_hi, MPFR_RNDD);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(out.hi, t, sgn(q) >= 0 ? sq_hi : sq_lo, MPFR_RNDU);

  mpfr_set_q(t, x.rational_part().raw().get_mpq_t(), MPFR_RNDD);
  mpfr_add(out.lo, out.lo, t, MPFR_RNDD);
  mpfr_set_q(t, x.rational_part().raw().get_mpq_t(), MPFR_RNDU);
  mpfr_add(out.hi, out.hi, t, MPFR_RNDU);

  mpfr_clear(sq_lo);
  mpfr_clear(sq_hi);
  mpfr_clear(t);
}

// Sign of x - y from interval endpoints: -1/0/+1, or +2 when the enclosure
// straddles zero at this precision (caller widens precision or, for values
// that are exactly equal, accepts only a matching exact verdict of 0).
inline int interval_sign_diff(const QuadraticNumber& x,
                              const QuadraticNumber& y,
                              mpfr_prec_t bits = 200) {
  Interval ix(bits), iy(bits), d(bits);
  enclose(x, ix, bits);
  enclose(y, iy, bits);
  mpfr_sub(d.lo, ix.lo, iy.hi, MPFR_RNDD);
  mpfr_sub(d.hi, ix.hi, iy.lo, MPFR_RNDU);
  if (mpfr_sgn(d.lo) > 0) return 1;
  if (mpfr_sgn(d.hi) < 0) return -1;
  if (mpfr_zero_p(d.lo) && mpfr_zero_p(d.hi)) return 0;
  return 2;
}

// Decimal distance |x - parsed(text)| <= tol, decided in MPFR.
inline bool decimal_within(const QuadraticNumber& x, const std::string& text,
                           double tol) {
  Interval ix(256);
  enclose(x, ix, 256);
  mpfr_t parsed, err_lo, err_hi, t;
  mpfr_init2(parsed, 256);
  mpfr_init2(err_lo, 256);
  mpfr_init2(err_hi, 256);
  mpfr_init2(t, 256);
  mpfr_set_str(parsed, text.c_str(), 10, MPFR_RNDN);
  mpfr_sub(err_lo, ix.lo, parsed, MPFR_RNDD);
  mpfr_sub(err_hi, ix.hi, parsed, MPFR_RNDU);
  mpfr_abs(err_lo, err_lo, MPFR_RNDU);
  mpfr_abs(err_hi, err_hi, MPFR_RNDU);
  mpfr_max(t, err_lo, err_hi, MPFR_RNDU);
  bool ok = mpfr_cmp_d(t, tol) <= 0;
  mpfr_clear(parsed);
  mpfr_clear(err_lo);
  mpfr_clear(err_hi);
  mpfr_clear(t);
  return ok;
}

}  // namespace ruledwalls::testing
