#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "interval_oracle.hpp"
#include "ruledwalls/exact.hpp"

using namespace ruledwalls;
using ruledwalls::testing::decimal_within;
using ruledwalls::testing::interval_sign_diff;

namespace {

QuadraticNumber surd(long p_num, long p_den, long q_num, long q_den, long d) {
  return QuadraticNumber(Rational(Int(p_num), Int(p_den)),
                         Rational(Int(q_num), Int(q_den)), Int(d));
}

// Random surds over a fixed radicand pool; magnitudes stay small enough that
// a 200-bit interval always separates distinct values.
struct SurdGen {
  std::mt19937_64 rng{0xC0FFEE5EEDULL};
  std::uniform_int_distribution<long> num{-30, 30};
  std::uniform_int_distribution<long> den{1, 9};
  std::uniform_int_distribution<size_t> pick{0, 11};
  static constexpr long pool[12] = {0, 0, 2, 3, 5, 6, 7, 10, 11, 13, 15, 30};

  QuadraticNumber next() {
    long d = pool[pick(rng)];
    return surd(num(rng), den(rng), d == 0 ? 0 : num(rng), den(rng), d);
  }
};

}  // namespace

// ======== Rational canonical form ========

TEST_CASE("rational reduction and denominator sign") {
  Rational r(Int(6), Int(-8));
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(r.sign() == -1);
  CHECK(Rational(Int(0), Int(-5)).num() == 0);
  CHECK(Rational(Int(0), Int(-5)).den() == 1);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
  CHECK(Rational(Int(7), Int(2)).floor_int() == 3);
  CHECK(Rational(Int(7), Int(2)).ceil_int() == 4);
  CHECK(Rational(Int(-7), Int(2)).floor_int() == -4);
  CHECK(Rational(Int(-7), Int(2)).ceil_int() == -3);
  CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)) ==
        Rational(Int(1), Int(2)));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

// ======== squarefree extraction ========

TEST_CASE("squarefree split") {
  auto [s, m] = squarefree_split(Int(48));
  CHECK(s == 4);
  CHECK(m == 3);
  std::tie(s, m) = squarefree_split(Int(1));
  CHECK(s == 1);
  CHECK(m == 1);
  std::tie(s, m) = squarefree_split(Int(0));
  CHECK(m == 0);
  std::tie(s, m) = squarefree_split(Int(360));  // 36 * 10
  CHECK(s == 6);
  CHECK(m == 10);
  std::tie(s, m) = squarefree_split(Int(101 * 101));
  CHECK(s == 101);
  CHECK(m == 1);
}

TEST_CASE("surd normalization invariants") {
  QuadraticNumber a = surd(0, 1, 3, 1, 12);  // 3*sqrt(12) = 6*sqrt(3)
  CHECK(a.radicand() == 3);
  CHECK(a.radical_coefficient() == Rational(6));

  QuadraticNumber b = surd(0, 1, 3, 1, 9);  // 3*sqrt(9) = 9
  CHECK(b.is_rational());
  CHECK(b.rational_part() == Rational(9));

  QuadraticNumber c = surd(2, 1, 5, 1, 1);  // 2 + 5*sqrt(1) = 7
  CHECK(c.is_rational());
  CHECK(c.rational_part() == Rational(7));

  QuadraticNumber z = surd(4, 1, 0, 1, 7);  // zero coefficient drops radicand
  CHECK(z.is_rational());
  CHECK(z.radicand() == 0);

  CHECK_THROWS_AS(surd(0, 1, 1, 1, -3), std::domain_error);

  CHECK(QuadraticNumber::sqrt_of(Int(8)).radical_coefficient() == Rational(2));
  CHECK(QuadraticNumber::sqrt_of(Int(8)).radicand() == 2);
}

// ======== quadratic_roots frozen cases ========

TEST_CASE("roots of x^2 - 6x - 3: exact surd pair") {
  auto roots = quadratic_roots(Int(1), Int(-6), Int(-3));
  REQUIRE(roots.size() == 2);
  // ascending: 3 - 2*sqrt(3), 3 + 2*sqrt(3)
  CHECK(roots[0].rational_part() == Rational(3));
  CHECK(roots[0].radical_coefficient() == Rational(-2));
  CHECK(roots[0].radicand() == 3);
  CHECK(roots[1].rational_part() == Rational(3));
  CHECK(roots[1].radical_coefficient() == Rational(2));
  CHECK(roots[1].radicand() == 3);
  // float cross-check (test-only; the library itself never does this)
  double lo = 3.0 - 2.0 * std::sqrt(3.0), hi = 3.0 + 2.0 * std::sqrt(3.0);
  CHECK(std::abs(roots[0].to_double() - lo) < 1e-12);
  CHECK(std::abs(roots[1].to_double() - hi) < 1e-12);
  // exact back-substitution
  for (const auto& r : roots) {
    CHECK(eval_quadratic(Int(1), Int(-6), Int(-3), r).sign() == 0);
  }
  // same roots from the doubled equation
  auto doubled = quadratic_roots(Int(2), Int(-12), Int(-6));
  REQUIRE(doubled.size() == 2);
  CHECK(qn_compare(roots[0], doubled[0]) == 0);
  CHECK(qn_compare(roots[1], doubled[1]) == 0);
}

TEST_CASE("roots: double, rational, linear, empty, degenerate") {
  auto dbl = quadratic_roots(Int(1), Int(0), Int(0));
  REQUIRE(dbl.size() == 2);
  CHECK(dbl[0].is_rational());
  CHECK(dbl[0].sign() == 0);
  CHECK(qn_compare(dbl[0], dbl[1]) == 0);

  auto rat = quadratic_roots(Int(1), Int(-8), Int(0));
  REQUIRE(rat.size() == 2);
  CHECK(rat[0] == QuadraticNumber(0));
  CHECK(rat[1] == QuadraticNumber(8));

  auto lin = quadratic_roots(Int(0), Int(2), Int(-3));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].is_rational());
  CHECK(lin[0].rational_part() == Rational(Int(3), Int(2)));

  CHECK(quadratic_roots(Int(1), Int(0), Int(1)).empty());
  CHECK(quadratic_roots(Int(0), Int(0), Int(5)).empty());
  CHECK_THROWS_AS(quadratic_roots(Int(0), Int(0), Int(0)),
                  std::invalid_argument);
}

TEST_CASE("roots are ascending regardless of leading sign") {
  auto up = quadratic_roots(Int(1), Int(-6), Int(-3));
  auto down = quadratic_roots(Int(-1), Int(6), Int(3));
  REQUIRE(up.size() == 2);
  REQUIRE(down.size() == 2);
  CHECK(qn_compare(up[0], down[0]) == 0);
  CHECK(qn_compare(up[1], down[1]) == 0);
  CHECK(qn_compare(up[0], up[1]) < 0);
}

// ======== qn_compare frozen cases ========

TEST_CASE("surd comparison spot values") {
  QuadraticNumber x = surd(3, 1, 2, 1, 3);  // 3 + 2*sqrt(3) ~ 6.464
  CHECK(qn_compare(x, QuadraticNumber(6)) == 1);
  CHECK(qn_compare(QuadraticNumber(6), x) == -1);
  CHECK(qn_compare(QuadraticNumber(5), QuadraticNumber(5)) == 0);

  // distinct radicands: 2 + sqrt(2) ~ 3.414 vs 1 + sqrt(5) ~ 3.236
  CHECK(qn_compare(surd(2, 1, 1, 1, 2), surd(1, 1, 1, 1, 5)) == 1);
  // near-zero signed values
  CHECK(qn_compare(surd(-2, 1, 1, 1, 5), QuadraticNumber(0)) == 1);
  CHECK(qn_compare(surd(-3, 1, 1, 1, 8), QuadraticNumber(0)) == -1);
  // equality reached through normalization: 1 + 2*sqrt(8) == 1 + 4*sqrt(2)
  CHECK(qn_compare(surd(1, 1, 2, 1, 8), surd(1, 1, 4, 1, 2)) == 0);
  // both radicals present with opposite-sign coefficients
  CHECK(qn_compare(surd(0, 1, 5, 1, 2), surd(0, 1, 4, 1, 3)) == 1);  // 7.07 vs 6.93
  CHECK(qn_compare(surd(10, 1, -2, 1, 6), surd(0, 1, 3, 1, 3)) == -1);  // 5.10 vs 5.196
}

// ======== properties: total order, field laws, oracle agreement ========

TEST_CASE("order laws on random surds") {
  SurdGen gen;
  for (int i = 0; i < 2000; ++i) {
    QuadraticNumber a = gen.next(), b = gen.next(), c = gen.next();
    int ab = qn_compare(a, b);
    CHECK(ab == -qn_compare(b, a));
    CHECK(qn_compare(a, a) == 0);
    // transitivity over a sorted triple
    QuadraticNumber lo = a, mid = b, hi = c;
    if (qn_compare(lo, mid) > 0) std::swap(lo, mid);
    if (qn_compare(mid, hi) > 0) std::swap(mid, hi);
    if (qn_compare(lo, mid) > 0) std::swap(lo, mid);
    CHECK(qn_compare(lo, hi) <= 0);
    // translation invariance within one field
    if (a.radicand() == b.radicand()) {
      QuadraticNumber shift = surd(3, 2, 0, 1, 0);
      CHECK(qn_compare(a + shift, b + shift) == ab);
    }
  }
}

TEST_CASE("agreement with 50-digit interval evaluation on 10^4 pairs") {
  SurdGen gen;
  int resolved = 0;
  for (int i = 0; i < 10000; ++i) {
    QuadraticNumber a = gen.next(), b = gen.next();
    int exact = qn_compare(a, b);
    int oracle = interval_sign_diff(a, b);
    if (oracle == 2) {
      // interval straddles zero: the magnitudes in this generator make that
      // possible only for genuinely equal values
      CHECK(exact == 0);
    } else {
      CHECK(exact == oracle);
      ++resolved;
    }
  }
  CHECK(resolved > 9000);
}

TEST_CASE("field arithmetic round-trips") {
  QuadraticNumber x = surd(3, 1, 2, 1, 3);
  CHECK((x * x.inverse()) == QuadraticNumber(1));
  CHECK((x - x).sign() == 0);
  CHECK(x.squared() == x * x);
  QuadraticNumber y = surd(-1, 2, 5, 3, 3);
  CHECK((x + y) - y == x);
  CHECK((x * y) / y == x);
  CHECK_THROWS_AS(QuadraticNumber(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(x + surd(0, 1, 1, 1, 2), std::domain_error);
  // division by a pure rational never changes the field
  CHECK((x / QuadraticNumber(2)).radical_coefficient() == Rational(1));
}

TEST_CASE("back-substitution on random quadratics") {
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<long> coef(-40, 40);
  int with_roots = 0;
  for (int i = 0; i < 2000; ++i) {
    Int A(coef(rng)), B(coef(rng)), C(coef(rng));
    if (A == 0 && B == 0 && C == 0) continue;
    auto roots = quadratic_roots(A, B, C);
    for (const auto& r : roots) {
      CHECK(eval_quadratic(A, B, C, r).sign() == 0);
    }
    if (!roots.empty()) ++with_roots;
    for (size_t k = 1; k < roots.size(); ++k) {
      CHECK(qn_compare(roots[k - 1], roots[k]) <= 0);
    }
  }
  CHECK(with_roots > 500);
}

// ======== floor / ceil / rendering ========

TEST_CASE("floor and ceil of surds") {
  QuadraticNumber x = surd(3, 1, 2, 1, 3);  // 6.464
  CHECK(x.floor_int() == 6);
  CHECK(x.ceil_int() == 7);
  CHECK((-x).floor_int() == -7);
  CHECK((-x).ceil_int() == -6);
  CHECK(QuadraticNumber(Rational(Int(7), Int(2))).floor_int() == 3);
  CHECK(QuadraticNumber(5).floor_int() == 5);
  CHECK(QuadraticNumber(5).ceil_int() == 5);
  // exact integer boundary: sqrt(4) folded to 2
  QuadraticNumber two = QuadraticNumber::sqrt_of(Int(4));
  CHECK(two.floor_int() == 2);
  CHECK(two.ceil_int() == 2);
}

TEST_CASE("decimal rendering is 6-place fixed point within 1e-6") {
  QuadraticNumber x = surd(3, 1, 2, 1, 3);
  CHECK(x.decimal(6) == "6.464102");
  CHECK(decimal_within(x, x.decimal(6), 1e-6));
  CHECK(QuadraticNumber(Rational(Int(1), Int(2))).decimal(6) == "0.500000");
  CHECK(QuadraticNumber(Rational(Int(-1), Int(2))).decimal(6) == "-0.500000");
  CHECK(QuadraticNumber(0).decimal(6) == "0.000000");
  SurdGen gen;
  for (int i = 0; i < 500; ++i) {
    QuadraticNumber a = gen.next();
    CHECK(decimal_within(a, a.decimal(6), 1e-6));
  }
}

TEST_CASE("printable forms") {
  CHECK(surd(3, 1, 2, 1, 3).str() == "3 + 2*sqrt(3)");
  CHECK(surd(3, 1, -2, 1, 3).str() == "3 - 2*sqrt(3)");
  CHECK(surd(0, 1, 1, 1, 2).str() == "sqrt(2)");
  CHECK(surd(-5, 2, 0, 1, 0).str() == "-5/2");
  CHECK(surd(0, 1, -1, 3, 5).str() == "-1/3*sqrt(5)");
  CHECK(QuadraticNumber(7).str() == "7");
}
