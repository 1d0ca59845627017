// Chamber decomposition of the polarization quadrant: slicing along rays,
// locating divisors by exact slope, and finding the lexicographically least
// integer polarization of a sector.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ruledwalls/chambers.hpp"

using namespace ruledwalls;

namespace {

QuadraticNumber surd(long p, long q, long d) {
  return QuadraticNumber(Rational(p), Rational(q), Int(d));
}

Location on_wall_at(std::size_t i) { return Location{true, i}; }
Location in_sector(std::size_t i) { return Location{false, i}; }

// The guide fan used throughout: levels b-1, b, b+1 of the steep family
// on the split threefold with e = (1, 0) at level b = 2.
ChamberDecomposition guide_fan() {
  const auto X = RuledThreefold::split_bundle(1, 0);
  const CycleClass c2{3, -4};
  std::vector<WallCheck> checks;
  for (long b = 1; b <= 3; ++b)
    checks.push_back(wall_check(X, DivisorClass{-1, Int(2 * b)}, div_S(), c2));
  return build_decomposition(checks);
}

}  // namespace

TEST_CASE("guide fan: rays ascend, wall flags ride along") {
  const auto dec = guide_fan();
  REQUIRE(dec.rays.size() == 3);
  CHECK(dec.rays[0].slope == surd(1, 1, 2));   // 1 + sqrt(2)
  CHECK(dec.rays[1].slope == surd(3, 2, 3));   // 3 + 2*sqrt(3)
  CHECK(dec.rays[2].slope == surd(5, 1, 30));  // 5 + sqrt(30)
  // Level b-1 cuts a guide ray only: its cycle class 2SH - 3H^2 is not
  // pseudo-effective, the two higher levels are genuine walls.
  REQUIRE(dec.rays[0].walls.size() == 1);
  CHECK(dec.rays[0].walls.front().xi == DivisorClass{-1, 2});
  CHECK_FALSE(dec.rays[0].is_wall());
  CHECK(dec.rays[1].is_wall());
  CHECK(dec.rays[2].is_wall());
}

TEST_CASE("classes without a positive ray are skipped") {
  const auto X = RuledThreefold::split_bundle(0, 0);
  // At b = 1 the level-0 class -S has ray polynomial -t^2: no positive root.
  std::vector<WallCheck> checks;
  for (long b = 0; b <= 2; ++b)
    checks.push_back(
        wall_check(X, DivisorClass{-1, Int(2 * b)}, div_S(), CycleClass{2, -1}));
  const auto dec = build_decomposition(checks);
  REQUIRE(dec.rays.size() == 2);
  CHECK(dec.rays[0].slope == QuadraticNumber(Rational(4)));
  CHECK(dec.rays[1].slope == QuadraticNumber(Rational(8)));
}

TEST_CASE("coincident rays merge into a single ray") {
  // On the product threefold, -S+4H and its triple -3S+12H vanish on the
  // same ray (slope 8); only the former has a pseudo-effective cycle class.
  const auto X = RuledThreefold::split_bundle(0, 0);
  const CycleClass c2{6, 0};
  const auto w1 = wall_check(X, DivisorClass{-1, 4}, div_S(), c2);
  const auto w2 = wall_check(X, DivisorClass{-3, 12}, div_S(), c2);
  REQUIRE(w1.is_wall);
  REQUIRE_FALSE(w2.is_wall);
  REQUIRE(w1.rays.size() == 1);
  REQUIRE(w2.rays.size() == 1);
  REQUIRE(w1.rays.front() == w2.rays.front());

  const auto dec = build_decomposition({w1, w2});
  REQUIRE(dec.rays.size() == 1);
  CHECK(dec.rays[0].slope == QuadraticNumber(Rational(8)));
  REQUIRE(dec.rays[0].walls.size() == 2);
  CHECK(dec.rays[0].walls[0].xi == DivisorClass{-1, 4});
  CHECK(dec.rays[0].walls[1].xi == DivisorClass{-3, 12});
  CHECK(dec.rays[0].is_wall());  // one genuine wall suffices

  CHECK(locate(dec, DivisorClass{1, 8}) == on_wall_at(0));
  CHECK(locate(dec, DivisorClass{1, 7}) == in_sector(0));
  CHECK(locate(dec, DivisorClass{1, 9}) == in_sector(1));

  // A literal duplicate merges the same way.
  const auto twice = build_decomposition({w1, w1});
  REQUIRE(twice.rays.size() == 1);
  CHECK(twice.rays[0].walls.size() == 2);
}

TEST_CASE("locate by exact slope") {
  const auto dec = guide_fan();
  CHECK(locate(dec, DivisorClass{1, 2}) == in_sector(0));   // 2 < 1+sqrt(2)
  CHECK(locate(dec, DivisorClass{1, 3}) == in_sector(1));
  CHECK(locate(dec, DivisorClass{2, 6}) == in_sector(1));   // scale invariant
  CHECK(locate(dec, DivisorClass{1, 7}) == in_sector(2));
  CHECK(locate(dec, DivisorClass{1, 11}) == in_sector(3));
  CHECK_THROWS_AS(locate(dec, DivisorClass{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(locate(dec, DivisorClass{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(locate(dec, DivisorClass{-1, 3}), std::invalid_argument);

  // Rational rays can be hit exactly.
  const auto X = RuledThreefold::split_bundle(0, 0);
  std::vector<WallCheck> checks;
  for (long b = 1; b <= 2; ++b)
    checks.push_back(
        wall_check(X, DivisorClass{-1, Int(2 * b)}, div_S(), CycleClass{2, -1}));
  const auto flat = build_decomposition(checks);
  CHECK(locate(flat, DivisorClass{1, 4}) == on_wall_at(0));
  CHECK(locate(flat, DivisorClass{3, 12}) == on_wall_at(0));
  CHECK(locate(flat, DivisorClass{1, 8}) == on_wall_at(1));
  CHECK(locate(flat, DivisorClass{1, 6}) == in_sector(1));

  const ChamberDecomposition empty;
  CHECK(locate(empty, DivisorClass{5, 1}) == in_sector(0));
}

TEST_CASE("lexicographically least integer polarization per sector") {
  const auto dec = guide_fan();
  const Int amax(4);
  // Sector 0: slopes below 1 + sqrt(2); the certificate needs beta >= 2.
  CHECK(*integer_polarization_in(dec, 0, amax) == DivisorClass{1, 2});
  // Sector 1 and 2 are the two chambers between the guide rays.
  CHECK(*integer_polarization_in(dec, 1, amax) == DivisorClass{1, 3});
  CHECK(*integer_polarization_in(dec, 2, amax) == DivisorClass{1, 7});
  // Top sector: anything above 5 + sqrt(30).
  CHECK(*integer_polarization_in(dec, 3, amax) == DivisorClass{1, 11});
  CHECK_THROWS_AS(integer_polarization_in(dec, 4, amax),
                  std::invalid_argument);

  const ChamberDecomposition empty;
  CHECK(*integer_polarization_in(empty, 0, Int(1)) == DivisorClass{1, 2});
}

TEST_CASE("narrow sector needs a deeper denominator") {
  // Synthetic fan with rays 9/2 and 5: no integer slope lies between them
  // at alpha <= 2, the first hit is (3, 14).
  WallCheck w1, w2;
  w1.xi = DivisorClass{-2, 9};
  w1.rays = {QuadraticNumber(Rational(Int(9), Int(2)))};
  w2.xi = DivisorClass{-1, 5};
  w2.rays = {QuadraticNumber(Rational(5))};
  const auto dec = build_decomposition({w1, w2});
  CHECK_FALSE(integer_polarization_in(dec, 1, Int(2)).has_value());
  CHECK(*integer_polarization_in(dec, 1, Int(4)) == DivisorClass{3, 14});
}

TEST_CASE("integer polarization agrees with a lexicographic brute scan") {
  const auto X = RuledThreefold::split_bundle(0, 0);
  std::vector<WallCheck> checks;
  for (long m = 1; m <= 5; ++m)  // walls with rational rays 4m
    checks.push_back(
        wall_check(X, DivisorClass{-1, Int(2 * m)}, div_S(), CycleClass{6, 0}));
  const auto dec = build_decomposition(checks);
  REQUIRE(dec.rays.size() == 5);

  const Int amax(4);
  for (std::size_t s = 0; s <= dec.rays.size(); ++s) {
    std::optional<DivisorClass> brute;
    for (Int alpha = 1; alpha <= amax && !brute; alpha += 1)
      for (Int beta = 2; beta <= 200; beta += 1) {
        const DivisorClass L{alpha, beta};
        if (locate(dec, L) != in_sector(s)) continue;
        brute = L;
        break;
      }
    const auto got = integer_polarization_in(dec, s, amax);
    REQUIRE(got.has_value());
    REQUIRE(brute.has_value());
    CHECK(*got == *brute);
    CHECK(locate(dec, *got) == in_sector(s));
  }
}

TEST_CASE("locate: random slopes against a direct rational comparison") {
  const auto X = RuledThreefold::split_bundle(0, 0);
  std::vector<WallCheck> checks;
  for (long m = 1; m <= 5; ++m)
    checks.push_back(
        wall_check(X, DivisorClass{-1, Int(2 * m)}, div_S(), CycleClass{6, 0}));
  const auto dec = build_decomposition(checks);  // rays 4, 8, 12, 16, 20

  std::mt19937_64 rng(0x10CA7E5EED);
  std::uniform_int_distribution<long> apick(1, 9);
  std::uniform_int_distribution<long> bpick(1, 99);
  std::uniform_int_distribution<long> kpick(2, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    const long alpha = apick(rng), beta = bpick(rng);
    const DivisorClass L{Int(alpha), Int(beta)};
    const Location loc = locate(dec, L);
    // Direct oracle: rays are the integers 4m, so compare beta with 4m*alpha.
    std::size_t below = 0;
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < 5; ++i) {
      const long ray = 4 * (long(i) + 1);
      if (beta == ray * alpha) hit = i;
      if (beta > ray * alpha) ++below;
    }
    if (hit)
      CHECK(loc == on_wall_at(*hit));
    else
      CHECK(loc == in_sector(below));
    // Scale invariance.
    const long k = kpick(rng);
    CHECK(locate(dec, DivisorClass{Int(k * alpha), Int(k * beta)}) == loc);
  }
}
