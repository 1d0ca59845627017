#pragma once

// Numerical intersection ring of a ruled threefold X = P(E) over the
// projective plane, E a rank-2 bundle with Chern data (c1', c2').
//
// Divisors are written against the basis {S, H}: S the tautological class,
// H the pullback of a line.  Codimension-2 cycles are written against
// {S*H, H^2}.  The ring relations
//
//   H^3 = 0,   S*H^2 = 1,   S^2*H = c1',   S^2 = c1'*S*H - c2'*H^2
//
// determine every product; in particular S^3 = c1'^2 - c2'.  All products
// reduce to the two-dimensional cycle basis and then pair with a divisor
// a*S + b*H through  z1*(c1'*a + b) + z2*a.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ruledwalls/exact.hpp"

namespace ruledwalls {

struct RuledThreefold {
  Int c1p;  // c1(E) in H-units
  Int c2p;  // c2(E) in points
  // (e1, e2) with e1 >= e2 when E = O(e1) + O(e2); cohomology needs this,
  // the ring does not.
  std::optional<std::pair<Int, Int>> split;

  // Chern data only; enforces 0 <= c2' <= c1'^2 and c1' >= 0 (the positivity
  // window every statement in this library assumes).
  static RuledThreefold from_chern(const Int& c1p, const Int& c2p);
  // Split bundle O(e1) + O(e2); arguments may come in either order.
  static RuledThreefold split_bundle(const Int& e1, const Int& e2);
};

struct DivisorClass {
  Int a;  // coefficient of S
  Int b;  // coefficient of H
  bool operator==(const DivisorClass&) const = default;
  std::string str() const;  // e.g. "-S + 2H"
};

struct CycleClass {
  Int z1;  // coefficient of S*H
  Int z2;  // coefficient of H^2
  bool operator==(const CycleClass&) const = default;
  std::string str() const;  // e.g. "SH - 4H^2"
};

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x);
DivisorClass operator*(const Int& k, const DivisorClass& x);
CycleClass operator+(const CycleClass& x, const CycleClass& y);
CycleClass operator-(const CycleClass& x, const CycleClass& y);
CycleClass operator*(const Int& k, const CycleClass& x);

// Product of two divisors reduced to the {S*H, H^2} basis.
CycleClass reduce_product(const RuledThreefold& X, const DivisorClass& d1,
                          const DivisorClass& d2);
// List form; exactly two factors, anything else throws std::invalid_argument.
CycleClass reduce_product(const RuledThreefold& X,
                          const std::vector<DivisorClass>& factors);

// Pairing of a reduced cycle with a divisor: z1*(c1'*a + b) + z2*a.
Int cycle_dot(const RuledThreefold& X, const CycleClass& z,
              const DivisorClass& d);

// Full triple product; equals cycle_dot(reduce_product(d1, d2), d3) under
// any grouping of the factors.
Int triple_product(const RuledThreefold& X, const DivisorClass& d1,
                   const DivisorClass& d2, const DivisorClass& d3);

// K_X = -2S + (c1' - 3)H.
DivisorClass canonical_divisor(const RuledThreefold& X);

// Sufficient ampleness certificate: a >= 1 and b >= 2.
bool certified_ample(const RuledThreefold& X, const DivisorClass& d);

// z is nonnegative against every divisor in the open positive quadrant:
// z1 >= 0 and c1'*z1 + z2 >= 0.
bool cycle_pseudo_effective(const RuledThreefold& X, const CycleClass& z);

inline DivisorClass div_S() { return DivisorClass{1, 0}; }
inline DivisorClass div_H() { return DivisorClass{0, 1}; }

}  // namespace ruledwalls
