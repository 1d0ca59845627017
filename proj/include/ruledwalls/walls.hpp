#pragma once

// Numerical walls for rank-2 moduli of type (c1, c2) on a ruled threefold.
//
// A class xi = aS + hH cuts the wall W^xi = { L ample : xi . L^2 = 0 }.
// Restricted to the slope line L = S + tH this is the ray polynomial
//
//   P(t) = a t^2 + (2 a c1' + 2h) t + (a (c1'^2 - c2') + h c1'),
//
// so walls meet the positive quadrant in rays of exact surd slope.  A wall
// belongs to the type (c1, c2) when
//
//   * xi + c1 is divisible by 2 in the divisor lattice (parity),
//   * the cycle [Z] = c2 + (xi^2 - c1^2)/4 is pseudo-effective,
//   * P has a strictly positive root.
//
// Enumeration scans S-coefficient rows.  For fixed a < 0 the ray condition
// is a monotone bijection between slope and H-coefficient, so the candidates
// of a row form an exact surd interval; intersecting with the parity lattice,
// the linear bound z1 >= 0 and the quadratic bound c1' z1 + z2 >= 0 gives a
// finite candidate set per row.  Rows run to the caps; if the analysis shows
// integer candidates beyond them, enumeration refuses to silently drop them
// and raises TruncationError naming the first unexplored row.

#include <array>
#include <optional>

#include "ruledwalls/chow.hpp"

namespace ruledwalls {

struct Caps {
  Int a_max = 10;   // |S-coefficient| bound
  Int b_max = 100;  // |H-coefficient| bound
};

class TruncationError : public std::runtime_error {
 public:
  TruncationError(const Int& row, const std::string& msg)
      : std::runtime_error(msg), row_(row) {}
  const Int& first_unexplored_row() const { return row_; }

 private:
  Int row_;
};

struct WallCheck {
  DivisorClass xi{};
  bool parity_ok = false;
  std::optional<CycleClass> z_class;  // set when parity holds
  bool z_pseudo_effective = false;
  std::vector<QuadraticNumber> rays;  // distinct positive slopes, ascending
  bool is_wall = false;
};

// Slope interval with per-endpoint openness; all enumeration windows are
// bounded (unbounded sectors belong to the chamber module).
struct SlopeWindow {
  QuadraticNumber lo, hi;
  bool lo_open = true;
  bool hi_open = true;
  static SlopeWindow open(QuadraticNumber lo, QuadraticNumber hi) {
    return SlopeWindow{std::move(lo), std::move(hi), true, true};
  }
  static SlopeWindow closed(QuadraticNumber lo, QuadraticNumber hi) {
    return SlopeWindow{std::move(lo), std::move(hi), false, false};
  }
  bool contains(const QuadraticNumber& t) const;
};

// Ray polynomial coefficients (A, B, C) of P above.
std::array<Int, 3> slope_polynomial(const RuledThreefold& X,
                                    const DivisorClass& xi);

// [Z] = c2 + (xi^2 - c1^2)/4; throws std::domain_error when parity fails
// (the quarter is not integral then).
CycleClass z_class_of(const RuledThreefold& X, const DivisorClass& xi,
                      const DivisorClass& c1, const CycleClass& c2);

WallCheck wall_check(const RuledThreefold& X, const DivisorClass& xi,
                     const DivisorClass& c1, const CycleClass& c2);

// Sign of xi . L^2: +1 above the wall, -1 below, 0 on it.
int side_of_wall(const RuledThreefold& X, const DivisorClass& xi,
                 const DivisorClass& L);
// Same sign evaluated at an exact slope point S + tH, t > 0.
int side_at_slope(const RuledThreefold& X, const DivisorClass& xi,
                  const QuadraticNumber& t);

// The positive a with xi . (L1 + a L2)^2 = 0; requires L1 below and L2
// above the wall (std::invalid_argument otherwise).
QuadraticNumber separation_parameter(const RuledThreefold& X,
                                     const DivisorClass& xi,
                                     const DivisorClass& L1,
                                     const DivisorClass& L2);

// Finiteness sandwich: some s in {L1, L2, L1+L2} has
// (c1^2 - 4 c2) . s <= xi^2 . s < 0.
bool qin_sandwich(const RuledThreefold& X, const DivisorClass& xi,
                  const DivisorClass& c1, const CycleClass& c2,
                  const DivisorClass& L1, const DivisorClass& L2);

// Walls of type (c1, c2) with a ray inside the window, canonicalized to the
// negative-S-coefficient representative and sorted lexicographically by
// (a, h).  The optional pair switches on the qin_sandwich filter.  threads
// may fan rows out to a pool; results do not depend on the thread count.
std::vector<WallCheck> enumerate_wall_classes_window(
    const RuledThreefold& X, const DivisorClass& c1, const CycleClass& c2,
    const SlopeWindow& window, const Caps& caps,
    const std::optional<std::pair<DivisorClass, DivisorClass>>& qin_pair =
        std::nullopt,
    int threads = 1);

// Walls separating (or touching) the polarizations L1, L2: the window is
// the closed slope interval [slope L1, slope L2], so an endpoint counts
// exactly when the polarization sits on the wall.  Both polarizations must
// lie in the open positive quadrant.
std::vector<WallCheck> enumerate_wall_classes(const RuledThreefold& X,
                                              const DivisorClass& c1,
                                              const CycleClass& c2,
                                              const DivisorClass& L1,
                                              const DivisorClass& L2,
                                              const Caps& caps,
                                              int threads = 1);

struct CConditionReport {
  Int h2_xi;                 // h^2(X, O(xi))
  Int normal_twist_degree;   // (D1 + D2 + xi) . D1 . D2
  Int h0_on_Z;               // degree + 1 on a rational curve, 0 if negative
  bool satisfied = false;    // h2_xi == 0 and h0_on_Z > 0
};

// Hartshorne-Serre style existence test along Z = D1 cap D2.  The factors
// must multiply to the z-class of the wall (std::invalid_argument if not);
// X needs a split type for the h^2 evaluation.
CConditionReport check_c_condition(const RuledThreefold& X,
                                   const DivisorClass& xi,
                                   const DivisorClass& c1,
                                   const CycleClass& c2,
                                   const DivisorClass& d1,
                                   const DivisorClass& d2);

}  // namespace ruledwalls
