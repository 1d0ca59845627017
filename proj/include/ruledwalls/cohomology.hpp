#pragma once

// Sheaf cohomology dimensions used by the moduli bookkeeping.
//
// Everything reduces to the plane:
//   h^0(P^2, O(d)) = C(d+2, 2) for d >= 0,  h^1 = 0,
//   h^2(P^2, O(d)) = C(-d-1, 2) for d <= -3.
//
// On X = P(E) with E = O(e1) + O(e2), pushforward along the fibration gives
//   h^i(X, O(aS + bH)) = sum_{j=0..a} h^i(P^2, O(j e1 + (a-j) e2 + b))
// for a >= 0; the twist a = -1 has no cohomology at all, and a <= -2 is
// Serre duality  h^i(D) = h^{3-i}(K_X - D), whose right side lands back in
// the a >= 0 regime.  The split type is required: these formulas are the
// split-bundle bridge, not statements about arbitrary E.

#include <array>

#include "ruledwalls/chow.hpp"

namespace ruledwalls {

// h^i(P^2, O(d)); i must be 0, 1 or 2.
Int h_plane(const Int& d, int i);

// h^i(X, O(aS + bH)); i must be 0..3, X.split must be present.
Int h_line_bundle(const RuledThreefold& X, const DivisorClass& d, int i);

// (h^0, h^1, h^2, h^3) of O(aS + bH).
std::array<Int, 4> cohomology_vector(const RuledThreefold& X,
                                     const DivisorClass& d);

// Alternating sum of the vector above.
Int euler_characteristic(const RuledThreefold& X, const DivisorClass& d);

// h^0(P^2, E(t)) for the split bundle.
Int bundle_h0(const RuledThreefold& X, const Int& twist);

}  // namespace ruledwalls
