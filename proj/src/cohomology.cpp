#include "ruledwalls/cohomology.hpp"

namespace ruledwalls {

static Int binom2(const Int& n) {
  return n >= 2 ? Int(n * (n - 1) / 2) : Int(0);
}

Int h_plane(const Int& d, int i) {
  switch (i) {
    case 0:
      return d >= 0 ? binom2(d + 2) : Int(0);
    case 1:
      return 0;
    case 2:
      return d <= -3 ? binom2(-d - 1) : Int(0);
    default:
      throw std::invalid_argument("h_plane: index must be 0, 1 or 2");
  }
}

Int h_line_bundle(const RuledThreefold& X, const DivisorClass& d, int i) {
  if (!X.split)
    throw std::invalid_argument("h_line_bundle: split type required");
  if (i < 0 || i > 3)
    throw std::invalid_argument("h_line_bundle: index must be 0..3");
  if (d.a >= 0) {
    if (i == 3) return 0;  // fibration over a surface: nothing above h^2
    const auto& [e1, e2] = *X.split;
    Int total = 0;
    for (Int j = 0; j <= d.a; ++j) {
      total += h_plane(j * e1 + (d.a - j) * e2 + d.b, i);
    }
    return total;
  }
  if (d.a == -1) return 0;  // the dual-free twist: acyclic line bundle
  // a <= -2: Serre duality lands in the a >= 0 regime above
  return h_line_bundle(X, canonical_divisor(X) - d, 3 - i);
}

std::array<Int, 4> cohomology_vector(const RuledThreefold& X,
                                     const DivisorClass& d) {
  return {h_line_bundle(X, d, 0), h_line_bundle(X, d, 1),
          h_line_bundle(X, d, 2), h_line_bundle(X, d, 3)};
}

Int euler_characteristic(const RuledThreefold& X, const DivisorClass& d) {
  auto h = cohomology_vector(X, d);
  return h[0] - h[1] + h[2] - h[3];
}

Int bundle_h0(const RuledThreefold& X, const Int& twist) {
  if (!X.split) throw std::invalid_argument("bundle_h0: split type required");
  return h_plane(X.split->first + twist, 0) +
         h_plane(X.split->second + twist, 0);
}

}  // namespace ruledwalls
