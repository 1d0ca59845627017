#pragma once

// Chamber decomposition of the polarization quadrant.
//
// A finite set of classes with positive rays slices the open positive
// quadrant { alpha S + beta H : alpha, beta > 0 } into sectors by slope
// beta / alpha.  Rays are indexed ascending; sector i is the open cone
// strictly between ray i-1 and ray i, with sector 0 below the first ray and
// sector rays.size() above the last.  Ray sources need not pass the full
// wall test: non-wall guide rays take part in the slicing and carry their
// checks along.

#include "ruledwalls/walls.hpp"

namespace ruledwalls {

struct ChamberRay {
  QuadraticNumber slope;         // > 0
  std::vector<WallCheck> walls;  // every check cutting this ray, input order
  // True when at least one attached check passed the full wall test.
  bool is_wall() const;
};

struct ChamberDecomposition {
  std::vector<ChamberRay> rays;  // strictly ascending slopes
};

struct Location {
  bool on_wall = false;
  std::size_t index = 0;  // ray index if on_wall, sector index otherwise
  bool operator==(const Location&) const = default;
};

// Slices the quadrant along every positive ray of the given checks.  Checks
// without a positive ray are skipped; a check with two positive rays
// contributes two entries; several checks cutting the same exact ray are
// merged into one entry with all of them attached, in input order.
ChamberDecomposition build_decomposition(const std::vector<WallCheck>& checks);

// Places a divisor of the open positive quadrant (both coordinates > 0,
// otherwise std::invalid_argument); depends on L only through its slope, so
// the answer is scale-invariant.
Location locate(const ChamberDecomposition& dec, const DivisorClass& L);

// Lexicographically least (alpha, beta) with alpha in 1..alpha_max, beta >= 2
// (the certified-ampleness box requires alpha >= 1 and beta >= 2), and slope
// strictly inside the sector; nullopt when no such point exists up to
// alpha_max.
std::optional<DivisorClass> integer_polarization_in(
    const ChamberDecomposition& dec, std::size_t sector, const Int& alpha_max);

}  // namespace ruledwalls
