#pragma once

// Batch front end: instance configs, structured JSON reports, cone figures.
//
// A config names one instance (base threefold, wall family, polarizations,
// caps) plus output paths.  run_report drives every pipeline of the library
// against the instance and renders one deterministic document: identical
// configs produce identical bytes, independent of the thread count used for
// the wall enumeration.  Exact values are serialized as
// {p_num, p_den, q_num, q_den, d} quintuples alongside a 6-place decimal so
// downstream tools can re-verify exactness.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ruledwalls/moduli.hpp"

namespace ruledwalls {

struct InstanceConfig {
  // base
  Int c1p = 0;
  Int c2p = 0;
  std::optional<std::pair<Int, Int>> split;  // split type; must match c1p/c2p
  // family
  Int b = 1;
  FamilyVariant variant = FamilyVariant::A;
  // polarizations to classify
  std::vector<DivisorClass> polarizations;
  // caps
  Caps caps;           // wall enumeration caps
  Int t_max = 10;      // uniqueness-scan range
  Int alpha_max = 4;   // integer-polarization search width
  // outputs
  std::optional<std::string> json_path;
  std::optional<std::string> svg_path;
};

// Parses the single-file key-value config format: one `key = value` per
// line, `#` comments, blank lines ignored.  Keys:
//
//   c1p, c2p        Chern data of the base bundle (required)
//   split           "e1 e2" or "none" (optional; must match c1p/c2p)
//   b               family level (required)
//   variant         A | B (default A)
//   polarization    "alpha beta" (repeatable)
//   a_max, b_max    enumeration caps (defaults 10, 100)
//   t_max           uniqueness-scan range (default 10)
//   alpha_max       integer-polarization search width (default 4)
//   json, svg       output paths (optional)
//
// Unknown keys are errors, not warnings: a silently ignored setting would
// invalidate the verification claims attached to the report.  Throws
// std::invalid_argument with the offending line.
InstanceConfig parse_config_text(const std::string& text);
InstanceConfig parse_config_file(const std::string& path);

// Validates the base data and builds the threefold (split model when the
// split type is given).  Throws std::invalid_argument on inconsistent data.
RuledThreefold threefold_of(const InstanceConfig& config);

// The full document as pretty-printed JSON text with a trailing newline:
// instance echo, wall list with exact and decimal slopes, chamber
// decomposition with integer witnesses, one verdict block per polarization,
// extension-count table and component dimension (split models), the
// Brill-Noether range, and the three verification outcomes.  Blocks whose
// operation does not apply to the instance (variant B decomposition,
// non-split cohomology) are null with an explanatory note.  Pure function
// of the config; thread count only parallelizes the wall enumeration.
// Throws std::invalid_argument on validation errors and TruncationError
// when the caps cannot cover the enumeration.
std::string run_report(const InstanceConfig& config, int threads = 1);

// Standalone SVG of the positive polarization quadrant: one labeled line
// per fan ray (defining classes and 6-place decimal slope), the component
// and complement chambers shaded when mid_ray_index names the wall between
// them, one verdict-colored marker per classified polarization, and a
// legend.  An empty fan renders the bare quadrant.
std::string render_svg(const ChamberDecomposition& fan,
                       const std::optional<std::size_t>& mid_ray_index,
                       const std::vector<ModuliReport>& reports);

// render_svg to a file; throws std::runtime_error on an unwritable path.
void emit_svg(const ChamberDecomposition& fan,
              const std::optional<std::size_t>& mid_ray_index,
              const std::vector<ModuliReport>& reports,
              const std::string& path);

}  // namespace ruledwalls
