#pragma once

// Wall families xi_b = -S + 2bH and the moduli-facing verdicts attached to
// them.
//
// For Chern data c1 = S and c2 = (b+1)SH - b^2 H^2 (variant A) or
// c2 = bSH - b^2 H^2 (variant B) with b >= c1' + 1, the level-b class
// xi_b cuts a wall whose two neighbouring chambers carry the certified
// statements:
//
//   * below the wall of xi_{b+1} (slopes beyond its ray) the moduli space is
//     empty; on the component chamber C_b between the rays of xi_b and
//     xi_{b+1} it is nonempty and contains the extension component along
//     xi_b; on the complement chamber C'_b between the rays of xi_{b-1} and
//     xi_b it equals the C_b moduli with that component removed.
//   * variant B certifies emptiness on and below the wall of xi_b only.
//
// Every verdict reduces to exact sign tests xi . L^2 against the three
// consecutive levels.  Where the cross-checked derivation states a constant
// that differs from the exact ring value, both are carried (field suffix
// _crossref), never merged.

#include <array>
#include <string>

#include "ruledwalls/chambers.hpp"
#include "ruledwalls/cohomology.hpp"

namespace ruledwalls {

// xi_l = -S + 2lH, the canonical representative of the level-l wall.
DivisorClass xi_l(const Int& l);

enum class FamilyVariant { A, B };

// Chern data of one wall family; build through wall_family, which enforces
// b >= c1' + 1 and fills c1 = S and the variant's second Chern class.
struct WallFamily {
  Int b;
  FamilyVariant variant = FamilyVariant::A;
  DivisorClass c1;
  CycleClass c2;
};

WallFamily wall_family(const RuledThreefold& X, const Int& b,
                       FamilyVariant variant);

// One step of the uniqueness scan over multiples t * xi_b.
struct ScanEntry {
  Int t;
  bool retained = false;  // parity holds and the cycle class is
                          // pseudo-effective
  std::string reason;     // empty when retained, else the failed gate
};

// Certificate that xi_b cuts the family's wall and is its only cutter.
struct WallVerification {
  WallCheck wall;                    // xi_b against the family's Chern data
  std::optional<WallCheck> wall_up;  // xi_{b+1}: lower boundary of C_b (A)
  // Cross-reference: the stated H^2 coefficient of the xi_{b+1} cycle class
  // is 2(b+1); the ring value is 2b+1 (variant A).
  std::optional<Int> z_up_crossref;
  std::vector<ScanEntry> scan;  // t in -t_max..-1, 1..t_max
  std::vector<Int> retained;    // the surviving multipliers, ascending
  bool scan_clean = false;      // retained == {-1, +1}
  // Existence test along Z (variant A with a split model): extensions exist
  // on the xi_b side, none on the -xi_b side.
  std::optional<CConditionReport> c_up;    // xi_b, factors (S, H)
  std::optional<CConditionReport> c_down;  // -xi_b, factors (S, H)
  bool h0_clause_applicable = true;        // false for variant B: [Z] = 0
  bool pass = false;
};

// Wall test + uniqueness scan + existence test for the family's wall.
// Throws std::invalid_argument for t_max < 1.
WallVerification verify_xi_b_wall(const RuledThreefold& X,
                                  const WallFamily& fam,
                                  const Int& t_max = Int(10));

// The six Koszul cohomology entries counting extensions along xi_b, all on
// twists of the canonical divisor K.  Needs a split model; the table is
// independent of the split type (pure H-twists push down to the plane, the
// S-twists are acyclic).
struct Ext1Table {
  Int b;
  Int h2_pullback_high;  // h^2 O_X(-2bH + K)        = 0
  Int h3_pullback_low;   // h^3 O_X(-(2b+1)H + K)    = h^0 O_{P2}(2b+1)
  Int h3_pullback_high;  // h^3 O_X(-2bH + K)        = h^0 O_{P2}(2b)
  Int h2_taut_low;       // h^2 O_X(S - (2b+1)H + K) = 0
  Int h3_taut_low;       // h^3 O_X(S - (2b+1)H + K) = 0
  Int h3_taut_high;      // h^3 O_X(S - 2bH + K)     = 0
  Int ext1_computed;     // h3_pullback_low - h3_pullback_high = 2b + 2
  Int ext1_crossref;     // stated count 2b + 1 (differing binomial
                         // convention for h^0 O_{P2}; see README)
};

Ext1Table ext1_table(const RuledThreefold& X, const Int& b);

// Dimension of the extension component along xi_b (variant A, split model):
// the computed value stacks ext1_computed on the section-parameter count
// h^0 E - h^0 E(-1) - 1; the crossref value is the stated chain
// 2b + h^0 E - h^0 E(-1) - 1.  The two differ by exactly one (the ext1
// convention gap).
struct ComponentDimension {
  Int dim_computed;
  Int dim_crossref;
};

ComponentDimension component_dimension(const RuledThreefold& X,
                                       const WallFamily& fam);

// Largest Brill-Noether index with nonempty locus W^k on the component
// chamber: C(b+2, 2) = h^0 O_{P2}(b).
Int bn_range(const Int& b);

enum class ModuliVerdict {
  Empty,              // on or beyond the emptiness wall
  OnWall,             // exactly on the wall of xi_b: strictly semistable
  ComponentChamber,   // inside C_b: nonempty with the extension component
  ComplementChamber,  // inside C'_b: the C_b moduli minus the component
  OutsideCoverage,    // beyond the certified region
};

struct ModuliReport {
  DivisorClass polarization;
  int side_upper = 0;  // sign of xi_{b+1} . L^2
  int side_mid = 0;    // sign of xi_b . L^2
  int side_lower = 0;  // sign of xi_{b-1} . L^2
  ModuliVerdict verdict = ModuliVerdict::OutsideCoverage;
  std::optional<ComponentDimension> dims;  // ComponentChamber, split model
  std::optional<Int> bn_k_max;             // ComponentChamber
  bool cone_model_only = false;  // in the open quadrant but outside the
                                 // certified-ampleness box (a>=1, b>=2)
  std::vector<std::string> notes;
};

// Classifies a polarization of the open positive quadrant by exact sign
// tests against the levels b-1, b, b+1.  Scale-invariant; throws
// std::invalid_argument outside the quadrant.
ModuliReport classify_moduli(const RuledThreefold& X, const WallFamily& fam,
                             const DivisorClass& L);

// One structured candidate family of the no-intermediate-wall certificate.
struct CaseFamilyReport {
  int id = 0;  // 1..5, see verify_no_intermediate_walls
  long checked = 0;
  long no_positive_ray = 0;
  long not_pseudo_effective = 0;
  long ray_outside_windows = 0;
  // The family's stated exclusion held for every candidate: Cases 1-4 pin
  // every positive ray strictly outside the window by a side test, Case 5
  // pins the pseudo-effectivity failure z1 < 0.
  bool reason_certified = true;
  // Case 5 only: a(a+1)(c1' - 4b) + 1 < 0 for every scanned a (the
  // displayed contradiction bound); true elsewhere.
  bool displayed_bound_certified = true;
  std::optional<DivisorClass> counterexample;
};

struct IntermediateWallReport {
  SlopeWindow upper_window;  // open (ray xi_b, ray xi_{b+1}): chamber C_b
  SlopeWindow lower_window;  // open (ray xi_{b-1} or 0, ray xi_b): C'_b
  std::vector<WallCheck> upper_offenders;  // expected empty
  std::vector<WallCheck> lower_offenders;  // expected empty
  std::array<CaseFamilyReport, 5> cases;
  bool pass = false;
};

// Certifies that no wall of the family's type cuts either chamber: both
// open windows enumerate to empty lists (within caps; TruncationError when
// the caps cannot cover a row), and the five structured candidate families
//   1: -S + 2pH          with p >= b+2          (ray beyond the xi_{b+1} ray)
//   2: -S + 2pH          with 0 <= p <= b-1     (ray above the xi_b wall;
//                                                p = 0 has no positive ray)
//   3: -(2p+1)S + 2bH    with p >= 1            (ray above the xi_b wall)
//   4: -(2a+1)S + 2pH    with a >= 1, 0 < p < b (ray above the xi_b wall)
//   5: -(2a+1)S + 2pH    with a >= 1 and
//      (2a+1)b < p < (2a+1)(b+1)                (cycle class never
//                                                pseudo-effective)
// are each excluded for their stated reason.  Ranges are clipped to the
// caps (|S-coefficient| <= a_max, |H-coefficient| <= b_max).  Variant A
// only (std::invalid_argument otherwise).
IntermediateWallReport verify_no_intermediate_walls(const RuledThreefold& X,
                                                    const WallFamily& fam,
                                                    const Caps& caps,
                                                    int threads = 1);

// The two-chamber picture around the wall of xi_b with integer witnesses.
struct DecompositionReport {
  ChamberDecomposition fan;   // rays of xi_{b-1} (when positive), xi_b,
                              // xi_{b+1}
  std::size_t mid_ray_index;  // index of the xi_b ray within the fan
  DivisorClass polarization_component;   // lex-least integer point of C_b
  DivisorClass polarization_complement;  // lex-least integer point of C'_b
  Int f_component;   // xi_{b+1} . L^2  > 0  (L above the xi_{b+1} wall)
  Int g_component;   // xi_b . L^2      < 0  (L below the xi_b wall)
  Int f_complement;  // xi_b . L'^2     > 0  (the destabilizing sign)
  Int g_complement;  // xi_{b-1} . L'^2 < 0
  std::optional<ComponentDimension> dims;  // split model only
  std::string statement;  // the set-theoretic decomposition
  bool pass = false;
};

// Exhibits integer polarizations in both chambers adjacent to the wall of
// xi_b with two-sided sign certificates f > 0 > g.  Variant A only; throws
// std::runtime_error when no integer point exists up to alpha_max.
DecompositionReport decomposition_report(const RuledThreefold& X,
                                         const WallFamily& fam,
                                         const Int& alpha_max = Int(4));

}  // namespace ruledwalls
