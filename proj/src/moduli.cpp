#include "ruledwalls/moduli.hpp"

#include <algorithm>
#include <utility>

namespace ruledwalls {

namespace {

const char* kParityReason = "parity gate fails";
const char* kPeReason = "cycle class not pseudo-effective";

bool in_quadrant(const DivisorClass& L) {
  return sign_of(L.a) > 0 && sign_of(L.b) > 0;
}

}  // namespace

DivisorClass xi_l(const Int& l) { return DivisorClass{-1, 2 * l}; }

WallFamily wall_family(const RuledThreefold& X, const Int& b,
                       FamilyVariant variant) {
  if (b < X.c1p + 1)
    throw std::invalid_argument("wall_family: b must be at least c1' + 1");
  WallFamily fam;
  fam.b = b;
  fam.variant = variant;
  fam.c1 = div_S();
  fam.c2 = variant == FamilyVariant::A ? CycleClass{b + 1, -b * b}
                                       : CycleClass{b, -b * b};
  return fam;
}

WallVerification verify_xi_b_wall(const RuledThreefold& X,
                                  const WallFamily& fam, const Int& t_max) {
  if (t_max < 1)
    throw std::invalid_argument("verify_xi_b_wall: t_max must be >= 1");
  WallVerification v;
  v.wall = wall_check(X, xi_l(fam.b), fam.c1, fam.c2);
  if (fam.variant == FamilyVariant::A) {
    v.wall_up = wall_check(X, xi_l(fam.b + 1), fam.c1, fam.c2);
    v.z_up_crossref = Int(2 * (fam.b + 1));
  }

  for (Int t = -t_max; t <= t_max; t += 1) {
    if (t == 0) continue;
    const auto wc = wall_check(X, t * xi_l(fam.b), fam.c1, fam.c2);
    ScanEntry e;
    e.t = t;
    e.retained = wc.parity_ok && wc.z_pseudo_effective;
    if (!wc.parity_ok)
      e.reason = kParityReason;
    else if (!wc.z_pseudo_effective)
      e.reason = kPeReason;
    if (e.retained) v.retained.push_back(t);
    v.scan.push_back(std::move(e));
  }
  v.scan_clean = v.retained == std::vector<Int>{Int(-1), Int(1)};

  v.h0_clause_applicable = fam.variant == FamilyVariant::A;
  if (v.h0_clause_applicable && X.split) {
    v.c_up = check_c_condition(X, xi_l(fam.b), fam.c1, fam.c2, div_S(),
                               div_H());
    v.c_down = check_c_condition(X, -xi_l(fam.b), fam.c1, fam.c2, div_S(),
                                 div_H());
  }

  v.pass = v.wall.is_wall && !v.wall.rays.empty() && v.scan_clean;
  if (fam.variant == FamilyVariant::A) {
    if (v.c_up) v.pass = v.pass && v.c_up->satisfied;
    if (v.c_down) v.pass = v.pass && v.c_down->h0_on_Z == 0;
  } else {
    v.pass = v.pass && v.wall.z_class == CycleClass{0, 0};
  }
  return v;
}

Ext1Table ext1_table(const RuledThreefold& X, const Int& b) {
  if (b < 1) throw std::invalid_argument("ext1_table: b must be >= 1");
  const DivisorClass K = canonical_divisor(X);
  Ext1Table t;
  t.b = b;
  t.h2_pullback_high = h_line_bundle(X, DivisorClass{0, -2 * b} + K, 2);
  t.h3_pullback_low = h_line_bundle(X, DivisorClass{0, -(2 * b + 1)} + K, 3);
  t.h3_pullback_high = h_line_bundle(X, DivisorClass{0, -2 * b} + K, 3);
  t.h2_taut_low = h_line_bundle(X, DivisorClass{1, -(2 * b + 1)} + K, 2);
  t.h3_taut_low = h_line_bundle(X, DivisorClass{1, -(2 * b + 1)} + K, 3);
  t.h3_taut_high = h_line_bundle(X, DivisorClass{1, -2 * b} + K, 3);
  t.ext1_computed = t.h3_pullback_low - t.h3_pullback_high;
  t.ext1_crossref = 2 * b + 1;
  return t;
}

ComponentDimension component_dimension(const RuledThreefold& X,
                                       const WallFamily& fam) {
  if (fam.variant != FamilyVariant::A)
    throw std::invalid_argument("component_dimension: variant A only");
  if (!X.split)
    throw std::invalid_argument("component_dimension: split type required");
  const Int sections = bundle_h0(X, 0) - bundle_h0(X, -1) - 1;
  const Ext1Table t = ext1_table(X, fam.b);
  ComponentDimension d;
  d.dim_computed = t.ext1_computed + sections - 1;
  d.dim_crossref = 2 * fam.b + sections;
  return d;
}

Int bn_range(const Int& b) { return h_plane(b, 0); }

ModuliReport classify_moduli(const RuledThreefold& X, const WallFamily& fam,
                             const DivisorClass& L) {
  if (!in_quadrant(L))
    throw std::invalid_argument(
        "classify_moduli: polarization must lie in the open positive "
        "quadrant");
  ModuliReport r;
  r.polarization = L;
  r.side_upper = side_of_wall(X, xi_l(fam.b + 1), L);
  r.side_mid = side_of_wall(X, xi_l(fam.b), L);
  r.side_lower = side_of_wall(X, xi_l(fam.b - 1), L);
  r.cone_model_only = !certified_ample(X, L);

  if (fam.variant == FamilyVariant::B) {
    if (r.side_mid <= 0) {
      r.verdict = ModuliVerdict::Empty;
      if (r.side_mid == 0) r.notes.push_back("on the wall of xi_b");
    } else {
      r.verdict = ModuliVerdict::OutsideCoverage;
      r.notes.push_back("above the wall of xi_b: outside certified coverage");
    }
  } else if (r.side_upper <= 0) {
    r.verdict = ModuliVerdict::Empty;
    if (r.side_upper == 0) r.notes.push_back("on the wall of xi_{b+1}");
  } else if (r.side_mid < 0) {
    r.verdict = ModuliVerdict::ComponentChamber;
    r.notes.push_back(
        "moduli space contains the extension component along xi_b");
    if (X.split)
      r.dims = component_dimension(X, fam);
    else
      r.notes.push_back("component dimension requires a split bundle model");
    r.bn_k_max = bn_range(fam.b);
  } else if (r.side_mid == 0) {
    r.verdict = ModuliVerdict::OnWall;
    r.notes.push_back(
        "on the wall of xi_b: extensions along xi_b are strictly semistable");
  } else if (r.side_lower < 0) {
    r.verdict = ModuliVerdict::ComplementChamber;
    r.notes.push_back(
        "complement chamber: the component-chamber moduli minus the "
        "extension component");
  } else {
    r.verdict = ModuliVerdict::OutsideCoverage;
    r.notes.push_back(
        "above the wall of xi_{b-1}: outside certified coverage");
  }
  if (r.cone_model_only)
    r.notes.push_back(
        "certified-ampleness box not met: cone-position classification only");
  return r;
}

namespace {

// Shared exclusion chain of the structured candidate scan; returns the wall
// check so the case-specific certification can inspect the rays.
WallCheck scan_candidate(const RuledThreefold& X, const WallFamily& fam,
                         const SlopeWindow& upper, const SlopeWindow& lower,
                         const DivisorClass& eta, CaseFamilyReport& rep) {
  ++rep.checked;
  const auto wc = wall_check(X, eta, fam.c1, fam.c2);
  if (wc.rays.empty()) {
    ++rep.no_positive_ray;
  } else if (!wc.is_wall) {
    ++rep.not_pseudo_effective;
  } else {
    bool inside = false;
    for (const auto& ray : wc.rays)
      inside = inside || upper.contains(ray) || lower.contains(ray);
    if (!inside)
      ++rep.ray_outside_windows;
    else if (!rep.counterexample)
      rep.counterexample = eta;
  }
  return wc;
}

}  // namespace

IntermediateWallReport verify_no_intermediate_walls(const RuledThreefold& X,
                                                    const WallFamily& fam,
                                                    const Caps& caps,
                                                    int threads) {
  if (fam.variant != FamilyVariant::A)
    throw std::invalid_argument(
        "verify_no_intermediate_walls: variant A only");
  const Int b = fam.b;
  const auto mid = wall_check(X, xi_l(b), fam.c1, fam.c2);
  const auto up = wall_check(X, xi_l(b + 1), fam.c1, fam.c2);
  const auto down = wall_check(X, xi_l(b - 1), fam.c1, fam.c2);
  if (mid.rays.empty() || up.rays.empty())
    throw std::runtime_error(
        "verify_no_intermediate_walls: bounding rays missing");

  IntermediateWallReport rep;
  rep.upper_window = SlopeWindow::open(mid.rays.front(), up.rays.front());
  rep.lower_window = SlopeWindow::open(
      down.rays.empty() ? QuadraticNumber(Rational(0)) : down.rays.front(),
      mid.rays.front());
  rep.upper_offenders = enumerate_wall_classes_window(
      X, fam.c1, fam.c2, rep.upper_window, caps, std::nullopt, threads);
  rep.lower_offenders = enumerate_wall_classes_window(
      X, fam.c1, fam.c2, rep.lower_window, caps, std::nullopt, threads);
  for (int i = 0; i < 5; ++i) rep.cases[i].id = i + 1;

  // Case 1: -S + 2pH, p >= b+2.  Every positive ray sits strictly beyond
  // the xi_{b+1} ray (negative side), hence outside both windows.
  if (caps.a_max >= 1) {
    auto& c = rep.cases[0];
    for (Int p = b + 2; 2 * p <= caps.b_max; p += 1) {
      const DivisorClass eta{-1, 2 * p};
      const auto wc = scan_candidate(X, fam, rep.upper_window,
                                     rep.lower_window, eta, c);
      for (const auto& ray : wc.rays)
        c.reason_certified =
            c.reason_certified && side_at_slope(X, xi_l(b + 1), ray) < 0;
    }
  }

  // Case 2: -S + 2pH, 0 <= p <= b-1.  p = 0 cuts no positive ray; p >= 1
  // stays strictly above the xi_b wall (positive side).
  if (caps.a_max >= 1) {
    auto& c = rep.cases[1];
    for (Int p = 0; p <= b - 1 && 2 * p <= caps.b_max; p += 1) {
      const DivisorClass eta{-1, 2 * p};
      const auto wc = scan_candidate(X, fam, rep.upper_window,
                                     rep.lower_window, eta, c);
      if (p == 0)
        c.reason_certified = c.reason_certified && wc.rays.empty();
      else
        for (const auto& ray : wc.rays)
          c.reason_certified =
              c.reason_certified && side_at_slope(X, xi_l(b), ray) > 0;
    }
  }

  // Case 3: -(2p+1)S + 2bH, p >= 1: strictly above the xi_b wall.
  {
    auto& c = rep.cases[2];
    for (Int p = 1; 2 * p + 1 <= caps.a_max && 2 * b <= caps.b_max; p += 1) {
      const DivisorClass eta{-(2 * p + 1), 2 * b};
      const auto wc = scan_candidate(X, fam, rep.upper_window,
                                     rep.lower_window, eta, c);
      for (const auto& ray : wc.rays)
        c.reason_certified =
            c.reason_certified && side_at_slope(X, xi_l(b), ray) > 0;
    }
  }

  // Case 4: -(2a+1)S + 2pH, a >= 1, 0 < p < b: strictly above the xi_b
  // wall (cases 2 and 3 combined).
  {
    auto& c = rep.cases[3];
    for (Int a = 1; 2 * a + 1 <= caps.a_max; a += 1)
      for (Int p = 1; p <= b - 1 && 2 * p <= caps.b_max; p += 1) {
        const DivisorClass eta{-(2 * a + 1), 2 * p};
        const auto wc = scan_candidate(X, fam, rep.upper_window,
                                       rep.lower_window, eta, c);
        for (const auto& ray : wc.rays)
          c.reason_certified =
              c.reason_certified && side_at_slope(X, xi_l(b), ray) > 0;
      }
  }

  // Case 5: -(2a+1)S + 2pH on the residual band (2a+1)b < p < (2a+1)(b+1).
  // The SH-coefficient of the cycle class, a(a+1)c1' + b + 1 - (2a+1)p, is
  // negative throughout, which is the pseudo-effectivity failure; the
  // stated uniform bound a(a+1)(c1' - 4b) + 1 < 0 certifies it for every a.
  {
    auto& c = rep.cases[4];
    for (Int a = 1; 2 * a + 1 <= caps.a_max; a += 1) {
      c.displayed_bound_certified =
          c.displayed_bound_certified &&
          a * (a + 1) * (X.c1p - 4 * b) + 1 < 0;
      for (Int p = (2 * a + 1) * b + 1;
           p <= (2 * a + 1) * (b + 1) - 1 && 2 * p <= caps.b_max; p += 1) {
        const DivisorClass eta{-(2 * a + 1), 2 * p};
        const auto wc = scan_candidate(X, fam, rep.upper_window,
                                       rep.lower_window, eta, c);
        c.reason_certified = c.reason_certified && wc.z_class.has_value() &&
                             wc.z_class->z1 < 0;
      }
    }
  }

  rep.pass = rep.upper_offenders.empty() && rep.lower_offenders.empty();
  for (const auto& c : rep.cases)
    rep.pass = rep.pass && !c.counterexample && c.reason_certified &&
               c.displayed_bound_certified;
  return rep;
}

DecompositionReport decomposition_report(const RuledThreefold& X,
                                         const WallFamily& fam,
                                         const Int& alpha_max) {
  if (fam.variant != FamilyVariant::A)
    throw std::invalid_argument("decomposition_report: variant A only");
  const Int b = fam.b;
  const std::vector<WallCheck> fan_checks = {
      wall_check(X, xi_l(b - 1), fam.c1, fam.c2),
      wall_check(X, xi_l(b), fam.c1, fam.c2),
      wall_check(X, xi_l(b + 1), fam.c1, fam.c2),
  };
  if (fan_checks[1].rays.empty() || fan_checks[2].rays.empty())
    throw std::runtime_error("decomposition_report: bounding rays missing");

  DecompositionReport rep;
  rep.fan = build_decomposition(fan_checks);
  rep.mid_ray_index = rep.fan.rays.size();
  for (std::size_t i = 0; i < rep.fan.rays.size(); ++i)
    if (qn_compare(rep.fan.rays[i].slope, fan_checks[1].rays.front()) == 0)
      rep.mid_ray_index = i;
  if (rep.mid_ray_index == rep.fan.rays.size())
    throw std::runtime_error("decomposition_report: mid ray not in the fan");

  const auto in_component =
      integer_polarization_in(rep.fan, rep.mid_ray_index + 1, alpha_max);
  const auto in_complement =
      integer_polarization_in(rep.fan, rep.mid_ray_index, alpha_max);
  if (!in_component || !in_complement)
    throw std::runtime_error(
        "decomposition_report: no integer polarization up to alpha_max");
  rep.polarization_component = *in_component;
  rep.polarization_complement = *in_complement;

  const auto L = rep.polarization_component;
  const auto Lp = rep.polarization_complement;
  rep.f_component = triple_product(X, xi_l(b + 1), L, L);
  rep.g_component = triple_product(X, xi_l(b), L, L);
  rep.f_complement = triple_product(X, xi_l(b), Lp, Lp);
  rep.g_complement = triple_product(X, xi_l(b - 1), Lp, Lp);

  if (X.split) rep.dims = component_dimension(X, fam);

  const std::string tag = "(2; S, " + fam.c2.str() + ")";
  const std::string level = fam.b.get_str();
  rep.statement = "M_{C_" + level + "}" + tag + " = M_{C'_" + level + "}" +
                  tag + " ⊔ E_{xi_" + level + "}" + tag;
  if (rep.dims)
    rep.statement += "; dim E_{xi_" + level + "} = " +
                     rep.dims->dim_computed.get_str() + " (crossref " +
                     rep.dims->dim_crossref.get_str() + ")";

  rep.pass = rep.f_component > 0 && rep.g_component < 0 &&
             rep.f_complement > 0 && rep.g_complement < 0;
  return rep;
}

}  // namespace ruledwalls
