#include "ruledwalls/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ruledwalls {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---- config parsing ---------------------------------------------------------

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Int parse_int(const std::string& value, const std::string& line) {
  try {
    return Int(value, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("config: '" + value +
                                "' is not an integer in line '" + line + "'");
  }
}

std::pair<Int, Int> parse_int_pair(const std::string& value,
                                   const std::string& line) {
  std::istringstream in(value);
  std::string x, y, rest;
  if (!(in >> x >> y) || (in >> rest))
    throw std::invalid_argument("config: expected two integers in line '" +
                                line + "'");
  return {parse_int(x, line), parse_int(y, line)};
}

// ---- serialization helpers --------------------------------------------------

ordered_json surd_json(const QuadraticNumber& q) {
  ordered_json j;
  j["p_num"] = q.rational_part().num().get_str();
  j["p_den"] = q.rational_part().den().get_str();
  j["q_num"] = q.radical_coefficient().num().get_str();
  j["q_den"] = q.radical_coefficient().den().get_str();
  j["d"] = q.radicand().get_str();
  j["decimal"] = q.decimal(6);
  return j;
}

ordered_json window_json(const SlopeWindow& w) {
  ordered_json j;
  j["lo"] = surd_json(w.lo);
  j["hi"] = surd_json(w.hi);
  j["lo_open"] = w.lo_open;
  j["hi_open"] = w.hi_open;
  return j;
}

ordered_json wall_check_json(const WallCheck& w) {
  ordered_json j;
  j["class"] = w.xi.str();
  j["parity_ok"] = w.parity_ok;
  j["z_class"] = w.z_class ? ordered_json(w.z_class->str()) : nullptr;
  j["z_pseudo_effective"] = w.z_pseudo_effective;
  ordered_json rays = ordered_json::array();
  for (const auto& r : w.rays) rays.push_back(surd_json(r));
  j["rays"] = std::move(rays);
  j["is_wall"] = w.is_wall;
  return j;
}

ordered_json fan_json(const ChamberDecomposition& fan) {
  ordered_json rays = ordered_json::array();
  for (const auto& ray : fan.rays) {
    ordered_json j;
    j["slope"] = surd_json(ray.slope);
    j["is_wall"] = ray.is_wall();
    ordered_json classes = ordered_json::array();
    for (const auto& w : ray.walls) classes.push_back(w.xi.str());
    j["classes"] = std::move(classes);
    rays.push_back(std::move(j));
  }
  return rays;
}

const char* verdict_name(ModuliVerdict v) {
  switch (v) {
    case ModuliVerdict::Empty: return "empty";
    case ModuliVerdict::OnWall: return "on-wall";
    case ModuliVerdict::ComponentChamber: return "component-chamber";
    case ModuliVerdict::ComplementChamber: return "complement-chamber";
    case ModuliVerdict::OutsideCoverage: return "outside-coverage";
  }
  return "outside-coverage";
}

ordered_json dims_json(const ComponentDimension& d) {
  ordered_json j;
  j["dim_computed"] = d.dim_computed.get_str();
  j["dim_crossref"] = d.dim_crossref.get_str();
  return j;
}

ordered_json moduli_report_json(const ModuliReport& r) {
  ordered_json j;
  j["polarization"] = r.polarization.str();
  j["alpha"] = r.polarization.a.get_str();
  j["beta"] = r.polarization.b.get_str();
  j["side_upper"] = r.side_upper;
  j["side_mid"] = r.side_mid;
  j["side_lower"] = r.side_lower;
  j["verdict"] = verdict_name(r.verdict);
  j["dims"] = r.dims ? dims_json(*r.dims) : ordered_json(nullptr);
  j["bn_k_max"] = r.bn_k_max ? ordered_json(r.bn_k_max->get_str()) : nullptr;
  j["cone_model_only"] = r.cone_model_only;
  j["notes"] = r.notes;
  return j;
}

ordered_json c_condition_json(const CConditionReport& c) {
  ordered_json j;
  j["h2_xi"] = c.h2_xi.get_str();
  j["normal_twist_degree"] = c.normal_twist_degree.get_str();
  j["h0_on_Z"] = c.h0_on_Z.get_str();
  j["satisfied"] = c.satisfied;
  return j;
}

ordered_json wall_verification_json(const WallVerification& v) {
  ordered_json j;
  j["wall"] = wall_check_json(v.wall);
  j["wall_up"] = v.wall_up ? wall_check_json(*v.wall_up) : ordered_json(nullptr);
  j["z_up_computed"] = (v.wall_up && v.wall_up->z_class)
                           ? ordered_json(v.wall_up->z_class->str())
                           : nullptr;
  j["z_up_crossref_h2_coefficient"] =
      v.z_up_crossref ? ordered_json(v.z_up_crossref->get_str()) : nullptr;
  ordered_json scan = ordered_json::array();
  for (const auto& e : v.scan) {
    ordered_json s;
    s["t"] = e.t.get_str();
    s["retained"] = e.retained;
    s["reason"] = e.reason;
    scan.push_back(std::move(s));
  }
  j["scan"] = std::move(scan);
  ordered_json retained = ordered_json::array();
  for (const auto& t : v.retained) retained.push_back(t.get_str());
  j["retained"] = std::move(retained);
  j["scan_clean"] = v.scan_clean;
  j["c_up"] = v.c_up ? c_condition_json(*v.c_up) : ordered_json(nullptr);
  j["c_down"] = v.c_down ? c_condition_json(*v.c_down) : ordered_json(nullptr);
  j["h0_clause_applicable"] = v.h0_clause_applicable;
  j["pass"] = v.pass;
  return j;
}

ordered_json intermediate_json(const IntermediateWallReport& r) {
  ordered_json j;
  j["upper_window"] = window_json(r.upper_window);
  j["lower_window"] = window_json(r.lower_window);
  ordered_json up = ordered_json::array(), dn = ordered_json::array();
  for (const auto& w : r.upper_offenders) up.push_back(wall_check_json(w));
  for (const auto& w : r.lower_offenders) dn.push_back(wall_check_json(w));
  j["upper_offenders"] = std::move(up);
  j["lower_offenders"] = std::move(dn);
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["checked"] = c.checked;
    cj["no_positive_ray"] = c.no_positive_ray;
    cj["not_pseudo_effective"] = c.not_pseudo_effective;
    cj["ray_outside_windows"] = c.ray_outside_windows;
    cj["reason_certified"] = c.reason_certified;
    cj["displayed_bound_certified"] = c.displayed_bound_certified;
    cj["counterexample"] =
        c.counterexample ? ordered_json(c.counterexample->str()) : nullptr;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["pass"] = r.pass;
  return j;
}

ordered_json decomposition_json(const DecompositionReport& r) {
  ordered_json j;
  j["mid_ray_index"] = r.mid_ray_index;
  j["polarization_component"] = r.polarization_component.str();
  j["polarization_complement"] = r.polarization_complement.str();
  j["f_component"] = r.f_component.get_str();
  j["g_component"] = r.g_component.get_str();
  j["f_complement"] = r.f_complement.get_str();
  j["g_complement"] = r.g_complement.get_str();
  j["dims"] = r.dims ? dims_json(*r.dims) : ordered_json(nullptr);
  j["statement"] = r.statement;
  j["pass"] = r.pass;
  return j;
}

ordered_json ext1_json(const Ext1Table& t) {
  ordered_json j;
  j["b"] = t.b.get_str();
  j["h2_pullback_high"] = t.h2_pullback_high.get_str();
  j["h3_pullback_low"] = t.h3_pullback_low.get_str();
  j["h3_pullback_high"] = t.h3_pullback_high.get_str();
  j["h2_taut_low"] = t.h2_taut_low.get_str();
  j["h3_taut_low"] = t.h3_taut_low.get_str();
  j["h3_taut_high"] = t.h3_taut_high.get_str();
  j["ext1_computed"] = t.ext1_computed.get_str();
  j["ext1_crossref"] = t.ext1_crossref.get_str();
  return j;
}

// ---- SVG helpers ------------------------------------------------------------

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, v);
  return buf;
}

const char* verdict_color(ModuliVerdict v) {
  switch (v) {
    case ModuliVerdict::Empty: return "#d32f2f";
    case ModuliVerdict::OnWall: return "#7b1fa2";
    case ModuliVerdict::ComponentChamber: return "#388e3c";
    case ModuliVerdict::ComplementChamber: return "#1976d2";
    case ModuliVerdict::OutsideCoverage: return "#616161";
  }
  return "#616161";
}

}  // namespace

InstanceConfig parse_config_text(const std::string& text) {
  InstanceConfig cfg;
  bool saw_c1p = false, saw_c2p = false, saw_b = false;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trimmed(raw);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected 'key = value' in line '" +
                                  line + "'");
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config: empty key or value in line '" +
                                  line + "'");
    if (key == "c1p") {
      cfg.c1p = parse_int(value, line);
      saw_c1p = true;
    } else if (key == "c2p") {
      cfg.c2p = parse_int(value, line);
      saw_c2p = true;
    } else if (key == "split") {
      if (value == "none")
        cfg.split.reset();
      else
        cfg.split = parse_int_pair(value, line);
    } else if (key == "b") {
      cfg.b = parse_int(value, line);
      saw_b = true;
    } else if (key == "variant") {
      if (value == "A")
        cfg.variant = FamilyVariant::A;
      else if (value == "B")
        cfg.variant = FamilyVariant::B;
      else
        throw std::invalid_argument("config: variant must be A or B, got '" +
                                    value + "'");
    } else if (key == "polarization") {
      const auto [alpha, beta] = parse_int_pair(value, line);
      cfg.polarizations.push_back(DivisorClass{alpha, beta});
    } else if (key == "a_max") {
      cfg.caps.a_max = parse_int(value, line);
    } else if (key == "b_max") {
      cfg.caps.b_max = parse_int(value, line);
    } else if (key == "t_max") {
      cfg.t_max = parse_int(value, line);
    } else if (key == "alpha_max") {
      cfg.alpha_max = parse_int(value, line);
    } else if (key == "json") {
      cfg.json_path = value;
    } else if (key == "svg") {
      cfg.svg_path = value;
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (!saw_c1p || !saw_c2p || !saw_b)
    throw std::invalid_argument("config: keys c1p, c2p and b are required");
  return cfg;
}

InstanceConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

RuledThreefold threefold_of(const InstanceConfig& config) {
  if (config.split) {
    const auto X =
        RuledThreefold::split_bundle(config.split->first, config.split->second);
    if (X.c1p != config.c1p || X.c2p != config.c2p)
      throw std::invalid_argument(
          "config: split type (" + config.split->first.get_str() + ", " +
          config.split->second.get_str() + ") has Chern data (" +
          X.c1p.get_str() + ", " + X.c2p.get_str() +
          "), which contradicts the configured c1p/c2p");
    return X;
  }
  return RuledThreefold::from_chern(config.c1p, config.c2p);
}

std::string run_report(const InstanceConfig& config, int threads) {
  const RuledThreefold X = threefold_of(config);
  const WallFamily fam = wall_family(X, config.b, config.variant);
  std::vector<std::string> notes;

  ordered_json doc;
  doc["schema_version"] = 1;

  {
    ordered_json inst;
    inst["c1p"] = X.c1p.get_str();
    inst["c2p"] = X.c2p.get_str();
    inst["split"] = X.split
                        ? ordered_json::array({X.split->first.get_str(),
                                               X.split->second.get_str()})
                        : ordered_json(nullptr);
    inst["b"] = fam.b.get_str();
    inst["variant"] = fam.variant == FamilyVariant::A ? "A" : "B";
    inst["c1"] = fam.c1.str();
    inst["c2"] = fam.c2.str();
    ordered_json caps;
    caps["a_max"] = config.caps.a_max.get_str();
    caps["b_max"] = config.caps.b_max.get_str();
    inst["caps"] = std::move(caps);
    inst["t_max"] = config.t_max.get_str();
    inst["alpha_max"] = config.alpha_max.get_str();
    doc["instance"] = std::move(inst);
  }

  // The three-level fan around the family's wall.
  const std::vector<WallCheck> checks = {
      wall_check(X, xi_l(Int(fam.b - 1)), fam.c1, fam.c2),
      wall_check(X, xi_l(fam.b), fam.c1, fam.c2),
      wall_check(X, xi_l(Int(fam.b + 1)), fam.c1, fam.c2)};
  const ChamberDecomposition fan = build_decomposition(checks);
  std::optional<std::size_t> mid_index;
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    if (qn_compare(fan.rays[i].slope, checks[1].rays.front()) == 0)
      mid_index = i;
  doc["walls"] = fan_json(fan);

  std::vector<ModuliReport> reports;
  reports.reserve(config.polarizations.size());
  for (const auto& L : config.polarizations)
    reports.push_back(classify_moduli(X, fam, L));
  ordered_json pols = ordered_json::array();
  for (const auto& r : reports) pols.push_back(moduli_report_json(r));

  ordered_json decomposition = nullptr;
  ordered_json intermediate = nullptr;
  if (fam.variant == FamilyVariant::A) {
    decomposition =
        decomposition_json(decomposition_report(X, fam, config.alpha_max));
    intermediate = intermediate_json(
        verify_no_intermediate_walls(X, fam, config.caps, threads));
  } else {
    notes.push_back(
        "variant B certifies emptiness only; the chamber decomposition and "
        "the no-intermediate-wall certificate apply to variant A");
  }
  doc["decomposition"] = std::move(decomposition);
  doc["polarizations"] = std::move(pols);

  if (X.split) {
    doc["ext1_table"] = ext1_json(ext1_table(X, fam.b));
    if (fam.variant == FamilyVariant::A) {
      doc["component_dimension"] = dims_json(component_dimension(X, fam));
    } else {
      doc["component_dimension"] = nullptr;
      notes.push_back(
          "the extension component and its dimension belong to variant A");
    }
  } else {
    doc["ext1_table"] = nullptr;
    doc["component_dimension"] = nullptr;
    notes.push_back(
        "cohomology needs a split model: ext1 table and component dimension "
        "are omitted for bare Chern data");
  }
  doc["bn_range"] = bn_range(fam.b).get_str();

  {
    ordered_json ver;
    ver["wall"] = wall_verification_json(verify_xi_b_wall(X, fam, config.t_max));
    ver["intermediate_walls"] = std::move(intermediate);
    doc["verification"] = std::move(ver);
  }
  doc["notes"] = notes;

  return doc.dump(2) + "\n";
}

std::string render_svg(const ChamberDecomposition& fan,
                       const std::optional<std::size_t>& mid_ray_index,
                       const std::vector<ModuliReport>& reports) {
  constexpr double kW = 720, kH = 640;
  constexpr double kL = 64, kR = 176, kT = 24, kB = 56;
  const double plot_w = kW - kL - kR, plot_h = kH - kT - kB;

  double alpha_max = 4, beta_max = 4;
  for (const auto& r : reports) {
    alpha_max = std::max(alpha_max, r.polarization.a.get_d());
    beta_max = std::max(beta_max, r.polarization.b.get_d());
  }
  if (!fan.rays.empty())
    beta_max = std::max(beta_max, fan.rays.back().slope.to_double());
  alpha_max *= 1.15;
  beta_max *= 1.15;

  const auto px = [&](double x) { return kL + x / alpha_max * plot_w; };
  const auto py = [&](double y) { return kT + plot_h - y / beta_max * plot_h; };
  // Exit point of the ray y = s*x from the data box.
  const auto ray_end = [&](double s) {
    if (s * alpha_max <= beta_max) return std::pair(alpha_max, s * alpha_max);
    return std::pair(beta_max / s, beta_max);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
      << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH
      << "\">\n"
      << "<rect width=\"" << kW << "\" height=\"" << kH
      << "\" fill=\"#ffffff\"/>\n";

  // Shaded chambers on both sides of the wall named by mid_ray_index.
  const auto wedge = [&](double s_lo, double s_hi, const char* fill) {
    const auto [xl, yl] = ray_end(s_lo);
    const auto [xh, yh] = ray_end(s_hi);
    svg << "<polygon points=\"" << fixed(px(0), 2) << "," << fixed(py(0), 2);
    svg << " " << fixed(px(xl), 2) << "," << fixed(py(yl), 2);
    if (yl < beta_max && yh >= beta_max && xl >= alpha_max)
      svg << " " << fixed(px(alpha_max), 2) << "," << fixed(py(beta_max), 2);
    svg << " " << fixed(px(xh), 2) << "," << fixed(py(yh), 2)
        << "\" fill=\"" << fill << "\" fill-opacity=\"0.45\"/>\n";
  };
  if (mid_ray_index && *mid_ray_index < fan.rays.size()) {
    const double s_mid = fan.rays[*mid_ray_index].slope.to_double();
    if (*mid_ray_index + 1 < fan.rays.size())
      wedge(s_mid, fan.rays[*mid_ray_index + 1].slope.to_double(), "#c8e6c9");
    wedge(*mid_ray_index >= 1
              ? fan.rays[*mid_ray_index - 1].slope.to_double()
              : 0.0,
          s_mid, "#bbdefb");
  }

  // Axes.
  svg << "<line x1=\"" << fixed(px(0), 2) << "\" y1=\"" << fixed(py(0), 2)
      << "\" x2=\"" << fixed(px(alpha_max), 2) << "\" y2=\""
      << fixed(py(0), 2) << "\" stroke=\"#263238\" stroke-width=\"1.5\"/>\n"
      << "<line x1=\"" << fixed(px(0), 2) << "\" y1=\"" << fixed(py(0), 2)
      << "\" x2=\"" << fixed(px(0), 2) << "\" y2=\""
      << fixed(py(beta_max), 2)
      << "\" stroke=\"#263238\" stroke-width=\"1.5\"/>\n"
      << "<text x=\"" << fixed(kL + plot_w / 2, 2) << "\" y=\""
      << fixed(kH - 16, 2)
      << "\" font-family=\"sans-serif\" font-size=\"14\" "
         "text-anchor=\"middle\">alpha (S coefficient)</text>\n"
      << "<text x=\"18\" y=\"" << fixed(kT + plot_h / 2, 2)
      << "\" font-family=\"sans-serif\" font-size=\"14\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << fixed(kT + plot_h / 2, 2) << ")\">beta (H coefficient)</text>\n";

  // Wall rays with labels.
  for (const auto& ray : fan.rays) {
    const double s = ray.slope.to_double();
    const auto [xe, ye] = ray_end(s);
    svg << "<line x1=\"" << fixed(px(0), 2) << "\" y1=\"" << fixed(py(0), 2)
        << "\" x2=\"" << fixed(px(xe), 2) << "\" y2=\"" << fixed(py(ye), 2)
        << "\" stroke=\"#37474f\" stroke-width=\"1.5\""
        << (ray.is_wall() ? "" : " stroke-dasharray=\"6 4\"") << "/>\n";
    std::string label = ray.walls.front().xi.str();
    if (ray.walls.size() > 1)
      label += " (+" + std::to_string(ray.walls.size() - 1) + ")";
    label += " : " + ray.slope.decimal(6);
    svg << "<text x=\"" << fixed(px(xe * 0.7) + 6, 2) << "\" y=\""
        << fixed(py(ye * 0.7) - 6, 2)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#37474f\">"
        << label << "</text>\n";
  }

  // Polarization markers colored by verdict.
  for (const auto& r : reports) {
    svg << "<circle cx=\"" << fixed(px(r.polarization.a.get_d()), 2)
        << "\" cy=\"" << fixed(py(r.polarization.b.get_d()), 2)
        << "\" r=\"4.5\" fill=\"" << verdict_color(r.verdict)
        << "\" stroke=\"#263238\" stroke-width=\"1\"/>\n";
  }

  // Legend.
  const double lx = kW - kR + 12;
  double ly = kT + 8;
  svg << "<text x=\"" << fixed(lx, 2) << "\" y=\"" << fixed(ly + 10, 2)
      << "\" font-family=\"sans-serif\" font-size=\"13\" "
         "font-weight=\"bold\">verdicts</text>\n";
  ly += 20;
  for (const ModuliVerdict v :
       {ModuliVerdict::Empty, ModuliVerdict::OnWall,
        ModuliVerdict::ComponentChamber, ModuliVerdict::ComplementChamber,
        ModuliVerdict::OutsideCoverage}) {
    svg << "<circle cx=\"" << fixed(lx + 6, 2) << "\" cy=\""
        << fixed(ly + 6, 2) << "\" r=\"4.5\" fill=\"" << verdict_color(v)
        << "\" stroke=\"#263238\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << fixed(lx + 18, 2) << "\" y=\"" << fixed(ly + 10, 2)
        << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << verdict_name(v) << "</text>\n";
    ly += 18;
  }
  ly += 8;
  svg << "<rect x=\"" << fixed(lx, 2) << "\" y=\"" << fixed(ly, 2)
      << "\" width=\"12\" height=\"12\" fill=\"#c8e6c9\"/>\n"
      << "<text x=\"" << fixed(lx + 18, 2) << "\" y=\"" << fixed(ly + 10, 2)
      << "\" font-family=\"sans-serif\" font-size=\"12\">component chamber"
         "</text>\n";
  ly += 18;
  svg << "<rect x=\"" << fixed(lx, 2) << "\" y=\"" << fixed(ly, 2)
      << "\" width=\"12\" height=\"12\" fill=\"#bbdefb\"/>\n"
      << "<text x=\"" << fixed(lx + 18, 2) << "\" y=\"" << fixed(ly + 10, 2)
      << "\" font-family=\"sans-serif\" font-size=\"12\">complement chamber"
         "</text>\n";

  svg << "</svg>\n";
  return svg.str();
}

void emit_svg(const ChamberDecomposition& fan,
              const std::optional<std::size_t>& mid_ray_index,
              const std::vector<ModuliReport>& reports,
              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << render_svg(fan, mid_ray_index, reports);
  if (!out)
    throw std::runtime_error("failed writing figure to '" + path + "'");
}

}  // namespace ruledwalls
