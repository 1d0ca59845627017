// Command-line front end for the wall-and-chamber engine.
//
// Subcommands:
//   walls     wall list of the configured instance (subset of the report)
//   chambers  wall list plus the chamber decomposition
//   report    full JSON document; optionally an SVG figure
//   plot      SVG figure only
//   verify    acceptance suite over the built-in grid, one line per criterion
//
// Exit codes: 0 success, 1 acceptance failure (verify), 2 usage or
// validation error, 3 enumeration caps too small (truncation).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ruledwalls/acceptance.hpp"
#include "ruledwalls/report.hpp"

namespace {

using ruledwalls::InstanceConfig;

struct Options {
  std::string config_path;
  std::string json_path;
  std::string svg_path;
  std::string caps;
  int threads = 1;
};

void apply_caps(InstanceConfig& cfg, const std::string& arg) {
  std::istringstream in(arg);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--caps: expected a=N or b=N, got '" + tok +
                                  "'");
    const std::string key = tok.substr(0, eq);
    const ruledwalls::Int value(tok.substr(eq + 1), 10);
    if (key == "a")
      cfg.caps.a_max = value;
    else if (key == "b")
      cfg.caps.b_max = value;
    else
      throw std::invalid_argument("--caps: unknown cap '" + key + "'");
  }
}

InstanceConfig load_config(const Options& opt) {
  if (opt.config_path.empty())
    throw std::invalid_argument("this subcommand needs --config <file>");
  InstanceConfig cfg = ruledwalls::parse_config_file(opt.config_path);
  if (!opt.caps.empty()) apply_caps(cfg, opt.caps);
  if (!opt.json_path.empty()) cfg.json_path = opt.json_path;
  if (!opt.svg_path.empty()) cfg.svg_path = opt.svg_path;
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

// The walls/chambers subcommands print the named slices of the full document.
void print_slices(const InstanceConfig& cfg, int threads,
                  const std::vector<std::string>& keys) {
  const auto doc =
      nlohmann::ordered_json::parse(ruledwalls::run_report(cfg, threads));
  nlohmann::ordered_json out;
  for (const auto& k : {"schema_version", "instance"}) out[k] = doc.at(k);
  for (const auto& k : keys) out[k] = doc.at(k);
  std::cout << out.dump(2) << "\n";
}

void run_plot(const InstanceConfig& cfg) {
  if (!cfg.svg_path)
    throw std::invalid_argument("plot needs an output path: --svg or the "
                                "config key 'svg'");
  const ruledwalls::RuledThreefold X = ruledwalls::threefold_of(cfg);
  const ruledwalls::WallFamily fam =
      ruledwalls::wall_family(X, cfg.b, cfg.variant);
  const std::vector<ruledwalls::WallCheck> checks = {
      ruledwalls::wall_check(X, ruledwalls::xi_l(ruledwalls::Int(fam.b - 1)),
                             fam.c1, fam.c2),
      ruledwalls::wall_check(X, ruledwalls::xi_l(fam.b), fam.c1, fam.c2),
      ruledwalls::wall_check(X, ruledwalls::xi_l(ruledwalls::Int(fam.b + 1)),
                             fam.c1, fam.c2)};
  const auto fan = ruledwalls::build_decomposition(checks);
  std::optional<std::size_t> mid;
  if (fam.variant == ruledwalls::FamilyVariant::A)
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
      if (ruledwalls::qn_compare(fan.rays[i].slope, checks[1].rays.front()) ==
          0)
        mid = i;
  std::vector<ruledwalls::ModuliReport> reports;
  for (const auto& L : cfg.polarizations)
    reports.push_back(ruledwalls::classify_moduli(X, fam, L));
  ruledwalls::emit_svg(fan, mid, reports, *cfg.svg_path);
}

int run_verify() {
  const auto results = ruledwalls::run_acceptance();
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s  %2d  %-26s  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact wall-and-chamber engine for rank-2 moduli on ruled "
               "threefolds over the plane"};
  app.require_subcommand(1);

  Options opt;
  const auto with_io = [&opt](CLI::App* cmd, bool needs_config) {
    auto* config = cmd->add_option("--config", opt.config_path,
                                   "instance config file");
    if (needs_config) config->required();
    cmd->add_option("--json", opt.json_path,
                    "report output path (overrides the config)");
    cmd->add_option("--svg", opt.svg_path,
                    "figure output path (overrides the config)");
    cmd->add_option("--caps", opt.caps, "enumeration caps, e.g. a=10,b=100");
    cmd->add_option("--threads", opt.threads, "enumeration worker threads")
        ->check(CLI::PositiveNumber);
    return cmd;
  };

  auto* cmd_walls = with_io(
      app.add_subcommand("walls", "wall list for the configured instance"),
      true);
  auto* cmd_chambers = with_io(
      app.add_subcommand("chambers", "walls plus the chamber decomposition"),
      true);
  auto* cmd_report = with_io(
      app.add_subcommand("report", "full JSON report (and optional figure)"),
      true);
  auto* cmd_verify =
      app.add_subcommand("verify", "run the acceptance suite");
  auto* cmd_plot = with_io(
      app.add_subcommand("plot", "SVG figure of the quadrant"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_verify->parsed()) return run_verify();
    const InstanceConfig cfg = load_config(opt);
    if (cmd_walls->parsed()) {
      print_slices(cfg, opt.threads, {"walls"});
    } else if (cmd_chambers->parsed()) {
      print_slices(cfg, opt.threads, {"walls", "decomposition"});
    } else if (cmd_plot->parsed()) {
      run_plot(cfg);
    } else if (cmd_report->parsed()) {
      const std::string doc = ruledwalls::run_report(cfg, opt.threads);
      if (cfg.json_path)
        write_text(*cfg.json_path, doc);
      else
        std::cout << doc;
      if (cfg.svg_path) {
        InstanceConfig plot_cfg = cfg;
        run_plot(plot_cfg);
      }
    }
    return 0;
  } catch (const ruledwalls::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
