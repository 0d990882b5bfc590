#include "supmod/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "supmod/curve_io.hpp"
#include "supmod/moduli.hpp"
#include "supmod/norm_spec.hpp"
#include "supmod/report_io.hpp"
#include "supmod/verify.hpp"

namespace supmod {

namespace {

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view s, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw std::invalid_argument(std::string(what) + ": bad number '" + std::string(s) + "'");
  return v;
}

std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_real(s.substr(0, comma), "--p"));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw OutputError("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw OutputError("failed writing '" + path + "'");
}

struct Options {
  std::string space;
  std::string modulus;
  std::string grid;
  std::string format;
  std::string out;
  std::string p_list;
  std::size_t cases = 1000;
  bool double_resolution = false;
  SampleConfig cfg;
};

void add_config_flags(CLI::App* sub, Options& o) {
  sub->add_option("--angular-samples", o.cfg.angular_samples, "sphere samples per plane");
  sub->add_option("--sections", o.cfg.section_samples, "planar sections when dim >= 3");
  sub->add_option("--subdifferential-samples", o.cfg.subdifferential_samples,
                  "interior functionals sampled at corners");
  sub->add_option("--tol", o.cfg.root_tol, "bisection tolerance");
  sub->add_option("--feas-tol", o.cfg.feas_tol, "membership tolerance");
  sub->add_option("--slack", o.cfg.slack, "allowance for sampling bias");
  sub->add_option("--seed", o.cfg.seed, "random seed");
  sub->add_option("--out", o.out, "output file (default stdout)");
}

std::string curve_text(const ModulusCurve& c, const std::string& format) {
  if (format == "csv") return curve_to_csv(c);
  if (format == "json") return curve_to_json(c);
  return curve_to_svg(c);
}

ModulusCurve compute_curve(const Options& o) {
  const auto kind = parse_modulus_kind(o.modulus);
  if (!kind) throw std::invalid_argument("unknown modulus '" + o.modulus + "'");
  const NormedSpace space = parse_norm_spec(o.space);
  return modulus_curve(space, *kind, parse_grid(o.grid), o.cfg);
}

int verify_cmd(const Options& o, std::ostream& out) {
  const NormedSpace space = parse_norm_spec(o.space);
  const auto grid = parse_grid(o.grid);
  auto run = [&](const SampleConfig& cfg) {
    InequalityReport rep = run_checks(space, grid, cfg);
    if (o.cases > 0) rep.append(property_suite(space, o.cases, cfg.seed));
    return rep;
  };
  const InequalityReport base = run(o.cfg);
  if (!o.double_resolution) {
    emit(report_to_json(base), o.out, out);
    return report_exit_code(base);
  }
  // A sampling artifact shrinks when the resolution doubles; a genuine
  // violation does not.
  SampleConfig fine = o.cfg;
  fine.angular_samples *= 2;
  fine.section_samples *= 2;
  const InequalityReport doubled = run(fine);
  auto j = nlohmann::ordered_json::parse(report_to_json(doubled));
  auto trend = nlohmann::ordered_json::array();
  std::map<std::pair<std::string, double>, const ReportEntry*> coarse;
  for (const auto& e : base.entries)
    if (e.check_id.rfind("lem2.", 0) != 0) coarse[{e.check_id, e.param}] = &e;
  for (const auto& e : doubled.entries) {
    const auto it = coarse.find({e.check_id, e.param});
    if (it == coarse.end()) continue;
    const ReportEntry& c = *it->second;
    if (c.status != CheckStatus::Fail && e.status != CheckStatus::Fail) continue;
    trend.push_back({{"check_id", e.check_id},
                     {"param", e.param},
                     {"margin", c.margin},
                     {"margin_doubled", e.margin},
                     {"trend", e.margin > c.margin ? "shrinking" : "persistent"}});
  }
  j["resolution_check"] = std::move(trend);
  emit(j.dump(2) + "\n", o.out, out);
  return report_exit_code(doubled);
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos)
    throw std::invalid_argument("grid must have the form start:stop:step");
  const double a = parse_real(spec.substr(0, c1), "grid start");
  const double b = parse_real(spec.substr(c1 + 1, c2 - c1 - 1), "grid stop");
  const double step = parse_real(spec.substr(c2 + 1), "grid step");
  if (!(a < b)) throw std::invalid_argument("grid start must be below stop");
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  const double count = std::floor((b - a) / step + 1e-9) + 1;
  if (count > 1e6) throw std::invalid_argument("grid has too many points");
  std::vector<double> g;
  for (std::size_t k = 0; k < static_cast<std::size_t>(count); ++k)
    g.push_back(std::round((a + double(k) * step) * 1e12) / 1e12);
  return g;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric moduli of finite-dimensional normed spaces"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "sample one modulus curve");
  compute->add_option("--space", o.space, "norm spec")->required();
  compute->add_option("--modulus", o.modulus, "delta|rho|rho-banas|lambda-minus|lambda-plus")
      ->required();
  compute->add_option("--grid", o.grid, "start:stop:step")->required();
  compute->add_option("--format", o.format, "csv|json|svg (default csv)")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  add_config_flags(compute, o);

  auto* plot = app.add_subcommand("plot", "SVG plot of one modulus curve");
  plot->add_option("--space", o.space, "norm spec")->required();
  plot->add_option("--modulus", o.modulus, "modulus kind")->required();
  plot->add_option("--grid", o.grid, "start:stop:step")->required();
  plot->add_option("--format", o.format, "svg")->check(CLI::IsMember({"svg"}));
  add_config_flags(plot, o);

  auto* verify = app.add_subcommand("verify", "run the inequality registry and property suites");
  verify->add_option("--space", o.space, "norm spec")->required();
  verify->add_option("--grid", o.grid, "start:stop:step within [0, 1]")
      ->default_val("0.05:0.95:0.05");
  verify->add_option("--cases", o.cases, "random cases per property (0 skips the suites)");
  verify->add_flag("--double-resolution", o.double_resolution,
                   "rerun at twice the sampling density and report failure trends");
  verify->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
  add_config_flags(verify, o);

  auto* xi_cmd = app.add_subcommand("xi", "projection Lipschitz constant with witnesses");
  xi_cmd->add_option("--space", o.space, "norm spec")->required();
  xi_cmd->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
  add_config_flags(xi_cmd, o);

  auto* explore = app.add_subcommand("explore", "xi against its upper bound on lp(p, 2)");
  explore->add_option("--p", o.p_list, "comma-separated exponents > 1")->required();
  explore->add_option("--format", o.format, "json|csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  add_config_flags(explore, o);

  std::vector<const char*> argv{"supmod"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  // the subcommands share o.format, so defaults are applied after parsing
  if (o.format.empty()) o.format = compute->parsed() ? "csv" : plot->parsed() ? "svg" : "json";

  try {
    o.cfg.validate();
    if (compute->parsed() || plot->parsed()) {
      emit(curve_text(compute_curve(o), o.format), o.out, out);
      return 0;
    }
    if (verify->parsed()) return verify_cmd(o, out);
    if (xi_cmd->parsed()) {
      emit(xi_to_json(xi(parse_norm_spec(o.space), o.cfg)), o.out, out);
      return 0;
    }
    const auto rows = explore_conjecture(parse_list(o.p_list), o.cfg);
    emit(o.format == "csv" ? conjecture_to_csv(rows) : conjecture_to_json(rows), o.out, out);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace supmod
