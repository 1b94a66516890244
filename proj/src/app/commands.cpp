#include "heunpot/app/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "heunpot/app/verify_suites.hpp"

namespace heunpot::app {
namespace {

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot open '" + cfg.out_path + "' for writing");
  f << text;
  f.close();
  if (!f) throw Error(ErrorKind::Io, "write to '" + cfg.out_path + "' failed");
}

json meta_for(const RunConfig& cfg, const HeunParams& p) {
  return {{"tool", "heunpot"}, {"command", to_string(cfg.command)}, {"heun", heun_to_json(p)}};
}

}  // namespace

json cmd_inspect(const RunConfig& cfg) {
  const HeunParams p = make_heun(cfg);
  const TransformFamily fam = make_family(cfg.family);
  const InvariantCoeffs ic = invariant_coeffs(p);
  return {
      {"meta", meta_for(cfg, p)},
      {"fuchsian", {{"relation", "alpha + beta + 1 = gamma + delta + epsilon"},
                    {"defect", std::abs(p.fuchsian_defect())},
                    {"satisfied", true}}},
      {"coefficients",
       {{"A", to_json(ic.A)}, {"B", to_json(ic.B)}, {"C", to_json(ic.C)}, {"D", to_json(ic.D)}, {"F", to_json(ic.F)}}},
      {"family", family_to_json(fam)},
      {"k_squared", to_json(energy_constant(p, fam))},
  };
}

PotentialProfile cmd_build(const RunConfig& cfg) {
  const HeunParams p = make_heun(cfg);
  const TransformFamily fam = make_family(cfg.family);
  GridSpec grid = cfg.grid ? *cfg.grid : default_window(fam);
  return build_profile(p, fam, grid, cfg.construction);
}

std::string render_profile(const RunConfig& cfg, const PotentialProfile& prof) {
  std::ostringstream os;
  if (cfg.format == OutputFormat::Csv) {
    write_profile_csv(os, prof);
  } else {
    os << profile_to_json(prof).dump(2) << '\n';
  }
  return os.str();
}

json cmd_verify(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.tol = cfg.tol;
  opts.corrupt_table = cfg.corrupt_table;
  opts.base = cfg.heun;
  if (cfg.epsilon_given) (void)HeunParams::validate(cfg.heun);
  return verify_report(opts, run_suites(opts));
}

json cmd_cases(const RunConfig& cfg) {
  const HeunParams p = make_heun(cfg);
  const TransformFamily fam = make_family(cfg.family);
  const GridSpec w = cfg.grid ? *cfg.grid : GridSpec{default_window(fam).min, default_window(fam).max, 50};
  const std::vector<double> grid = make_grid(w);
  const double tol = cfg.tol.value_or(kConfirmTolerance);

  json out = {{"meta", meta_for(cfg, p)}, {"family", family_to_json(fam)}, {"k_squared", to_json(energy_constant(p, fam))}};
  const auto display = display_for(fam);
  out["display"] = display ? json(to_string(*display)) : json(nullptr);
  if (const auto which = expanded_case_for(fam)) {
    const ExpandedCoeffs c = printed_expanded_coeffs(*which, p, fam);
    out["table"] = {{"name", to_string(*which)}, {"coefficients", coeffs_to_json(c.coeffs)}};
  } else {
    out["table"] = nullptr;
  }
  json claims = json::array();
  for (const auto& v : cross_check_expansion(p, fam, grid, tol)) claims.push_back(claim_to_json(v));
  out["claims"] = claims;
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Schrodinger potentials from the Heun equation"};
  app.require_subcommand(1);

  double a = 2.0, q = 1.0, alpha = 1.0, beta = 1.0, gamma = 1.0, delta = 1.0, epsilon = 1.0;
  std::string grid_text, format = "json", construction = "direct";
  std::optional<double> tol;

  app.add_option("--a", a, "singular point a");
  app.add_option("--q", q, "accessory parameter");
  app.add_option("--alpha", alpha);
  app.add_option("--beta", beta);
  app.add_option("--gamma", gamma);
  app.add_option("--delta", delta);
  auto* eps_opt = app.add_option("--epsilon", epsilon, "solved from the Fuchsian relation when omitted");
  app.add_option("--family", cfg.family.name)
      ->check(CLI::IsMember({"exp+", "exp-", "cosh2", "sinh2", "cos2", "sin2", "quad", "linear+", "linear-", "general"}));
  app.add_option("--g", cfg.family.g);
  app.add_option("--s", cfg.family.s);
  app.add_option("--b", cfg.family.b);
  app.add_option("--c", cfg.family.c);
  app.add_option("--sigma", cfg.family.sigma);
  app.add_option("--alpha1", cfg.family.alpha1);
  app.add_option("--beta1", cfg.family.beta1);
  app.add_option("--gamma1", cfg.family.gamma1);
  app.add_option("--c1", cfg.family.c1);
  app.add_option("--grid", grid_text, "min:max:count");
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out_path, "output file (default: stdout)");
  app.add_option("--tol", tol)->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed);
  app.add_flag("--corrupt-table", cfg.corrupt_table, "perturb one printed coefficient (negative control)");
  app.add_option("--construction", construction)->check(CLI::IsMember({"direct", "expanded"}));

  auto* inspect = app.add_subcommand("inspect", "coefficients, Fuchsian check, ansatz and k^2");
  auto* build = app.add_subcommand("build", "potential and wavefunction profile");
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  auto* cases = app.add_subcommand("cases", "printed expansion of the family against the direct assembly");
  for (auto* sub : {inspect, build, verify, cases}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    cfg.heun = RawHeunParams{a, q, alpha, beta, gamma, delta, epsilon};
    cfg.epsilon_given = eps_opt->count() > 0;
    cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    cfg.construction = construction == "expanded" ? ConstructionPath::Expanded : ConstructionPath::Direct;
    cfg.tol = tol;
    if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);

    if (*inspect) {
      cfg.command = Command::Inspect;
      emit(cfg, cmd_inspect(cfg).dump(2) + "\n", out);
    } else if (*build) {
      cfg.command = Command::Build;
      const PotentialProfile prof = cmd_build(cfg);
      for (double x : prof.excluded) err << "excluded x=" << x << " (inside singularity collar)\n";
      emit(cfg, render_profile(cfg, prof), out);
    } else if (*verify) {
      cfg.command = Command::Verify;
      const json report = cmd_verify(cfg);
      emit(cfg, report.dump(2) + "\n", out);
      for (const auto& s : report["suites"]) {
        err << s["name"].get<std::string>() << ": " << s["status"].get<std::string>() << '\n';
      }
      return report["meta"]["overall"] == "FAIL" ? kExitVerifyFailed : kExitOk;
    } else {
      cfg.command = Command::Cases;
      emit(cfg, cmd_cases(cfg).dump(2) + "\n", out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Io ? kExitIo : kExitInvalid;
  }
  return kExitOk;
}

}  // namespace heunpot::app
