// tcqed: trajectories, sweeps, figure data and self-checks for two dipole-coupled
// atoms in a cavity with phase decoherence.
//
// Exit codes: 0 success, 1 invalid arguments, 2 verification failure.

#include "tcqed/app.hpp"
#include "tcqed/error.hpp"
#include "tcqed/kernels.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 1;
constexpr int kExitVerifyFailed = 2;

struct Flags {
  double g = 1.0;
  double omega = 0.0;
  double dipole = 1.0;
  double gamma = 0.0;
  int photons = 0;
  std::string theta = "0";
  double t_max = 20.0;
  int steps = 2000;
  bool with_oracle = false;
  int n_max = 0;
  std::string output;

  std::string sweep_param;
  std::string sweep_values;
  std::string figure;
  bool extended = false;
  double perturb_delta = 0.0;
};

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(tcqed::parse_angle(item));
  if (out.empty()) throw tcqed::Error(tcqed::Errc::InvalidArgument, "--values needs at least one value");
  return out;
}

tcqed::RunConfig base_config(const Flags& f) {
  tcqed::RunConfig cfg;
  cfg.params.g = f.g;
  cfg.params.omega = f.omega;
  cfg.params.big_omega = f.dipole;
  cfg.params.gamma = f.gamma;
  cfg.params.n = f.photons;
  cfg.params.theta = tcqed::parse_angle(f.theta);
  cfg.t_max = f.t_max;
  cfg.steps = f.steps;
  cfg.with_oracle = f.with_oracle;
  cfg.n_max = f.n_max;
  return cfg;
}

void emit_blocks(std::ostream& out, const std::string& command, const std::vector<tcqed::RunConfig>& cfgs,
                 const std::vector<std::string>& extra_meta) {
  for (const auto& c : cfgs) c.validate();
  const auto results = tcqed::run_all(cfgs);
  const bool with_oracle = !cfgs.empty() && cfgs.front().with_oracle;

  std::vector<std::string> meta{std::string(tcqed::kToolVersion), "command: " + command};
  meta.insert(meta.end(), extra_meta.begin(), extra_meta.end());
  for (const auto& m : meta) out << "# " << m << '\n';
  out << tcqed::csv_header(with_oracle) << '\n';
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    out << "# block " << i << '\n';
    for (const auto& line : tcqed::describe_config(cfgs[i])) out << "# " << line << '\n';
    for (const auto& r : results[i]) out << tcqed::csv_row(r, with_oracle) << '\n';
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Two-atom Tavis-Cummings dynamics with phase decoherence"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Flags f;
  app.add_option("--coupling", f.g, "atom-cavity coupling g")->capture_default_str();
  app.add_option("--omega", f.omega, "atomic/cavity frequency")->capture_default_str();
  app.add_option("--dipole", f.dipole, "dipole-dipole coupling")->capture_default_str();
  app.add_option("--gamma", f.gamma, "phase decoherence coefficient (units of 1/g)")->capture_default_str();
  app.add_option("--photons", f.photons, "initial Fock photon number")->capture_default_str();
  auto* theta_opt = app.add_option("--theta", f.theta, "initial angle in radians, e.g. 0.3, pi/4, 3pi/4")
                        ->capture_default_str();
  app.add_option("--t-max", f.t_max, "end time (units of 1/g)")->capture_default_str();
  app.add_option("--steps", f.steps, "number of time intervals")->capture_default_str();
  app.add_flag("--with-oracle", f.with_oracle, "add brute-force negativity and Bell columns");
  app.add_option("--n-max", f.n_max, "field truncation for the oracle (default n+2)");
  app.add_option("--output", f.output, "output path (default stdout)");

  auto* traj = app.add_subcommand("trajectory", "single time series as CSV");
  auto* sweep = app.add_subcommand("sweep", "one time series per parameter value");
  sweep->add_option("--param", f.sweep_param, "theta | big_omega | gamma | n")->required();
  sweep->add_option("--values", f.sweep_values, "comma separated values (angles accept pi forms)")->required();
  auto* figure = app.add_subcommand("figure", "time series behind a published figure");
  figure->add_option("id", f.figure, "fig1 ... fig8")->required();
  auto* verify = app.add_subcommand("verify", "run the self-verification battery");
  verify->add_flag("--extended", f.extended, "wider photon-number and gamma ranges");
  verify->add_option("--perturb-delta", f.perturb_delta, "shift Delta in the closed form (mutation probe)")
      ->group("");
  bool listed = false;
  app.add_flag_callback("--list-kernels", [&listed] {
    listed = true;
    for (auto b : {tcqed::kernels::Backend::Scalar, tcqed::kernels::Backend::Avx2})
      std::cout << tcqed::kernels::backend_name(b) << (tcqed::kernels::backend_available(b) ? "" : " (unavailable)")
                << (b == tcqed::kernels::active_backend() ? " [active]" : "") << '\n';
  }, "print available kernel backends");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }
  if (app.get_subcommands().empty()) {
    if (listed) return kExitOk;
    std::cerr << app.help();
    return kExitBadArgs;
  }

  try {
    std::ofstream file;
    if (!f.output.empty()) {
      file.open(f.output);
      if (!file) throw tcqed::Error(tcqed::Errc::InvalidArgument, "cannot open output file " + f.output);
    }
    std::ostream& out = f.output.empty() ? std::cout : file;

    if (*verify) {
      tcqed::VerifyOptions opts;
      opts.battery = f.extended ? tcqed::Battery::Extended : tcqed::Battery::Standard;
      opts.delta_perturbation = f.perturb_delta;
      const auto report = tcqed::verify(opts);
      tcqed::print_report(out, report);
      return report.all_passed() ? kExitOk : kExitVerifyFailed;
    }

    if (*traj) {
      const auto cfg = base_config(f);
      emit_blocks(out, "trajectory", {cfg}, {});
    } else if (*sweep) {
      auto cfg = base_config(f);
      cfg.sweep = tcqed::SweepAxis{f.sweep_param, parse_values(f.sweep_values)};
      cfg.validate();
      emit_blocks(out, "sweep", tcqed::expand_sweep(cfg), {"sweep: " + f.sweep_param + "=" + f.sweep_values});
    } else if (*figure) {
      auto cfgs = tcqed::figure_preset(f.figure);
      const auto base = base_config(f);
      for (auto& c : cfgs) {
        c.t_max = base.t_max;
        c.steps = base.steps;
        c.with_oracle = base.with_oracle;
        c.n_max = base.n_max;
        if (theta_opt->count() > 0) {
          c.params.theta = base.params.theta;
          std::erase(c.reconstructed, "theta");
        }
      }
      std::string caption = "caption: " + f.figure;
      for (const auto& s : tcqed::figure_caption_params(f.figure)) caption += " " + s;
      emit_blocks(out, "figure " + f.figure, cfgs, {caption});
    }
    return kExitOk;
  } catch (const tcqed::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
