// Experiment driver for the exponential-integrator Boussinesq solver.
//
//   gbx run       -c config.txt            single run, artifacts to out_dir
//   gbx converge  -c config.txt --mode ... convergence sweep + order table
//   gbx presets                            list preset ids
//
// Exit status: 0 completed, 2 blow-up detected, 64 invalid configuration.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gbx/config.hpp"
#include "gbx/experiment.hpp"
#include "gbx/solutions.hpp"

namespace {

constexpr int kExitBlowup = 2;
constexpr int kExitInvalidConfig = 64;

struct ConfigArgs {
  std::string config_path;
  std::string preset;
  std::vector<std::string> overrides;  // key=value
};

void add_config_options(CLI::App* cmd, ConfigArgs& args) {
  cmd->add_option("-c,--config", args.config_path, "path to a key = value config file");
  cmd->add_option("-p,--preset", args.preset,
                  "start from a preset id instead of a config file");
  cmd->add_option("-s,--set", args.overrides,
                  "override a config key, e.g. -s T=10 -s out_dir=out")
      ->take_all();
}

gbx::ExperimentConfig load_config(const ConfigArgs& args) {
  if (args.config_path.empty() && args.preset.empty())
    throw std::invalid_argument("provide --config or --preset");
  if (!args.config_path.empty() && !args.preset.empty())
    throw std::invalid_argument("--config and --preset are mutually exclusive");

  gbx::ExperimentConfig cfg;
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) throw std::invalid_argument("cannot read config file " + args.config_path);
    std::ostringstream text;
    text << in.rdbuf();
    cfg = gbx::parse_config(text.str());
  } else {
    cfg = gbx::preset_case(args.preset);
  }

  for (const std::string& kv : args.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("override '" + kv + "' is not key=value");
    gbx::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

int cmd_run(const ConfigArgs& args) {
  const gbx::ExperimentConfig cfg = load_config(args);
  const gbx::RunResult result = gbx::run(cfg);

  std::cout << "wrote artifacts to " << result.out_dir.string() << '\n';
  for (const auto& err : result.final_errors)
    std::printf("final error m=%g: e_z=%.6g e_dz=%.6g total=%.6g\n", err.order, err.e_z,
                err.e_dz, err.total);

  if (result.outcome == gbx::RunOutcome::blew_up) {
    std::printf("status: blew-up t=%.6g max|z|=%.6g\n", result.blowup->time,
                result.blowup->max_amplitude);
    return kExitBlowup;
  }
  std::printf("status: completed t=%.6g\n", result.final_state.t);
  return 0;
}

int cmd_converge(const ConfigArgs& args, const std::string& mode_name,
                 const std::vector<double>& levels) {
  const gbx::ExperimentConfig cfg = load_config(args);
  const auto mode = mode_name == "space" ? gbx::SweepMode::space : gbx::SweepMode::time;
  const gbx::SweepResult result = gbx::converge(cfg, mode, levels);

  for (const auto& level : result.levels) {
    std::printf("step=%-12g", level.step);
    if (level.diverged) {
      std::printf(" diverged\n");
      continue;
    }
    for (std::size_t mi = 0; mi < result.m_orders.size(); ++mi)
      std::printf(" e_%g=%.6e", result.m_orders[mi], level.errors[mi]);
    std::printf("\n");
  }
  for (std::size_t mi = 0; mi < result.m_orders.size(); ++mi)
    std::printf("fitted order m=%g: %.4f (max residual %.3g)\n", result.m_orders[mi],
                result.fits[mi].slope, result.fits[mi].max_residual);
  std::cout << "order table: " << result.table_path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential-integrator Fourier pseudospectral solver for the "
               "\"good\" Boussinesq equation"};
  app.require_subcommand(1);

  ConfigArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "execute one experiment");
  add_config_options(run_cmd, run_args);

  ConfigArgs conv_args;
  std::string mode = "time";
  std::vector<double> levels;
  CLI::App* conv_cmd = app.add_subcommand("converge", "convergence-order sweep");
  add_config_options(conv_cmd, conv_args);
  conv_cmd->add_option("--mode", mode, "time (vary tau) or space (vary M)")
      ->check(CLI::IsMember({"time", "space"}));
  conv_cmd->add_option("--levels", levels, "tau values (time) or mode counts (space)")
      ->delimiter(',')
      ->required();

  CLI::App* presets_cmd = app.add_subcommand("presets", "list preset ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets_cmd->parsed()) {
      for (const auto& id : gbx::preset_ids()) std::cout << id << '\n';
      return 0;
    }
    if (run_cmd->parsed()) return cmd_run(run_args);
    if (conv_cmd->parsed()) return cmd_converge(conv_args, mode, levels);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
