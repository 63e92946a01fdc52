#include "gbx/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "g17.hpp"
#include "gbx/errors.hpp"

namespace fs = std::filesystem;

namespace gbx {

namespace {

using detail::g17;

constexpr std::int64_t kBlowupCheckStride = 10;

std::string snapshot_name(std::int64_t step) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "snapshot_%09lld.csv", static_cast<long long>(step));
  return buf;
}

std::ofstream open_csv(const fs::path& dir, const std::string& name, const char* header) {
  std::ofstream out(dir / name, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file " + (dir / name).string());
  out << header << '\n';
  return out;
}

void write_snapshot(const fs::path& dir, std::int64_t step, const TorusGrid& grid,
                    std::span<const double> z, std::span<const double> dz) {
  std::ofstream out(dir / snapshot_name(step), std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open snapshot file in " + dir.string());
  out << "x,z,dz\n";
  for (int j = 0; j < grid.modes(); ++j)
    out << g17(grid.node(j)) << ',' << g17(z[j]) << ',' << g17(dz[j]) << '\n';
}

double effective_tau(const ExperimentConfig& cfg, std::int64_t n_steps) {
  if (cfg.strict_steps || n_steps == 0) return cfg.tau;
  return cfg.horizon / static_cast<double>(n_steps);
}

}  // namespace

InitialData make_initial_data(const ExperimentConfig& cfg, const TorusGrid& grid) {
  if (cfg.family == "single")
    return initial_single(grid, cfg.amplitude, cfg.x0, cfg.static_pulse ? 0 : cfg.v_sign);
  if (cfg.family == "pair")
    return initial_pair(grid, cfg.a1, cfg.a2, cfg.x1, cfg.x2, cfg.v1_sign, cfg.v2_sign);
  throw std::invalid_argument("make_initial_data: unknown family '" + cfg.family + "'");
}

std::optional<ExactSolution> exact_solution_for(const ExperimentConfig& cfg) {
  if (cfg.family != "single" || cfg.static_pulse) return std::nullopt;
  const SolitonParams p{cfg.amplitude, cfg.x0, soliton_velocity(cfg.amplitude, cfg.v_sign)};
  ExactSolution exact;
  exact.z = [p](double x, double t) { return soliton(x, t, p); };
  exact.dz = [p](double x, double t) { return soliton_time_derivative(x, t, p); };
  return exact;
}

RunResult run(const ExperimentConfig& cfg) {
  cfg.validate();
  const TorusGrid grid(cfg.a, cfg.b, cfg.modes);
  const std::int64_t n_steps = cfg.step_count();
  const double tau = effective_tau(cfg, n_steps);

  const fs::path out_dir(cfg.out_dir);
  fs::create_directories(out_dir);

  const InitialData init = make_initial_data(cfg, grid);
  const auto exact = exact_solution_for(cfg);

  Dft dft(grid);
  Stepper stepper(grid, tau, Nonlinearity::by_name(cfg.nonlinearity));
  WaveState state = make_wave_state(dft, init.z0, init.z1);

  // Step-0 snapshot comes from the sampled initial data, not from a transform
  // round trip, so a zero-step run reproduces its input bit for bit.
  write_snapshot(out_dir, 0, grid, init.z0.values(), init.z1.values());

  auto mass_csv = open_csv(out_dir, "mass.csv", "t,mass");
  auto amp_csv = open_csv(out_dir, "amplitude.csv", "t,amplitude");
  std::ofstream err_csv;
  if (exact) err_csv = open_csv(out_dir, "errors.csv", "t,m,e_z,e_dz,total");

  constexpr double kNoRealnessCheck = std::numeric_limits<double>::infinity();

  std::vector<Observer> observers;
  observers.push_back({cfg.series_stride, [&](std::int64_t, const WaveState& s) {
                         mass_csv << g17(s.t) << ',' << g17(mass(s)) << '\n';
                         const NodalField z = dft.inverse(s.zhat, kNoRealnessCheck);
                         amp_csv << g17(s.t) << ',' << g17(z.max_abs()) << '\n';
                         if (exact)
                           for (double m : cfg.m_orders) {
                             const ErrorReport r = error_pair(dft, s, *exact, m);
                             err_csv << g17(r.t) << ',' << g17(r.order) << ',' << g17(r.e_z)
                                     << ',' << g17(r.e_dz) << ',' << g17(r.total) << '\n';
                           }
                         return false;
                       }});

  observers.push_back({cfg.snapshot_stride, [&](std::int64_t k, const WaveState& s) {
                         if (k == 0) return false;  // written above
                         const NodalField z = dft.inverse(s.zhat, kNoRealnessCheck);
                         const NodalField dz = dft.inverse(s.dzhat, kNoRealnessCheck);
                         write_snapshot(out_dir, k, grid, z.values(), dz.values());
                         return false;
                       }});

  const BlowupPolicy policy{cfg.blowup_threshold, kBlowupCheckStride};
  std::optional<BlowupRecord> blowup;
  observers.push_back({policy.check_stride, [&](std::int64_t, const WaveState& s) {
                         blowup = detect_blowup(s, policy, dft);
                         return blowup.has_value();
                       }});

  state = stepper.evolve(std::move(state), n_steps, observers);

  RunResult result{RunOutcome::completed, std::nullopt, state, {}, out_dir};
  if (state.diverged) {
    result.outcome = RunOutcome::blew_up;
    if (!blowup) {
      // Halted on non-finite values between detector checks; report from the
      // preserved last finite state.
      const NodalField z = dft.inverse(state.zhat, kNoRealnessCheck);
      blowup = BlowupRecord{state.t, z.max_abs()};
    }
    result.blowup = blowup;
    const auto last_step = static_cast<std::int64_t>(std::llround((state.t - 0.0) / tau));
    const NodalField z = dft.inverse(state.zhat, kNoRealnessCheck);
    const NodalField dz = dft.inverse(state.dzhat, kNoRealnessCheck);
    write_snapshot(out_dir, last_step, grid, z.values(), dz.values());
  } else if (n_steps > 0) {
    const NodalField z = dft.inverse(state.zhat, kNoRealnessCheck);
    const NodalField dz = dft.inverse(state.dzhat, kNoRealnessCheck);
    write_snapshot(out_dir, n_steps, grid, z.values(), dz.values());
    if (exact)
      for (double m : cfg.m_orders)
        result.final_errors.push_back(error_pair(dft, state, *exact, m));
  }
  result.final_state = std::move(state);
  return result;
}

namespace {

struct LevelOutcome {
  std::vector<double> errors;
  bool diverged = false;
};

LevelOutcome run_level(const ExperimentConfig& cfg) {
  const TorusGrid grid(cfg.a, cfg.b, cfg.modes);
  const std::int64_t n_steps = cfg.step_count();
  const double tau = effective_tau(cfg, n_steps);

  const InitialData init = make_initial_data(cfg, grid);
  const auto exact = exact_solution_for(cfg);

  Dft dft(grid);
  Stepper stepper(grid, tau, Nonlinearity::by_name(cfg.nonlinearity));
  WaveState state = make_wave_state(dft, init.z0, init.z1);

  const BlowupPolicy policy{cfg.blowup_threshold, kBlowupCheckStride};
  const Observer detector{policy.check_stride, [&](std::int64_t, const WaveState& s) {
                            return detect_blowup(s, policy, dft).has_value();
                          }};
  state = stepper.evolve(std::move(state), n_steps, {&detector, 1});

  LevelOutcome out;
  if (state.diverged) {
    out.diverged = true;
    return out;
  }
  for (double m : cfg.m_orders) out.errors.push_back(error_pair(dft, state, *exact, m).total);
  return out;
}

}  // namespace

SweepResult converge(const ExperimentConfig& base, SweepMode mode,
                     std::span<const double> levels) {
  base.validate();
  if (!exact_solution_for(base))
    throw std::invalid_argument(
        "converge: requires an initial-data family with a closed-form solution "
        "(single traveling soliton)");
  if (levels.size() < 3)
    throw std::invalid_argument("converge: need at least 3 resolution levels");

  std::vector<ExperimentConfig> configs;
  for (double level : levels) {
    ExperimentConfig cfg = base;
    if (mode == SweepMode::time) {
      if (!(level > 0.0)) throw std::invalid_argument("converge: tau levels must be positive");
      cfg.tau = level;
    } else {
      const int modes = static_cast<int>(std::llround(level));
      if (modes < 4 || modes % 2 != 0)
        throw std::invalid_argument("converge: mode-count levels must be even and >= 4");
      cfg.modes = modes;
    }
    cfg.validate();
    configs.push_back(std::move(cfg));
  }

  // Levels are independent jobs; outputs are assembled in level order below.
  std::vector<std::future<LevelOutcome>> jobs;
  for (const auto& cfg : configs)
    jobs.push_back(std::async(std::launch::async, [&cfg] { return run_level(cfg); }));

  SweepResult result;
  result.mode = mode;
  result.m_orders = base.m_orders;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    LevelOutcome outcome = jobs[i].get();
    SweepLevel level;
    level.step = mode == SweepMode::time ? configs[i].tau : configs[i].mesh();
    level.errors = std::move(outcome.errors);
    level.diverged = outcome.diverged;
    result.levels.push_back(std::move(level));
  }

  for (std::size_t mi = 0; mi < result.m_orders.size(); ++mi) {
    std::vector<std::pair<double, double>> samples;
    for (const auto& level : result.levels)
      if (!level.diverged && level.errors[mi] > 0.0)
        samples.emplace_back(level.step, level.errors[mi]);
    if (samples.size() >= 3)
      result.fits.push_back(fit_order(samples));
    else
      result.fits.push_back({std::numeric_limits<double>::quiet_NaN(),
                             std::numeric_limits<double>::quiet_NaN()});
  }

  const fs::path out_dir(base.out_dir);
  fs::create_directories(out_dir);
  const std::string table_name =
      mode == SweepMode::time ? "order_time.csv" : "order_space.csv";

  std::ostringstream header;
  header << "level,step";
  for (double m : result.m_orders) header << ",e_" << g17(m);
  header << ",fitted_order";
  auto csv = open_csv(out_dir, table_name, header.str().c_str());

  const SweepLevel* prev_valid = nullptr;
  for (std::size_t i = 0; i < result.levels.size(); ++i) {
    const SweepLevel& level = result.levels[i];
    csv << i << ',' << g17(level.step);
    if (level.diverged) {
      for (std::size_t mi = 0; mi < result.m_orders.size(); ++mi) csv << ",diverged";
      csv << ",diverged\n";
      continue;
    }
    for (double e : level.errors) csv << ',' << g17(e);
    // Incremental observed order between consecutive levels, first m.
    if (prev_valid && level.errors[0] > 0.0 && prev_valid->errors[0] > 0.0 &&
        level.step != prev_valid->step)
      csv << ',' << g17(std::log(prev_valid->errors[0] / level.errors[0]) /
                        std::log(prev_valid->step / level.step));
    else
      csv << ',';
    csv << '\n';
    prev_valid = &level;
  }
  for (std::size_t mi = 0; mi < result.m_orders.size(); ++mi)
    csv << "# least-squares fitted order m=" << g17(result.m_orders[mi]) << ": "
        << g17(result.fits[mi].slope) << " (max residual " << g17(result.fits[mi].max_residual)
        << ")\n";

  result.table_path = out_dir / table_name;
  return result;
}

}  // namespace gbx
