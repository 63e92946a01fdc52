#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbx/config.hpp"
#include "gbx/diagnostics.hpp"
#include "gbx/integrator.hpp"
#include "gbx/solutions.hpp"

namespace gbx {

// Builds the configured initial-data family on the configured grid.
InitialData make_initial_data(const ExperimentConfig& config, const TorusGrid& grid);

// Closed-form solution when the config describes one (single traveling
// soliton); nullopt otherwise.
std::optional<ExactSolution> exact_solution_for(const ExperimentConfig& config);

enum class RunOutcome { completed, blew_up };

struct RunResult {
  RunOutcome outcome = RunOutcome::completed;
  std::optional<BlowupRecord> blowup;
  WaveState final_state;
  std::vector<ErrorReport> final_errors;  // one per requested m; empty without exact solution
  std::filesystem::path out_dir;
};

// Executes one run: writes snapshots (x,z,dz per row), the mass and
// amplitude series, and, when an exact solution exists, the error series.
// Output is deterministic: identical configs produce bit-identical files.
RunResult run(const ExperimentConfig& config);

enum class SweepMode { time, space };

struct SweepLevel {
  double step = 0.0;  // tau (time mode) or h (space mode)
  std::vector<double> errors;  // total e_m per requested m; empty if diverged
  bool diverged = false;
};

struct SweepResult {
  SweepMode mode = SweepMode::time;
  std::vector<double> m_orders;
  std::vector<SweepLevel> levels;
  std::vector<OrderFit> fits;  // per m, over non-diverged levels (>= 3 required)
  std::filesystem::path table_path;
};

// Convergence sweep against the exact solution: time mode varies tau at fixed
// h, space mode varies M at fixed tau.  levels are tau values (time) or mode
// counts (space).  Levels run as independent jobs; the order table is
// assembled afterwards and written to out_dir.
SweepResult converge(const ExperimentConfig& base, SweepMode mode,
                     std::span<const double> levels);

}  // namespace gbx
