#include "gbx/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gbx/errors.hpp"

namespace gbx {

double sobolev_norm(const SpectrumField& spectrum, double order) {
  if (!spectrum.all_finite())
    throw divergence_error("sobolev_norm: non-finite coefficients");

  const TorusGrid& g = spectrum.grid();
  double sum = 0.0;
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    const double mu = g.mu(l);
    const double w = std::pow(1.0 + mu * mu, order);
    sum += w * std::norm(spectrum[l]);
  }
  return std::sqrt(sum);
}

ErrorReport error_pair(const Dft& dft, const WaveState& state, const ExactSolution& exact,
                       double order) {
  if (state.diverged)
    throw divergence_error("error_pair: state diverged at step " +
                           std::to_string(state.diverged_step) + " (t = " +
                           std::to_string(state.t) + ")");

  // No realness policing here: for data with a null velocity component the
  // dz field is pure discretization noise, far below the scale at which the
  // stepper injects roundoff asymmetry, so a field-relative residue check is
  // ill-posed.  Finiteness is still enforced.
  constexpr double kNoRealnessCheck = std::numeric_limits<double>::infinity();
  const TorusGrid& g = state.grid();
  NodalField z_num = dft.inverse(state.zhat, kNoRealnessCheck);
  NodalField dz_num = dft.inverse(state.dzhat, kNoRealnessCheck);

  NodalField z_diff(g), dz_diff(g);
  for (int j = 0; j < g.modes(); ++j) {
    const double x = g.node(j);
    z_diff[j] = z_num[j] - exact.z(x, state.t);
    dz_diff[j] = dz_num[j] - exact.dz(x, state.t);
  }

  ErrorReport report;
  report.order = order;
  report.t = state.t;
  report.e_z = sobolev_norm(dft.forward(z_diff), order);
  report.e_dz = sobolev_norm(dft.forward(dz_diff), order - 2.0);
  report.total = report.e_z + report.e_dz;
  return report;
}

double mass(const WaveState& state) {
  if (state.diverged)
    throw divergence_error("mass: state diverged at step " +
                           std::to_string(state.diverged_step));
  return state.grid().length() * state.zhat[0].real();
}

double aliasing_fraction(const SpectrumField& spectrum) {
  if (!spectrum.all_finite())
    throw divergence_error("aliasing_fraction: non-finite coefficients");
  const TorusGrid& g = spectrum.grid();
  const int cutoff = g.modes() / 3;
  double total = 0.0, band = 0.0;
  for (int l = g.min_mode(); l <= g.max_mode(); ++l) {
    const double e = std::norm(spectrum[l]);
    total += e;
    if (std::abs(l) > cutoff) band += e;
  }
  return total > 0.0 ? band / total : 0.0;
}

std::optional<BlowupRecord> detect_blowup(const WaveState& state, const BlowupPolicy& policy,
                                          const Dft& dft) {
  if (!(policy.threshold > 0.0))
    throw std::invalid_argument("BlowupPolicy: threshold must be positive");

  if (state.diverged || !state.zhat.all_finite() || !state.dzhat.all_finite())
    return BlowupRecord{state.t, std::numeric_limits<double>::infinity()};

  // Realness is not this detector's concern; never throw while diagnosing.
  NodalField z = dft.inverse(state.zhat, std::numeric_limits<double>::infinity());
  if (!z.all_finite())
    return BlowupRecord{state.t, std::numeric_limits<double>::infinity()};

  const double amp = z.max_abs();
  if (amp >= policy.threshold) return BlowupRecord{state.t, amp};
  return std::nullopt;
}

std::optional<BlowupRecord> detect_blowup(const WaveState& state, const BlowupPolicy& policy) {
  if (state.diverged || !state.zhat.all_finite() || !state.dzhat.all_finite())
    return BlowupRecord{state.t, std::numeric_limits<double>::infinity()};
  Dft dft(state.grid());
  return detect_blowup(state, policy, dft);
}

OrderFit fit_order(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 3)
    throw std::invalid_argument("fit_order: need at least 3 samples");

  double sx = 0.0, sy = 0.0;
  for (const auto& [step, error] : samples) {
    if (!(step > 0.0) || !(error > 0.0))
      throw std::invalid_argument("fit_order: steps and errors must be positive");
    sx += std::log(step);
    sy += std::log(error);
  }
  const double n = static_cast<double>(samples.size());
  const double mx = sx / n, my = sy / n;

  double sxx = 0.0, sxy = 0.0;
  for (const auto& [step, error] : samples) {
    const double dx = std::log(step) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(error) - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_order: all step sizes equal");

  OrderFit fit;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  for (const auto& [step, error] : samples) {
    const double resid = std::log(error) - (intercept + fit.slope * std::log(step));
    fit.max_residual = std::max(fit.max_residual, std::abs(resid));
  }
  return fit;
}

}  // namespace gbx
