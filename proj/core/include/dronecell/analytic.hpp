#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dronecell/channel.hpp"

namespace dronecell::analytic {

/// One drone serving one static user placed uniformly in a disk of radius R.
/// `tau_s` is the download duration, treated as an independent variable.
struct AnalyticScenario {
  double radius_m = 40.0;
  double height_m = 10.0;
  double speed_mps = 10.0;
  double tau_s = 1.0;
  ChannelParams channel;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature over [a, b]. Throws
/// QuadratureError unless the error estimate is within
/// max(1e-9, 1e-6 * |result|).
[[nodiscard]] double integrate(const std::function<double(double)>& f, double a, double b);

/// SE of a drone hovering over the disk center for a user at ground distance r0.
[[nodiscard]] double hover_se_at(const AnalyticScenario& scn, double r0);

/// hover_se_at averaged over the uniform-disk density 2r/R^2.
[[nodiscard]] double hover_se_expected(const AnalyticScenario& scn);

/// Drone flies straight at the user for t_m = min(r0/v, tau), then hovers
/// overhead for the rest of tau. Time-average SE over the download.
[[nodiscard]] double mobile_se_at(const AnalyticScenario& scn, double r0);

[[nodiscard]] double mobile_se_expected(const AnalyticScenario& scn);

struct BoundResult {
  double ratio = 0.0;
  double overhead_los_snr = 0.0;  // linear, at d = h
  double edge_nlos_snr = 0.0;     // linear, at d = R
  /// Both SNRs exceed 10 dB; the approximation behind the bound needs this.
  bool high_snr = false;
};

/// Approximate ceiling of mobile/hover SE: overhead LoS log-SNR over the
/// cell-edge NLoS log-SNR.
[[nodiscard]] BoundResult theorem1_bound(const AnalyticScenario& scn);

struct SweepRow {
  double tau_s;
  double speed_mps;
  double height_m;
  double radius_m;
  double hover_se;
  double mobile_se;
  double ratio;
  double bound;
};

/// Cartesian sweep, tau varying fastest within each speed.
[[nodiscard]] std::vector<SweepRow> sweep(const AnalyticScenario& base, std::span<const double> taus,
                                          std::span<const double> speeds);

}  // namespace dronecell::analytic
