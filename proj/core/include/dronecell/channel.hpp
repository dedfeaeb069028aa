#pragma once

#include <span>
#include <string>
#include <vector>

namespace dronecell {

enum class PathKind { LoS, NLoS };

[[nodiscard]] double dbm_to_watt(double dbm) noexcept;
[[nodiscard]] double watt_to_dbm(double watt) noexcept;
[[nodiscard]] double to_db(double ratio) noexcept;

/// Air-to-ground channel constants. Defaults are the urban small-cell values
/// used throughout the simulator (24 dBm, 10 MHz at 2 GHz, 9 dB UE noise
/// figure).
struct ChannelParams {
  double alpha = 9.61;
  double beta = 0.16;
  double a_los_db = 41.1;
  double a_nlos_db = 33.0;
  double gamma_los = 2.09;
  double gamma_nlos = 3.75;
  double p_tx_w = 0.251188643150958;  // 24 dBm
  double bandwidth_hz = 10e6;
  double carrier_hz = 2e9;
  double ue_noise_figure_db = 9.0;

  /// Throws std::invalid_argument naming the first non-positive field.
  /// Returns plausibility warnings (currently: gamma_nlos < gamma_los).
  [[nodiscard]] std::vector<std::string> validate() const;
};

/// Radio chain over a fixed ChannelParams. Linear path-loss intercepts and the
/// noise spectral density are derived once at construction.
///
/// All `interference` arguments are full-band expected powers in watts; the
/// victim's sub-band captures `band_fraction` of them, so SINR does not depend
/// on the allocation.
class Channel {
 public:
  explicit Channel(const ChannelParams& params = {});

  [[nodiscard]] const ChannelParams& params() const noexcept { return params_; }

  /// 10^(-A/10) for the given path state.
  [[nodiscard]] double intercept_linear(PathKind kind) const noexcept;
  /// Thermal plus UE noise density N' in W/Hz.
  [[nodiscard]] double noise_density() const noexcept { return noise_density_; }
  [[nodiscard]] double noise_power(double bandwidth_hz) const noexcept { return noise_density_ * bandwidth_hz; }
  [[nodiscard]] double full_band_noise() const noexcept { return noise_density_ * params_.bandwidth_hz; }

  /// Elevation angle arctan(h/r) in degrees; r = 0 is straight overhead.
  [[nodiscard]] static double elevation_deg(double h, double r) noexcept;

  [[nodiscard]] double los_probability(double h, double r) const noexcept;
  [[nodiscard]] double nlos_probability(double h, double r) const noexcept { return 1.0 - los_probability(h, r); }

  /// A + 10 gamma log10(d); d below the 1 m reference distance is evaluated at 1 m.
  [[nodiscard]] double path_loss_db(PathKind kind, double d) const noexcept;

  [[nodiscard]] double received_power(PathKind kind, double h, double r, double band_fraction) const noexcept;

  /// LoS/NLoS-weighted full-band received power; used for TDMA selection,
  /// interference and leakage.
  [[nodiscard]] double expected_received_power(double h, double r) const noexcept;

  [[nodiscard]] double snr(PathKind kind, double h, double r) const noexcept;

  [[nodiscard]] double sinr(PathKind kind, double h, double r_serving, std::span<const double> interferer_powers,
                            double band_fraction) const noexcept;

  /// Shannon SE of one path state against the given full-band interference.
  [[nodiscard]] double path_se(PathKind kind, double h, double r, double interference) const noexcept;

  /// P^LoS * SE_LoS + P^NLoS * SE_NLoS in bps/Hz.
  [[nodiscard]] double expected_se(double h, double r_serving, double interference, double band_fraction) const noexcept;
  [[nodiscard]] double expected_se(double h, double r_serving) const noexcept { return expected_se(h, r_serving, 0.0, 1.0); }

 private:
  ChannelParams params_;
  double los_intercept_;
  double nlos_intercept_;
  double noise_density_;
};

}  // namespace dronecell
